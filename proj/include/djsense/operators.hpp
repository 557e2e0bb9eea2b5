#pragma once

#include "djsense/cg.hpp"
#include "djsense/types.hpp"

namespace djsense {

/* Measurement operators of the bilinear forward model k_i = s_i * m:
 * A_m (maps fixed, image variable) and A_s (image fixed, maps variable),
 * their adjoints and the regularized normal operators solved by CG.
 * The mask is applied inside both forward and adjoint, so CG sees only
 * acquired samples.
 */

// Zeroes samples in unsampled columns; sampled columns pass through.
MulticoilKSpace apply_mask(const SamplingMask &mask, const MulticoilKSpace &data);

// Unmasked forward model: coil i = kspace_linear_conv(s_i, m).
MulticoilKSpace forward_full(const MapKernelSet &maps, const ImageKernel &image);

MulticoilKSpace forward_m(const MapKernelSet &maps, const SamplingMask &mask,
                          const ImageKernel &image);
ImageKernel adjoint_m(const MapKernelSet &maps, const SamplingMask &mask,
                      const MulticoilKSpace &y);
// A_m^H A_m x + 2 lambda x
ImageKernel normal_m(const MapKernelSet &maps, const SamplingMask &mask, double lambda,
                     const ImageKernel &image);

// Block-diagonal across coils: coil i depends only on kernel i.
MulticoilKSpace forward_s(const ImageKernel &image, const SamplingMask &mask,
                          const MapKernelSet &maps);
MapKernelSet adjoint_s(const ImageKernel &image, const SamplingMask &mask, int kernel_h,
                       int kernel_w, const MulticoilKSpace &y);
MapKernelSet normal_s(const ImageKernel &image, const SamplingMask &mask, double lambda,
                      const MapKernelSet &maps);

// Flat-vector views used by the CG solver.
CVec flatten(const ImageKernel &image);
CVec flatten(const MapKernelSet &maps);
ImageKernel unflatten_image(const CVec &v, int h, int w);
MapKernelSet unflatten_maps(const CVec &v, int coils, int kh, int kw);

}  // namespace djsense
