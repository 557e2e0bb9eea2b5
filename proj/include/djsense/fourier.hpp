#pragma once

#include "djsense/types.hpp"

namespace djsense {

/* Centered orthonormal 2-D Fourier transforms and the padded image-domain
 * realization of k-space linear convolution.
 *
 * Conventions:
 *   - fft2c(x)  = fftshift(DFT(ifftshift(x))) / sqrt(H*W)
 *   - ifft2c(x) = fftshift(IDFT(ifftshift(x))) * sqrt(H*W)
 *   - the center sample of a dimension of size n sits at index floor(n/2)
 * Orthonormal scaling makes Parseval exact in both directions.
 */

ComplexGrid fft2c(const ComplexGrid &x);
ComplexGrid ifft2c(const ComplexGrid &x);

// Zero-pads so the input's center sample lands on the output's center sample.
ComplexGrid pad_center(const ComplexGrid &x, int out_h, int out_w);

// Extracts the centered window; exact inverse (and adjoint) of pad_center.
ComplexGrid crop_center(const ComplexGrid &x, int out_h, int out_w);

/* Linear convolution of a small odd-sized kernel with an H x W grid,
 * restricted to the centered H x W window of the full
 * (H+kh-1) x (W+kw-1) result. Computed by padding both operands to the
 * full size, pointwise multiplication in the image domain with a
 * sqrt(P*Q) factor undoing the orthonormal normalization, and cropping.
 */
ComplexGrid kspace_linear_conv(const ComplexGrid &kernel, const ComplexGrid &other);

/* Correlation with the conjugated first argument, i.e. the adjoint of
 * kspace_linear_conv in whichever argument is treated as the variable:
 *   <conv(k, x), y> = <x, corr(k, y, dims of x)>   (k fixed)
 *   <conv(s, m), y> = <s, corr(m, y, dims of s)>   (m fixed)
 * The output is the centered out_h x out_w window.
 */
ComplexGrid kspace_linear_corr(const ComplexGrid &kernel, const ComplexGrid &other,
                               int out_h, int out_w);

}  // namespace djsense
