#include "djsense/operators.hpp"

#include "djsense/fourier.hpp"

namespace djsense {

namespace {

void check_grid_mask(const SamplingMask &mask, const MulticoilKSpace &data) {
  data.validate();
  if (mask.height != data.height() || mask.width != data.width())
    throw std::invalid_argument("mask dimensions do not match k-space grid");
}

void check_kernels_fit(const MapKernelSet &maps, int h, int w) {
  maps.validate();
  if (maps.kernel_height() > h || maps.kernel_width() > w)
    throw std::invalid_argument("map kernel larger than acquisition grid");
}

}  // namespace

MulticoilKSpace apply_mask(const SamplingMask &mask, const MulticoilKSpace &data) {
  check_grid_mask(mask, data);
  MulticoilKSpace out = data;
  for (auto &grid : out.coils)
    for (int r = 0; r < grid.height; ++r)
      for (int c = 0; c < grid.width; ++c)
        if (!mask.sampled(c))
          grid.at(r, c) = Complex(0.0, 0.0);
  return out;
}

MulticoilKSpace forward_full(const MapKernelSet &maps, const ImageKernel &image) {
  check_kernels_fit(maps, image.grid.height, image.grid.width);
  MulticoilKSpace out(maps.num_coils(), image.grid.height, image.grid.width);
  for (int i = 0; i < maps.num_coils(); ++i)
    out.coils[static_cast<std::size_t>(i)] =
        kspace_linear_conv(maps.kernels[static_cast<std::size_t>(i)], image.grid);
  return out;
}

MulticoilKSpace forward_m(const MapKernelSet &maps, const SamplingMask &mask,
                          const ImageKernel &image) {
  if (mask.height != image.grid.height || mask.width != image.grid.width)
    throw std::invalid_argument("forward_m: mask dimensions do not match image kernel");
  return apply_mask(mask, forward_full(maps, image));
}

ImageKernel adjoint_m(const MapKernelSet &maps, const SamplingMask &mask,
                      const MulticoilKSpace &y) {
  check_grid_mask(mask, y);
  check_kernels_fit(maps, y.height(), y.width());
  const MulticoilKSpace masked = apply_mask(mask, y);
  ImageKernel out(y.height(), y.width());
  for (int i = 0; i < maps.num_coils(); ++i) {
    ComplexGrid term = kspace_linear_corr(maps.kernels[static_cast<std::size_t>(i)],
                                          masked.coils[static_cast<std::size_t>(i)], y.height(),
                                          y.width());
    for (std::size_t j = 0; j < out.grid.data.size(); ++j)
      out.grid.data[j] += term.data[j];
  }
  return out;
}

ImageKernel normal_m(const MapKernelSet &maps, const SamplingMask &mask, double lambda,
                     const ImageKernel &image) {
  if (lambda < 0.0)
    throw std::invalid_argument("normal_m: lambda must be nonnegative");
  ImageKernel out = adjoint_m(maps, mask, forward_m(maps, mask, image));
  for (std::size_t j = 0; j < out.grid.data.size(); ++j)
    out.grid.data[j] += 2.0 * lambda * image.grid.data[j];
  return out;
}

MulticoilKSpace forward_s(const ImageKernel &image, const SamplingMask &mask,
                          const MapKernelSet &maps) {
  check_kernels_fit(maps, image.grid.height, image.grid.width);
  if (mask.height != image.grid.height || mask.width != image.grid.width)
    throw std::invalid_argument("forward_s: mask dimensions do not match image kernel");
  return apply_mask(mask, forward_full(maps, image));
}

MapKernelSet adjoint_s(const ImageKernel &image, const SamplingMask &mask, int kernel_h,
                       int kernel_w, const MulticoilKSpace &y) {
  check_grid_mask(mask, y);
  if (image.grid.height != y.height() || image.grid.width != y.width())
    throw std::invalid_argument("adjoint_s: image dimensions do not match k-space grid");
  const MulticoilKSpace masked = apply_mask(mask, y);
  MapKernelSet out(y.num_coils(), kernel_h, kernel_w);
  for (int i = 0; i < y.num_coils(); ++i)
    out.kernels[static_cast<std::size_t>(i)] = kspace_linear_corr(
        image.grid, masked.coils[static_cast<std::size_t>(i)], kernel_h, kernel_w);
  return out;
}

MapKernelSet normal_s(const ImageKernel &image, const SamplingMask &mask, double lambda,
                      const MapKernelSet &maps) {
  if (lambda < 0.0)
    throw std::invalid_argument("normal_s: lambda must be nonnegative");
  MapKernelSet out = adjoint_s(image, mask, maps.kernel_height(), maps.kernel_width(),
                               forward_s(image, mask, maps));
  for (int i = 0; i < maps.num_coils(); ++i) {
    auto &dst = out.kernels[static_cast<std::size_t>(i)].data;
    const auto &src = maps.kernels[static_cast<std::size_t>(i)].data;
    for (std::size_t j = 0; j < dst.size(); ++j)
      dst[j] += 2.0 * lambda * src[j];
  }
  return out;
}

CVec flatten(const ImageKernel &image) { return image.grid.data; }

CVec flatten(const MapKernelSet &maps) {
  CVec v;
  v.reserve(static_cast<std::size_t>(maps.num_coils()) * maps.kernel_height() *
            maps.kernel_width());
  for (const auto &k : maps.kernels)
    v.insert(v.end(), k.data.begin(), k.data.end());
  return v;
}

ImageKernel unflatten_image(const CVec &v, int h, int w) {
  if (v.size() != static_cast<std::size_t>(h) * static_cast<std::size_t>(w))
    throw std::invalid_argument("unflatten_image: size mismatch");
  ImageKernel out(h, w);
  out.grid.data = v;
  return out;
}

MapKernelSet unflatten_maps(const CVec &v, int coils, int kh, int kw) {
  const std::size_t per = static_cast<std::size_t>(kh) * kw;
  if (v.size() != per * static_cast<std::size_t>(coils))
    throw std::invalid_argument("unflatten_maps: size mismatch");
  MapKernelSet out(coils, kh, kw);
  for (int i = 0; i < coils; ++i)
    out.kernels[static_cast<std::size_t>(i)].data.assign(v.begin() + static_cast<long>(per) * i,
                                                         v.begin() + static_cast<long>(per) * (i + 1));
  return out;
}

}  // namespace djsense
