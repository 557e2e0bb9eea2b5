#include "djsense/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace djsense {

namespace {

/* Plans are cached per (h, w, sign) and reused via fftw_execute_dft.
 * FFTW_ESTIMATE keeps planning deterministic; FFTW_UNALIGNED lets the
 * cached plan run on any caller buffer.
 */
fftw_plan plan_for(int h, int w, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(h, w, sign);
  auto it = cache.find(key);
  if (it != cache.end())
    return it->second;
  std::vector<Complex> scratch_in(static_cast<std::size_t>(h) * w);
  std::vector<Complex> scratch_out(scratch_in.size());
  fftw_plan plan = fftw_plan_dft_2d(h, w, reinterpret_cast<fftw_complex *>(scratch_in.data()),
                                    reinterpret_cast<fftw_complex *>(scratch_out.data()), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, plan);
  return plan;
}

// y[r][c] = x[(r + sh) % h][(c + sw) % w]
ComplexGrid roll(const ComplexGrid &x, int sh, int sw) {
  ComplexGrid y(x.height, x.width);
  for (int r = 0; r < x.height; ++r) {
    const int rs = (r + sh) % x.height;
    for (int c = 0; c < x.width; ++c)
      y.at(r, c) = x.at(rs, (c + sw) % x.width);
  }
  return y;
}

ComplexGrid ifftshift2(const ComplexGrid &x) { return roll(x, x.height / 2, x.width / 2); }

ComplexGrid fftshift2(const ComplexGrid &x) {
  return roll(x, x.height - x.height / 2, x.width - x.width / 2);
}

ComplexGrid transform_centered(const ComplexGrid &x, int sign) {
  ComplexGrid shifted = ifftshift2(x);
  ComplexGrid out(x.height, x.width);
  fftw_execute_dft(plan_for(x.height, x.width, sign),
                   reinterpret_cast<fftw_complex *>(shifted.data.data()),
                   reinterpret_cast<fftw_complex *>(out.data.data()));
  ComplexGrid centered = fftshift2(out);
  const double scale = 1.0 / std::sqrt(static_cast<double>(x.height) * x.width);
  for (auto &v : centered.data) v *= scale;
  return centered;
}

void check_kernel_dims(const ComplexGrid &kernel, const ComplexGrid &other) {
  if (kernel.height % 2 == 0 || kernel.width % 2 == 0)
    throw std::invalid_argument("kspace_linear_conv: kernel dimensions must be odd");
  if (kernel.height > other.height || kernel.width > other.width)
    throw std::invalid_argument("kspace_linear_conv: kernel larger than grid");
}

}  // namespace

ComplexGrid fft2c(const ComplexGrid &x) { return transform_centered(x, FFTW_FORWARD); }

ComplexGrid ifft2c(const ComplexGrid &x) { return transform_centered(x, FFTW_BACKWARD); }

ComplexGrid pad_center(const ComplexGrid &x, int out_h, int out_w) {
  if (out_h < x.height || out_w < x.width)
    throw std::invalid_argument("pad_center: output dimensions smaller than input");
  ComplexGrid y(out_h, out_w);
  const int r0 = out_h / 2 - x.height / 2;
  const int c0 = out_w / 2 - x.width / 2;
  for (int r = 0; r < x.height; ++r)
    for (int c = 0; c < x.width; ++c)
      y.at(r + r0, c + c0) = x.at(r, c);
  return y;
}

ComplexGrid crop_center(const ComplexGrid &x, int out_h, int out_w) {
  if (out_h > x.height || out_w > x.width)
    throw std::invalid_argument("crop_center: output dimensions larger than input");
  if (out_h < 1 || out_w < 1)
    throw std::invalid_argument("crop_center: output dimensions must be positive");
  ComplexGrid y(out_h, out_w);
  const int r0 = x.height / 2 - out_h / 2;
  const int c0 = x.width / 2 - out_w / 2;
  for (int r = 0; r < out_h; ++r)
    for (int c = 0; c < out_w; ++c)
      y.at(r, c) = x.at(r + r0, c + c0);
  return y;
}

ComplexGrid kspace_linear_conv(const ComplexGrid &kernel, const ComplexGrid &other) {
  check_kernel_dims(kernel, other);
  const int p = other.height + kernel.height - 1;
  const int q = other.width + kernel.width - 1;
  ComplexGrid u = ifft2c(pad_center(kernel, p, q));
  ComplexGrid v = ifft2c(pad_center(other, p, q));
  const double scale = std::sqrt(static_cast<double>(p) * q);
  for (std::size_t i = 0; i < u.data.size(); ++i)
    u.data[i] = u.data[i] * v.data[i] * scale;
  return crop_center(fft2c(u), other.height, other.width);
}

ComplexGrid kspace_linear_corr(const ComplexGrid &kernel, const ComplexGrid &other,
                               int out_h, int out_w) {
  const int p = other.height + kernel.height - 1;
  const int q = other.width + kernel.width - 1;
  if (out_h < 1 || out_w < 1 || out_h > p || out_w > q)
    throw std::invalid_argument("kspace_linear_corr: bad output dimensions");
  ComplexGrid u = ifft2c(pad_center(kernel, p, q));
  ComplexGrid v = ifft2c(pad_center(other, p, q));
  const double scale = std::sqrt(static_cast<double>(p) * q);
  for (std::size_t i = 0; i < u.data.size(); ++i)
    u.data[i] = std::conj(u.data[i]) * v.data[i] * scale;
  return crop_center(fft2c(u), out_h, out_w);
}

}  // namespace djsense
