#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace djsense {

using Complex = std::complex<double>;

/* H x W row-major complex samples. Carries both k-space slices and
 * image-domain data. All public operations keep every component finite.
 */
struct ComplexGrid {
  int height = 0;
  int width = 0;
  std::vector<Complex> data;

  ComplexGrid() = default;
  ComplexGrid(int h, int w) : height(h), width(w) {
    if (h < 1 || w < 1)
      throw std::invalid_argument("ComplexGrid: dimensions must be positive");
    data.assign(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), Complex(0.0, 0.0));
  }

  std::size_t size() const { return data.size(); }

  Complex &at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
  const Complex &at(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }

  bool same_dims(const ComplexGrid &other) const {
    return height == other.height && width == other.width;
  }
};

/* H x W row-major real samples (magnitude images, denoiser channels). */
struct RealGrid {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  RealGrid() = default;
  RealGrid(int h, int w) : height(h), width(w) {
    if (h < 1 || w < 1)
      throw std::invalid_argument("RealGrid: dimensions must be positive");
    data.assign(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), 0.0);
  }

  std::size_t size() const { return data.size(); }
  double &at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }
};

/* C stacked grids of identical dimensions; houses measured data y,
 * ground-truth k and per-coil model outputs.
 */
struct MulticoilKSpace {
  std::vector<ComplexGrid> coils;

  MulticoilKSpace() = default;
  MulticoilKSpace(int num_coils, int h, int w) {
    if (num_coils < 1)
      throw std::invalid_argument("MulticoilKSpace: need at least one coil");
    coils.assign(static_cast<std::size_t>(num_coils), ComplexGrid(h, w));
  }

  int num_coils() const { return static_cast<int>(coils.size()); }
  int height() const { return coils.empty() ? 0 : coils.front().height; }
  int width() const { return coils.empty() ? 0 : coils.front().width; }

  void validate() const {
    if (coils.empty())
      throw std::invalid_argument("MulticoilKSpace: need at least one coil");
    for (const auto &g : coils)
      if (!g.same_dims(coils.front()))
        throw std::invalid_argument("MulticoilKSpace: coil dimensions differ");
  }
};

/* The magnetization variable m: full-grid k-space kernel. */
struct ImageKernel {
  ComplexGrid grid;

  ImageKernel() = default;
  explicit ImageKernel(ComplexGrid g) : grid(std::move(g)) {}
  ImageKernel(int h, int w) : grid(h, w) {}
};

/* The sensitivity variable s: C small k-space kernels, odd dims so the
 * center sample is unambiguous.
 */
struct MapKernelSet {
  std::vector<ComplexGrid> kernels;

  MapKernelSet() = default;
  MapKernelSet(int num_coils, int kh, int kw) {
    if (num_coils < 1)
      throw std::invalid_argument("MapKernelSet: need at least one coil");
    if (kh % 2 == 0 || kw % 2 == 0)
      throw std::invalid_argument("MapKernelSet: kernel dimensions must be odd");
    kernels.assign(static_cast<std::size_t>(num_coils), ComplexGrid(kh, kw));
  }

  int num_coils() const { return static_cast<int>(kernels.size()); }
  int kernel_height() const { return kernels.empty() ? 0 : kernels.front().height; }
  int kernel_width() const { return kernels.empty() ? 0 : kernels.front().width; }

  void validate() const {
    if (kernels.empty())
      throw std::invalid_argument("MapKernelSet: need at least one coil");
    for (const auto &k : kernels) {
      if (!k.same_dims(kernels.front()))
        throw std::invalid_argument("MapKernelSet: kernel dimensions differ");
      if (k.height % 2 == 0 || k.width % 2 == 0)
        throw std::invalid_argument("MapKernelSet: kernel dimensions must be odd");
    }
  }
};

/* Column (phase-encode) sampling pattern with a centered ACS block. */
struct SamplingMask {
  int height = 0;
  int width = 0;
  int acs_width = 0;
  std::vector<std::uint8_t> columns;  // 0/1 per column

  SamplingMask() = default;
  SamplingMask(int h, int w, int acs, std::vector<std::uint8_t> cols)
      : height(h), width(w), acs_width(acs), columns(std::move(cols)) {
    validate();
  }

  void validate() const {
    if (height < 1 || width < 1)
      throw std::invalid_argument("SamplingMask: dimensions must be positive");
    if (static_cast<int>(columns.size()) != width)
      throw std::invalid_argument("SamplingMask: column count must equal width");
    if (acs_width < 0 || acs_width > width)
      throw std::invalid_argument("SamplingMask: acs_width out of range");
    bool any = false;
    for (auto b : columns) {
      if (b > 1)
        throw std::runtime_error("SamplingMask: malformed mask (column byte > 1)");
      any = any || b == 1;
    }
    if (!any)
      throw std::invalid_argument("SamplingMask: at least one column must be sampled");
    // ACS block is centered at floor(W/2)
    if (acs_width > 0) {
      const int start = width / 2 - acs_width / 2;
      for (int c = start; c < start + acs_width; ++c)
        if (c < 0 || c >= width || columns[static_cast<std::size_t>(c)] != 1)
          throw std::invalid_argument("SamplingMask: ACS block not fully sampled");
    }
  }

  bool sampled(int c) const { return columns[static_cast<std::size_t>(c)] != 0; }

  int num_sampled() const {
    int n = 0;
    for (auto b : columns) n += b;
    return n;
  }
};

enum class ReconMode { jsense, modl, deep_jsense };

std::string to_string(ReconMode mode);
ReconMode parse_mode(const std::string &name);

/* All scalar hyperparameters of the unrolled reconstruction. */
struct ReconConfig {
  int outer_iters = 6;     // N
  int cg_iters_maps = 6;   // n1
  int cg_iters_image = 6;  // n2
  double lambda_m = 1e-2;
  double lambda_s = 1e-2;
  int kernel_h = 15;
  int kernel_w = 9;
  ReconMode mode = ReconMode::jsense;
  double epsilon_rss = 1e-6;  // relative to max RSS value

  void validate() const {
    if (outer_iters < 1)
      throw std::invalid_argument("ReconConfig: outer_iters must be >= 1");
    if (cg_iters_maps < 0)
      throw std::invalid_argument("ReconConfig: cg_iters_maps must be >= 0");
    if (cg_iters_image < 1)
      throw std::invalid_argument("ReconConfig: cg_iters_image must be >= 1");
    if (lambda_m < 0.0 || lambda_s < 0.0)
      throw std::invalid_argument("ReconConfig: lambda must be nonnegative");
    if (kernel_h < 1 || kernel_w < 1 || kernel_h % 2 == 0 || kernel_w % 2 == 0)
      throw std::invalid_argument("ReconConfig: map kernel dimensions must be odd and positive");
    if (epsilon_rss <= 0.0)
      throw std::invalid_argument("ReconConfig: epsilon_rss must be positive");
    if (mode == ReconMode::modl && cg_iters_maps != 0)
      throw std::invalid_argument("ReconConfig: modl mode forces cg_iters_maps = 0");
  }
};

}  // namespace djsense
