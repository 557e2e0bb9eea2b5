#pragma once

#include <memory>
#include <string>
#include <vector>

#include "djsense/types.hpp"

namespace djsense {

/* Multi-channel real image stack, channel-major: 2 channels (re/im) for the
 * image kernel, 2C for a map kernel set.
 */
struct RealStack {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;

  RealStack() = default;
  RealStack(int ch, int h, int w) : channels(ch), height(h), width(w) {
    if (ch < 1 || h < 1 || w < 1)
      throw std::invalid_argument("RealStack: dimensions must be positive");
    data.assign(static_cast<std::size_t>(ch) * h * w, 0.0);
  }

  double &at(int ch, int r, int c) {
    return data[(static_cast<std::size_t>(ch) * height + r) * width + c];
  }
  double at(int ch, int r, int c) const {
    return data[(static_cast<std::size_t>(ch) * height + r) * width + c];
  }
};

/* Image-domain denoiser D: shape-preserving, deterministic. */
class Denoiser {
 public:
  enum class Kind { generic, zero, identity };

  virtual ~Denoiser() = default;
  virtual RealStack apply(const RealStack &x) const = 0;
  virtual Kind kind() const { return Kind::generic; }
};

class ZeroDenoiser final : public Denoiser {
 public:
  RealStack apply(const RealStack &x) const override;
  Kind kind() const override { return Kind::zero; }
};

class IdentityDenoiser final : public Denoiser {
 public:
  RealStack apply(const RealStack &x) const override { return x; }
  Kind kind() const override { return Kind::identity; }
};

/* Per-channel convolution with a truncated normalized Gaussian
 * (radius = ceil(3 sigma)), symmetric-reflected borders.
 */
class GaussianDenoiser final : public Denoiser {
 public:
  explicit GaussianDenoiser(double sigma);
  RealStack apply(const RealStack &x) const override;
  double sigma() const { return sigma_; }

 private:
  double sigma_;
  std::vector<double> taps_;
};

/* Residual CNN weights: serially concatenated blocks of
 * conv(3x3) -> ReLU -> conv(3x3) -> add input -> ReLU, with the last
 * block's final ReLU replaced by a linear activation. Every block maps
 * channels_io -> channels_hidden -> channels_io.
 */
struct ConvLayer {
  int out_channels = 0;
  int in_channels = 0;
  std::vector<double> weights;  // (out, in, 3, 3) row-major
  std::vector<double> biases;   // (out)
};

struct ResBlock {
  ConvLayer conv1;  // io -> hidden
  ConvLayer conv2;  // hidden -> io
};

struct ResNetWeights {
  int num_blocks = 0;
  int channels_io = 0;
  int channels_hidden = 0;
  std::vector<ResBlock> blocks;

  void validate() const;
};

// Forward-only inference; zero padding 1, stride 1.
RealStack resnet_apply(const ResNetWeights &weights, const RealStack &x);

class ResNetDenoiser final : public Denoiser {
 public:
  explicit ResNetDenoiser(ResNetWeights weights);
  RealStack apply(const RealStack &x) const override { return resnet_apply(weights_, x); }
  const ResNetWeights &weights() const { return weights_; }

 private:
  ResNetWeights weights_;
};

/* DJW1 weight file: "DJW1" | u32 num_blocks | u32 channels_io |
 * u32 channels_hidden | per block, per conv: f32 LE weight tensor
 * (out, in, 3, 3) row-major followed by out f32 biases.
 */
ResNetWeights read_weights(const std::string &path);
void write_weights(const ResNetWeights &weights, const std::string &path);

/* Applies D in the image domain to a k-space variable per
 * R(x) = ||F{D(F^-1{x})} - x||^2: inverse transform, split into real
 * channels, denoise, recombine, forward transform. Map kernels are
 * zero-padded to the acquisition grid first and cropped back after.
 */
ImageKernel apply_denoiser_kspace(const Denoiser &d, const ImageKernel &m);
MapKernelSet apply_denoiser_kspace(const Denoiser &d, const MapKernelSet &s, int grid_h,
                                   int grid_w);

// Channel packing used by the wrappers (exposed for tests).
RealStack stack_from_grids(const std::vector<ComplexGrid> &grids);
std::vector<ComplexGrid> grids_from_stack(const RealStack &stack);

}  // namespace djsense
