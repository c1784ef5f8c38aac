#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "evspline/errors.hpp"

namespace evs {

// Dense channel-major tensor (C x H x W), double storage.
// Planes (H x W) are tensors with channels == 1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int channels, int height, int width, double fill = 0.0)
      : channels_(channels), height_(height), width_(width),
        data_(static_cast<size_t>(channels) * height * width, fill) {
    require(channels >= 1 && height >= 1 && width >= 1,
            "tensor dimensions must be positive");
  }

  static Tensor zeros(int channels, int height, int width) {
    return Tensor(channels, height, width, 0.0);
  }

  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }
  bool empty() const { return data_.empty(); }
  size_t size() const { return data_.size(); }

  double& at(int c, int y, int x) { return data_[index(c, y, x)]; }
  double at(int c, int y, int x) const { return data_[index(c, y, x)]; }

  double* plane(int c) { return data_.data() + static_cast<size_t>(c) * height_ * width_; }
  const double* plane(int c) const {
    return data_.data() + static_cast<size_t>(c) * height_ * width_;
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool same_shape(const Tensor& o) const {
    return channels_ == o.channels_ && height_ == o.height_ && width_ == o.width_;
  }
  bool same_plane_shape(const Tensor& o) const {
    return height_ == o.height_ && width_ == o.width_;
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  double sum() const {
    double s = 0.0;
    for (double v : data_) s += v;
    return s;
  }

  double max_value() const {
    double m = data_.empty() ? 0.0 : data_[0];
    for (double v : data_) m = std::max(m, v);
    return m;
  }

  Tensor channel_copy(int c) const {
    Tensor out(1, height_, width_);
    const double* src = plane(c);
    std::copy(src, src + static_cast<size_t>(height_) * width_, out.data());
    return out;
  }

 private:
  size_t index(int c, int y, int x) const {
    return (static_cast<size_t>(c) * height_ + y) * width_ + x;
  }

  int channels_ = 0, height_ = 0, width_ = 0;
  std::vector<double> data_;
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const std::string& what) {
  require(a.same_shape(b), what + ": shape mismatch");
}

// Bilinear read with border clamp; coordinates in pixel units.
inline double sample_bilinear_clamped(const Tensor& t, int c, double x, double y) {
  const int w = t.width(), h = t.height();
  double cx = std::min(std::max(x, 0.0), static_cast<double>(w - 1));
  double cy = std::min(std::max(y, 0.0), static_cast<double>(h - 1));
  int x0 = static_cast<int>(std::floor(cx));
  int y0 = static_cast<int>(std::floor(cy));
  int x1 = std::min(x0 + 1, w - 1);
  int y1 = std::min(y0 + 1, h - 1);
  double fx = cx - x0, fy = cy - y0;
  double top = t.at(c, y0, x0) * (1.0 - fx) + t.at(c, y0, x1) * fx;
  double bot = t.at(c, y1, x0) * (1.0 - fx) + t.at(c, y1, x1) * fx;
  return top * (1.0 - fy) + bot * fy;
}

// Bilinear resize, pixel-center convention (target center maps to
// (i + 0.5) * scale - 0.5 in the source). Values are not rescaled.
Tensor resize_bilinear(const Tensor& src, int out_height, int out_width);

}  // namespace evs
