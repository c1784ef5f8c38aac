#pragma once

#include <cstdint>

#include "evspline/tensor.hpp"

namespace evs {

// An intensity frame: 1 (gray) or 3 (RGB) channels, values in [0,1],
// timestamped in microseconds.
struct Frame {
  Tensor data;
  int64_t t = 0;

  Frame() = default;
  Frame(Tensor d, int64_t t_us) : data(std::move(d)), t(t_us) {
    require(data.channels() == 1 || data.channels() == 3,
            "frame: channels must be 1 or 3");
  }

  int width() const { return data.width(); }
  int height() const { return data.height(); }
  int channels() const { return data.channels(); }

  void validate_range() const {
    for (size_t i = 0; i < data.size(); ++i) {
      double v = data.data()[i];
      require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
              "frame: values must lie in [0,1]");
    }
  }
};

// Rec.601 luma; gray frames pass through as a copy of their single plane.
Tensor luma(const Tensor& img);
inline Tensor luma(const Frame& f) { return luma(f.data); }

Frame constant_frame(int channels, int height, int width, double value, int64_t t);

}  // namespace evs
