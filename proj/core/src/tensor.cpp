#include "evspline/tensor.hpp"

#include "evspline/frame.hpp"
#include "evspline/parallel.hpp"

namespace evs {

Tensor resize_bilinear(const Tensor& src, int out_height, int out_width) {
  require(out_height >= 1 && out_width >= 1, "resize: output size must be positive");
  if (out_height == src.height() && out_width == src.width()) return src;
  Tensor out(src.channels(), out_height, out_width);
  const double sy = static_cast<double>(src.height()) / out_height;
  const double sx = static_cast<double>(src.width()) / out_width;
  for (int c = 0; c < src.channels(); ++c) {
    parallel_for(0, out_height, [&, c](int y) {
      const double fy = (y + 0.5) * sy - 0.5;
      for (int x = 0; x < out_width; ++x) {
        const double fx = (x + 0.5) * sx - 0.5;
        out.at(c, y, x) = sample_bilinear_clamped(src, c, fx, fy);
      }
    });
  }
  return out;
}

Tensor luma(const Tensor& img) {
  if (img.channels() == 1) return img;
  require(img.channels() == 3, "luma: expected 1 or 3 channels");
  Tensor out(1, img.height(), img.width());
  const double* r = img.plane(0);
  const double* g = img.plane(1);
  const double* b = img.plane(2);
  double* y = out.data();
  const size_t n = static_cast<size_t>(img.height()) * img.width();
  for (size_t i = 0; i < n; ++i) y[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
  return out;
}

Frame constant_frame(int channels, int height, int width, double value, int64_t t) {
  return Frame(Tensor(channels, height, width, value), t);
}

}  // namespace evs
