#pragma once

#include <cstdint>

#include "evspline/event.hpp"
#include "evspline/tensor.hpp"

namespace evs {

// B-bin spatiotemporal event tensor. Polarities are accumulated signed in
// shared bins, split bilinearly between the two nearest temporal bins.
struct VoxelGrid {
  int bins = 0;
  int64_t t_a = 0;
  int64_t t_b = 0;
  Tensor data;  // bins x H x W

  int width() const { return data.width(); }
  int height() const { return data.height(); }
};

// Each event with t in [t_a, t_b] contributes its polarity at normalized
// time t* = (t - t_a) / (t_b - t_a) * (B - 1), weights (1 - frac) and frac
// to bins floor(t*) and floor(t*) + 1. Events outside the window are ignored.
VoxelGrid build_voxel_grid(const EventStream& ev, int64_t t_a, int64_t t_b, int bins);

}  // namespace evs
