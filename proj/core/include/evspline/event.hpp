#pragma once

#include <cstdint>
#include <vector>

#include "evspline/errors.hpp"

namespace evs {

// One asynchronous brightness-change measurement: timestamp (microseconds),
// pixel position and polarity (+1 brightness increase, -1 decrease).
struct Event {
  int64_t t = 0;
  int x = 0;
  int y = 0;
  int p = +1;
};

// Time-ordered event sequence with sensor geometry.
class EventStream {
 public:
  EventStream() = default;
  EventStream(int width, int height) : width_(width), height_(height) {
    require(width > 0 && height > 0, "event stream: sensor size must be positive");
  }
  EventStream(int width, int height, std::vector<Event> events)
      : width_(width), height_(height), events_(std::move(events)) {
    require(width > 0 && height > 0, "event stream: sensor size must be positive");
    validate();
  }

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<Event>& events() const { return events_; }
  size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  // Checks sortedness, bounds and polarity; names the first offending record.
  void validate() const;

  // Events with t in [t_a, t_b] (inclusive both ends).
  std::vector<Event> in_window(int64_t t_a, int64_t t_b) const;

  // Index of the first event with t >= t_a.
  size_t lower_bound(int64_t t_a) const;

  // Time-reversed stream over [t_a, t_b]: an event at t becomes an event at
  // t_a + t_b - t with flipped polarity (brightness played backwards).
  EventStream reversed(int64_t t_a, int64_t t_b) const;

  // Stream with every event moved by (dx, dy); events leaving the sensor
  // are dropped.
  EventStream shifted(int dx, int dy) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Event> events_;
};

}  // namespace evs
