#include "evspline/event.hpp"

#include <algorithm>
#include <string>

namespace evs {

void EventStream::validate() const {
  int64_t prev = 0;
  for (size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (e.t < 0)
      throw invalid_input("event " + std::to_string(i) + ": negative timestamp");
    if (i > 0 && e.t < prev)
      throw invalid_input("event " + std::to_string(i) + ": timestamps not sorted");
    if (e.x < 0 || e.x >= width_ || e.y < 0 || e.y >= height_)
      throw invalid_input("event " + std::to_string(i) + ": position (" +
                          std::to_string(e.x) + "," + std::to_string(e.y) +
                          ") outside sensor " + std::to_string(width_) + "x" +
                          std::to_string(height_));
    if (e.p != 1 && e.p != -1)
      throw invalid_input("event " + std::to_string(i) + ": polarity must be +-1");
    prev = e.t;
  }
}

size_t EventStream::lower_bound(int64_t t_a) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), t_a,
                             [](const Event& e, int64_t t) { return e.t < t; });
  return static_cast<size_t>(it - events_.begin());
}

std::vector<Event> EventStream::in_window(int64_t t_a, int64_t t_b) const {
  std::vector<Event> out;
  for (size_t i = lower_bound(t_a); i < events_.size() && events_[i].t <= t_b; ++i)
    out.push_back(events_[i]);
  return out;
}

EventStream EventStream::reversed(int64_t t_a, int64_t t_b) const {
  std::vector<Event> out;
  out.reserve(events_.size());
  for (auto it = events_.rbegin(); it != events_.rend(); ++it) {
    if (it->t < t_a || it->t > t_b) continue;
    out.push_back(Event{t_a + t_b - it->t, it->x, it->y, -it->p});
  }
  // Reverse iteration gives non-decreasing mirrored timestamps already;
  // a stable sort keeps equal-time groups deterministic.
  std::stable_sort(out.begin(), out.end(),
                   [](const Event& a, const Event& b) { return a.t < b.t; });
  return EventStream(width_, height_, std::move(out));
}

EventStream EventStream::shifted(int dx, int dy) const {
  std::vector<Event> out;
  out.reserve(events_.size());
  for (const Event& e : events_) {
    int nx = e.x + dx, ny = e.y + dy;
    if (nx < 0 || nx >= width_ || ny < 0 || ny >= height_) continue;
    out.push_back(Event{e.t, nx, ny, e.p});
  }
  return EventStream(width_, height_, std::move(out));
}

}  // namespace evs
