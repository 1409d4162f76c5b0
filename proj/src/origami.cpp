#include "keyfold/origami.hpp"

#include <stdexcept>
#include <string>

namespace keyfold {

void validate_origami_params(const OrigamiParams& p) {
  if (p.rounds < 1) throw std::domain_error("rounds must be >= 1");
  if (p.bias <= 0 || p.bias > rat(1, 2))
    throw std::domain_error("bias must satisfy 0 < lambda <= 1/2, got " + format_fraction(p.bias));
}

int origami_x_size(int r) { return r % 2 == 0 ? 1 << (r / 2 + 2) : 1 << ((r - 1) / 2 + 2); }
int origami_y_size(int r) { return r % 2 == 0 ? 1 << (r / 2 + 1) : 1 << ((r - 1) / 2 + 2); }
int origami_z_size(int r) { return 1 << (r + 1); }

TripartiteDistribution build_base(const Rational& bias) {
  validate_origami_params(OrigamiParams{1, bias});
  // Grid of z values, rows = y, columns = x; -1 marks an empty cell.
  static constexpr int kGrid[4][4] = {
      {0, -1, -1, 1},
      {-1, 0, 1, -1},
      {2, 3, -1, -1},
      {-1, -1, 3, 2},
  };
  std::map<Event, Rational> events;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      if (kGrid[y][x] >= 0) {
        const Rational conditional = (x % 2 == 0) ? bias : 1 - bias;
        events.emplace(Event{x, y, kGrid[y][x]}, conditional / 4);
      }
  return TripartiteDistribution(4, 4, 4, std::move(events));
}

TripartiteDistribution overline_transform(const TripartiteDistribution& d, int n) {
  if (n < 1) throw std::domain_error("overline index must be >= 1");
  if (d.x_size() != origami_x_size(n) || d.y_size() != origami_y_size(n) ||
      d.z_size() != origami_z_size(n))
    throw std::domain_error("distribution shape does not match index " + std::to_string(n));

  const bool swap_rows = n % 2 == 1;
  const int axis_size = swap_rows ? d.y_size() : d.x_size();
  const int offset = axis_size / 2;
  const auto swapped = [&](int v) {
    if (v % 2 == 0) return v;
    return v < offset ? v + offset : v - offset;
  };

  std::map<Event, Rational> events;
  for (const auto& [e, p] : d.events()) {
    Event out = e;
    if (swap_rows)
      out.y = swapped(e.y);
    else
      out.x = swapped(e.x);
    out.z = e.z + d.z_size();
    events.emplace(out, p);
  }
  return TripartiteDistribution(d.x_size(), d.y_size(), 2 * d.z_size(), std::move(events));
}

TripartiteDistribution build_origami(const OrigamiParams& p) {
  validate_origami_params(p);
  TripartiteDistribution d = build_base(p.bias);
  for (int n = 2; n <= p.rounds; ++n) {
    const TripartiteDistribution folded = overline_transform(d, n - 1);
    const bool horizontal = n % 2 == 0;
    std::map<Event, Rational> events;
    for (const auto& [e, q] : d.events()) events.emplace(e, q / 2);
    for (const auto& [e, q] : folded.events()) {
      Event out = e;
      if (horizontal)
        out.x += d.x_size();
      else
        out.y += d.y_size();
      events.emplace(out, q / 2);
    }
    d = TripartiteDistribution(horizontal ? 2 * d.x_size() : d.x_size(),
                               horizontal ? d.y_size() : 2 * d.y_size(), folded.z_size(),
                               std::move(events));
  }
  return d;
}

}  // namespace keyfold
