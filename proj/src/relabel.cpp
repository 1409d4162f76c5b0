#include "keyfold/relabel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace keyfold {

Relabeling identity_relabeling(int x_size, int y_size, int z_size) {
  Relabeling r;
  r.x_perm.resize(x_size);
  r.y_perm.resize(y_size);
  r.z_perm.resize(z_size);
  std::iota(r.x_perm.begin(), r.x_perm.end(), 0);
  std::iota(r.y_perm.begin(), r.y_perm.end(), 0);
  std::iota(r.z_perm.begin(), r.z_perm.end(), 0);
  return r;
}

namespace {

void check_perm(const std::vector<int>& p, int size, const char* axis) {
  if (static_cast<int>(p.size()) != size)
    throw std::invalid_argument(std::string("relabeling ") + axis + " permutation has wrong size");
  std::vector<char> seen(size, 0);
  for (int v : p) {
    if (v < 0 || v >= size || seen[v])
      throw std::invalid_argument(std::string("relabeling ") + axis + " is not a bijection");
    seen[v] = 1;
  }
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

Relabeling inverse_relabeling(const Relabeling& r) {
  return Relabeling{invert(r.x_perm), invert(r.y_perm), invert(r.z_perm)};
}

TripartiteDistribution apply_relabeling(const TripartiteDistribution& d, const Relabeling& r) {
  check_perm(r.x_perm, d.x_size(), "x");
  check_perm(r.y_perm, d.y_size(), "y");
  check_perm(r.z_perm, d.z_size(), "z");
  std::map<Event, Rational> events;
  for (const auto& [e, p] : d.events())
    events.emplace(Event{r.x_perm[e.x], r.y_perm[e.y], r.z_perm[e.z]}, p);
  return TripartiteDistribution(d.x_size(), d.y_size(), d.z_size(), std::move(events));
}

namespace {

// All work below happens on compacted (contiguous) indices.

bool maps_exactly(const TripartiteDistribution& a, const TripartiteDistribution& b,
                  const std::vector<int>& px, const std::vector<int>& py,
                  const std::vector<int>& pz) {
  for (const auto& [e, p] : a.events())
    if (b.prob(Event{px[e.x], py[e.y], pz[e.z]}) != p) return false;
  return true;
}

std::vector<int> half_swap(int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  const int offset = size / 2;
  if (size % 2 == 0)
    for (int i = 1; i < offset; i += 2) std::swap(p[i], p[i + offset]);
  return p;
}

// Joint colour refinement over the value nodes of both distributions.
// Colours start from the per-value incident probability multisets and are
// refined with neighbour colours until stable, so equal colours are a
// necessary condition for two values to correspond under any relabeling.
struct Refiner {
  const TripartiteDistribution& d1;
  const TripartiteDistribution& d2;
  std::vector<int> cx1, cy1, cz1, cx2, cy2, cz2;

  Refiner(const TripartiteDistribution& a, const TripartiteDistribution& b) : d1(a), d2(b) {
    cx1.assign(d1.x_size(), 0);
    cy1.assign(d1.y_size(), 1);
    cz1.assign(d1.z_size(), 2);
    cx2.assign(d2.x_size(), 0);
    cy2.assign(d2.y_size(), 1);
    cz2.assign(d2.z_size(), 2);
    int colors = 3;
    for (int pass = 0; pass < d1.x_size() + d1.y_size() + d1.z_size(); ++pass) {
      const int next = refine_once(colors);
      if (next == colors) break;
      colors = next;
    }
  }

  using Sig = std::pair<int, std::vector<std::tuple<Rational, int, int>>>;

  int refine_once(int colors) {
    std::map<Sig, int> dict;
    auto assign = [&](std::vector<int>& out, const std::vector<Sig>& sigs) {
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        auto [it, inserted] = dict.emplace(sigs[i], static_cast<int>(dict.size()));
        out[i] = it->second;
      }
    };
    auto sigs_of = [&](const TripartiteDistribution& d, const std::vector<int>& cx,
                       const std::vector<int>& cy, const std::vector<int>& cz, int axis) {
      const int n = axis == 0 ? d.x_size() : axis == 1 ? d.y_size() : d.z_size();
      std::vector<Sig> sigs(n);
      for (int i = 0; i < n; ++i)
        sigs[i].first = axis == 0 ? cx[i] : axis == 1 ? cy[i] : cz[i];
      for (const auto& [e, p] : d.events()) {
        sigs[axis == 0 ? e.x : axis == 1 ? e.y : e.z].second.emplace_back(
            p, axis == 0 ? cy[e.y] : cx[e.x], axis == 2 ? cy[e.y] : cz[e.z]);
      }
      for (auto& s : sigs) std::sort(s.second.begin(), s.second.end());
      return sigs;
    };
    std::vector<int> nx1(d1.x_size()), ny1(d1.y_size()), nz1(d1.z_size());
    std::vector<int> nx2(d2.x_size()), ny2(d2.y_size()), nz2(d2.z_size());
    assign(nx1, sigs_of(d1, cx1, cy1, cz1, 0));
    assign(nx2, sigs_of(d2, cx2, cy2, cz2, 0));
    assign(ny1, sigs_of(d1, cx1, cy1, cz1, 1));
    assign(ny2, sigs_of(d2, cx2, cy2, cz2, 1));
    assign(nz1, sigs_of(d1, cx1, cy1, cz1, 2));
    assign(nz2, sigs_of(d2, cx2, cy2, cz2, 2));
    cx1 = nx1;
    cy1 = ny1;
    cz1 = nz1;
    cx2 = nx2;
    cy2 = ny2;
    cz2 = nz2;
    (void)colors;
    return static_cast<int>(dict.size());
  }
};

struct Backtracker {
  const TripartiteDistribution& d1;
  const TripartiteDistribution& d2;
  const Refiner& colors;
  std::vector<int> px, py, pz;  // d1 index -> d2 index, -1 unassigned
  std::vector<char> used_x, used_y, used_z;
  long long budget = 500000;
  bool exhausted = false;

  Backtracker(const TripartiteDistribution& a, const TripartiteDistribution& b, const Refiner& c)
      : d1(a), d2(b), colors(c) {
    px.assign(d1.x_size(), -1);
    py.assign(d1.y_size(), -1);
    pz.assign(d1.z_size(), -1);
    used_x.assign(d2.x_size(), 0);
    used_y.assign(d2.y_size(), 0);
    used_z.assign(d2.z_size(), 0);
  }

  // Partial consistency for a freshly assigned y: the (p, mapped x, z colour)
  // multiset of its events must match on both sides.
  bool y_consistent(int a, int b) const {
    std::vector<std::tuple<Rational, int, int>> s1, s2;
    for (const auto& [e, p] : d1.events())
      if (e.y == a) s1.emplace_back(p, px[e.x], colors.cz1[e.z]);
    for (const auto& [e, p] : d2.events())
      if (e.y == b) s2.emplace_back(p, e.x, colors.cz2[e.z]);
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    return s1 == s2;
  }

  bool z_consistent(int a, int b) const {
    std::vector<std::tuple<Rational, int, int>> s1, s2;
    for (const auto& [e, p] : d1.events())
      if (e.z == a) s1.emplace_back(p, px[e.x], py[e.y]);
    for (const auto& [e, p] : d2.events())
      if (e.z == b) s2.emplace_back(p, e.x, e.y);
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    return s1 == s2;
  }

  bool solve(int stage, int pos) {
    if (--budget <= 0) {
      exhausted = true;
      return false;
    }
    if (stage == 0) {
      if (pos == d1.x_size()) return solve(1, 0);
      for (int b = 0; b < d2.x_size(); ++b) {
        if (used_x[b] || colors.cx1[pos] != colors.cx2[b]) continue;
        px[pos] = b;
        used_x[b] = 1;
        if (solve(0, pos + 1)) return true;
        if (exhausted) return false;
        px[pos] = -1;
        used_x[b] = 0;
      }
      return false;
    }
    if (stage == 1) {
      if (pos == d1.y_size()) return solve(2, 0);
      for (int b = 0; b < d2.y_size(); ++b) {
        if (used_y[b] || colors.cy1[pos] != colors.cy2[b] || !y_consistent(pos, b)) continue;
        py[pos] = b;
        used_y[b] = 1;
        if (solve(1, pos + 1)) return true;
        if (exhausted) return false;
        py[pos] = -1;
        used_y[b] = 0;
      }
      return false;
    }
    if (pos == d1.z_size()) return maps_exactly(d1, d2, px, py, pz);
    for (int b = 0; b < d2.z_size(); ++b) {
      if (used_z[b] || colors.cz1[pos] != colors.cz2[b] || !z_consistent(pos, b)) continue;
      pz[pos] = b;
      used_z[b] = 1;
      if (solve(2, pos + 1)) return true;
      if (exhausted) return false;
      pz[pos] = -1;
      used_z[b] = 0;
    }
    return false;
  }
};

}  // namespace

RelabelResult find_relabeling(const TripartiteDistribution& d1, const TripartiteDistribution& d2) {
  const CompactedDistribution c1 = d1.compact();
  const CompactedDistribution c2 = d2.compact();
  const TripartiteDistribution& a = c1.dist;
  const TripartiteDistribution& b = c2.dist;

  RelabelResult result;
  if (a.x_size() != b.x_size() || a.y_size() != b.y_size() || a.z_size() != b.z_size())
    return result;  // None: support shapes differ
  {
    std::vector<Rational> m1, m2;
    for (const auto& [e, p] : a.events()) m1.push_back(p);
    for (const auto& [e, p] : b.events()) m2.push_back(p);
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return result;  // None: probability multisets differ
  }

  auto found = [&](const std::vector<int>& px, const std::vector<int>& py,
                   const std::vector<int>& pz) {
    result.status = RelabelStatus::Found;
    for (int i = 0; i < a.x_size(); ++i) result.x_map[c1.x_values[i]] = c2.x_values[px[i]];
    for (int i = 0; i < a.y_size(); ++i) result.y_map[c1.y_values[i]] = c2.y_values[py[i]];
    for (int i = 0; i < a.z_size(); ++i) result.z_map[c1.z_values[i]] = c2.z_values[pz[i]];
    return result;
  };

  // Fold-shaped candidates: identity and the half-offset odd-index swaps the
  // recursion itself uses, on either axis.
  const std::vector<int> idx = half_swap(a.x_size()), idy = half_swap(a.y_size());
  std::vector<int> id_x(a.x_size()), id_y(a.y_size()), id_z(a.z_size());
  std::iota(id_x.begin(), id_x.end(), 0);
  std::iota(id_y.begin(), id_y.end(), 0);
  std::iota(id_z.begin(), id_z.end(), 0);
  for (const auto& px : {id_x, idx})
    for (const auto& py : {id_y, idy})
      if (maps_exactly(a, b, px, py, id_z)) return found(px, py, id_z);

  if (a.x_size() > 16 || a.y_size() > 16 || a.z_size() > 16) {
    result.status = RelabelStatus::Undecided;
    return result;
  }

  Refiner colors(a, b);
  Backtracker bt(a, b, colors);
  if (bt.solve(0, 0)) return found(bt.px, bt.py, bt.pz);
  result.status = bt.exhausted ? RelabelStatus::Undecided : RelabelStatus::None;
  return result;
}

}  // namespace keyfold
