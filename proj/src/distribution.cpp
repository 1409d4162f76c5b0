#include "keyfold/distribution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace keyfold {

TripartiteDistribution::TripartiteDistribution(int x_size, int y_size, int z_size,
                                               std::map<Event, Rational> events)
    : x_size_(x_size), y_size_(y_size), z_size_(z_size), events_(std::move(events)) {
  if (x_size_ <= 0 || y_size_ <= 0 || z_size_ <= 0)
    throw std::invalid_argument("alphabet sizes must be positive");
  if (events_.empty()) throw std::invalid_argument("distribution with empty support");
  Rational total = 0;
  for (const auto& [e, p] : events_) {
    if (e.x < 0 || e.x >= x_size_ || e.y < 0 || e.y >= y_size_ || e.z < 0 || e.z >= z_size_)
      throw std::invalid_argument("event (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                                  "," + std::to_string(e.z) + ") out of alphabet bounds");
    if (p <= 0)
      throw std::invalid_argument("zero event: stored probabilities must be positive");
    total += p;
  }
  if (total != 1)
    throw std::invalid_argument("probabilities sum to " + format_fraction(total) + ", expected 1");
}

Rational TripartiteDistribution::prob(const Event& e) const {
  const auto it = events_.find(e);
  return it == events_.end() ? Rational(0) : it->second;
}

std::map<int, Rational> TripartiteDistribution::z_marginal() const {
  std::map<int, Rational> m;
  for (const auto& [e, p] : events_) m[e.z] += p;
  return m;
}

std::map<int, Rational> TripartiteDistribution::x_marginal() const {
  std::map<int, Rational> m;
  for (const auto& [e, p] : events_) m[e.x] += p;
  return m;
}

std::map<int, Rational> TripartiteDistribution::y_marginal() const {
  std::map<int, Rational> m;
  for (const auto& [e, p] : events_) m[e.y] += p;
  return m;
}

std::map<std::pair<int, int>, Rational> TripartiteDistribution::slice_joint(int z) const {
  std::map<std::pair<int, int>, Rational> m;
  for (const auto& [e, p] : events_)
    if (e.z == z) m[{e.x, e.y}] = p;
  return m;
}

std::map<std::pair<int, int>, Rational> TripartiteDistribution::slice_conditional(int z) const {
  auto joint = slice_joint(z);
  if (joint.empty()) throw std::domain_error("slice z=" + std::to_string(z) + " has no mass");
  Rational mass = 0;
  for (const auto& [xy, p] : joint) mass += p;
  for (auto& [xy, p] : joint) p /= mass;
  return joint;
}

namespace {

std::vector<int> sorted_values(const std::set<int>& s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<int> TripartiteDistribution::support_x() const {
  std::set<int> s;
  for (const auto& [e, p] : events_) s.insert(e.x);
  return sorted_values(s);
}

std::vector<int> TripartiteDistribution::support_y() const {
  std::set<int> s;
  for (const auto& [e, p] : events_) s.insert(e.y);
  return sorted_values(s);
}

std::vector<int> TripartiteDistribution::support_z() const {
  std::set<int> s;
  for (const auto& [e, p] : events_) s.insert(e.z);
  return sorted_values(s);
}

std::pair<TripartiteDistribution, Rational> TripartiteDistribution::condition(
    const EventPredicate& keep) const {
  std::map<Event, Rational> kept;
  Rational mass = 0;
  for (const auto& [e, p] : events_) {
    if (keep(e.x, e.y, e.z)) {
      kept.emplace(e, p);
      mass += p;
    }
  }
  if (kept.empty()) throw std::domain_error("conditioning constraint has empty support");
  for (auto& [e, p] : kept) p /= mass;
  return {TripartiteDistribution(x_size_, y_size_, z_size_, std::move(kept)), mass};
}

CompactedDistribution TripartiteDistribution::compact() const {
  const auto xs = support_x();
  const auto ys = support_y();
  const auto zs = support_z();
  std::map<int, int> xi, yi, zi;
  for (std::size_t i = 0; i < xs.size(); ++i) xi[xs[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < ys.size(); ++i) yi[ys[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < zs.size(); ++i) zi[zs[i]] = static_cast<int>(i);
  std::map<Event, Rational> events;
  for (const auto& [e, p] : events_)
    events.emplace(Event{xi.at(e.x), yi.at(e.y), zi.at(e.z)}, p);
  return CompactedDistribution{
      TripartiteDistribution(static_cast<int>(xs.size()), static_cast<int>(ys.size()),
                             static_cast<int>(zs.size()), std::move(events)),
      xs, ys, zs};
}

}  // namespace keyfold
