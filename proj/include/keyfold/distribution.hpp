#pragma once

#include "keyfold/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace keyfold {

struct Event {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Event&) const = default;
};

using EventPredicate = std::function<bool(int x, int y, int z)>;

struct CompactedDistribution;

/// Exact joint distribution over finite alphabets X x Y x Z.
/// Only positive-probability events are stored; the stored key set is the
/// support. Probabilities sum to exactly 1.
class TripartiteDistribution {
 public:
  TripartiteDistribution(int x_size, int y_size, int z_size,
                         std::map<Event, Rational> events);

  int x_size() const { return x_size_; }
  int y_size() const { return y_size_; }
  int z_size() const { return z_size_; }
  const std::map<Event, Rational>& events() const { return events_; }

  /// Probability of an event, zero when outside the support.
  Rational prob(const Event& e) const;

  std::map<int, Rational> z_marginal() const;
  std::map<int, Rational> x_marginal() const;
  std::map<int, Rational> y_marginal() const;

  /// Joint weights p(x,y,z) of slice z, keyed by (x, y). Empty if z has no mass.
  std::map<std::pair<int, int>, Rational> slice_joint(int z) const;
  /// Conditional weights p(x,y|z). Throws std::domain_error when z has no mass.
  std::map<std::pair<int, int>, Rational> slice_conditional(int z) const;

  std::vector<int> support_x() const;
  std::vector<int> support_y() const;
  std::vector<int> support_z() const;

  /// Renormalized restriction to the events satisfying the constraint, plus
  /// the exact mass of the constraint set. Alphabet sizes are kept.
  /// Throws std::domain_error when no event satisfies the constraint.
  std::pair<TripartiteDistribution, Rational> condition(const EventPredicate& keep) const;

  /// Drops unused alphabet values, re-indexing each axis to 0..support-1.
  CompactedDistribution compact() const;

  bool operator==(const TripartiteDistribution&) const = default;

 private:
  int x_size_;
  int y_size_;
  int z_size_;
  std::map<Event, Rational> events_;
};

/// A compacted distribution together with the original value carried by each
/// new index (x_values[new_index] == old_value, per axis).
struct CompactedDistribution {
  TripartiteDistribution dist;
  std::vector<int> x_values;
  std::vector<int> y_values;
  std::vector<int> z_values;
};

}  // namespace keyfold
