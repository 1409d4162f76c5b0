#pragma once

#include "keyfold/distribution.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace keyfold {

/// Conditional probability matrix of one Eve slice; rows = y, columns = x.
struct SliceMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rational>> entries;

  static SliceMatrix from_entries(std::vector<std::vector<Rational>> entries);
  /// p_{xy|z} of slice z. Throws std::domain_error when z has no mass.
  static SliceMatrix from_slice(const TripartiteDistribution& d, int z);
};

/// One product term of a nonnegative factorization: weight * row_dist * col_dist^T.
struct NonnegComponent {
  Rational weight;
  std::vector<Rational> row_dist;
  std::vector<Rational> col_dist;
};

struct NonnegDecomposition {
  std::vector<NonnegComponent> components;
};

/// Exact check that the mixture of outer products reproduces m.
bool decomposition_matches(const SliceMatrix& m, const NonnegDecomposition& d);

struct RankResult {
  bool exceeds_cap = false;
  int value = 0;
  std::optional<NonnegDecomposition> decomposition;
};

/// Rank over the rationals, by exact elimination.
int linear_rank(const SliceMatrix& m);

/// Minimum number of all-positive combinatorial rectangles covering the
/// support. Returns 0 if the branch-and-bound budget is exhausted (no bound).
int min_rectangle_cover(const SliceMatrix& m);

/// Exact nonnegative rank, certified: a value is returned only when the lower
/// bound max(linear rank, rectangle cover) is met by an explicitly
/// constructed decomposition; otherwise the result is "exceeds cap".
/// cap must lie in [1, 6]; matrices larger than 8x8 report exceeds_cap.
RankResult nonnegative_rank(const SliceMatrix& m, int cap);

/// max over Eve's values of the nonnegative rank of the conditional slice.
RankResult secrecy_rank(const TripartiteDistribution& d, int cap);

// ---------------------------------------------------------------------------
// Stochastic-LOPC monotonicity trials.

struct StochasticChannel {
  enum class Side { OnX, OnY };
  Side side = Side::OnX;
  std::vector<std::vector<Rational>> rows;  // input value -> distribution over messages
  int message_count() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

enum class TrialOutcome { Pass, Fail, Inconclusive };

struct MonotoneTrial {
  TrialOutcome outcome = TrialOutcome::Inconclusive;
  RankResult prior;
  std::map<int, RankResult> per_message;  // message value -> conditioned secrecy rank
};

/// Computes Srk before the announcement and Srk of every message-conditioned
/// distribution (Eve holding the message); PASS iff no conditioned rank
/// exceeds the prior one. Rank-oracle budget overruns yield Inconclusive.
MonotoneTrial slopc_monotone_trial(const TripartiteDistribution& d, const StochasticChannel& ch,
                                   int cap);

struct SuiteConfig {
  int trials = 1000;
  std::uint64_t seed = 1;
  int x_size = 3;
  int y_size = 3;
  int z_size = 3;
  int msg_size = 2;
};

struct SuiteFailure {
  int trial = 0;
  int prior_rank = 0;
  int message = 0;
  int message_rank = 0;
};

struct SuiteReport {
  SuiteConfig config;
  int passed = 0;
  int inconclusive = 0;
  std::vector<SuiteFailure> violations;
};

/// Seeded randomized monotonicity suite over small-denominator rational
/// distributions and channels.
SuiteReport run_monotone_suite(const SuiteConfig& config);

}  // namespace keyfold
