#pragma once

#include "keyfold/distribution.hpp"

#include <map>
#include <vector>

namespace keyfold {

/// Entropy value together with the exact probability atoms it was computed
/// from (the only floating-point surface of the classical half).
struct EntropyReport {
  double value_bits = 0.0;
  std::vector<Rational> exact_atom_multiset;
};

/// -sum p log2 p over positive atoms, in bits.
double entropy_bits(const std::vector<Rational>& atoms);

EntropyReport make_entropy_report(std::vector<Rational> atoms);

/// h(x) = -x log2 x - (1-x) log2(1-x); endpoints return 0.
/// Throws std::domain_error outside [0, 1].
double binary_entropy(const Rational& lambda);

/// I(X:Y|Z) = sum_z p_z [H(X|z) + H(Y|z) - H(XY|z)] in bits.
double conditional_mutual_information(const TripartiteDistribution& d);

/// For each z of positive mass, the sorted multiset of conditional
/// probabilities p_{xy|z} (exact; no floats involved).
std::map<int, std::vector<Rational>> exact_slice_entropy_profile(const TripartiteDistribution& d);

}  // namespace keyfold
