#pragma once

#include "keyfold/distribution.hpp"

#include <map>
#include <utility>
#include <vector>

namespace keyfold {

enum class VarPair { XY, XZ, YZ };

const char* var_pair_name(VarPair p);

/// The maximal common function of a pair of variables: a labelled partition
/// realized by the connected components of the bipartite support graph.
/// Component ids are the smallest participating value of the first variable.
struct CommonFunction {
  VarPair pair = VarPair::XY;
  std::map<int, int> first_labels;   // supported first-variable value -> component id
  std::map<int, int> second_labels;  // supported second-variable value -> component id
  std::map<int, Rational> component_probs;

  bool trivial() const { return component_probs.size() == 1; }
  int component_count() const { return static_cast<int>(component_probs.size()); }

  int label_of_first(int v) const;
  int label_of_second(int v) const;
  /// Component ids in ascending order; index_of_label inverts this ordering.
  std::vector<int> component_ids() const;
  int index_of_label(int id) const;
};

/// Common function of two of the three variables of d.
CommonFunction common_function(const TripartiteDistribution& d, VarPair pair);

/// Worker over an explicit bipartite joint: (first, second) -> weight.
CommonFunction common_function_of_pairs(const std::map<std::pair<int, int>, Rational>& joint,
                                        VarPair tag);

/// J_{XY|Z}: for each z of positive mass, the common function of p^{XY|Z=z}.
std::map<int, CommonFunction> conditional_common_function(const TripartiteDistribution& d);

/// Shannon entropy of the component weights, in bits.
double common_entropy(const CommonFunction& cf);

}  // namespace keyfold
