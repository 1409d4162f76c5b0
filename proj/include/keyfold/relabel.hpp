#pragma once

#include "keyfold/distribution.hpp"

#include <map>
#include <optional>

namespace keyfold {

/// A bijective renaming of each party's alphabet; perm[i] is the image of i.
struct Relabeling {
  std::vector<int> x_perm;
  std::vector<int> y_perm;
  std::vector<int> z_perm;
};

Relabeling identity_relabeling(int x_size, int y_size, int z_size);
Relabeling inverse_relabeling(const Relabeling& r);
TripartiteDistribution apply_relabeling(const TripartiteDistribution& d, const Relabeling& r);

enum class RelabelStatus { Found, None, Undecided };

/// Value-level bijections between the supports of two distributions.
/// Maps are keyed by d1 support values and give the matching d2 value.
struct RelabelResult {
  RelabelStatus status = RelabelStatus::None;
  std::map<int, int> x_map;
  std::map<int, int> y_map;
  std::map<int, int> z_map;
};

/// Searches for a relabeling carrying d1 onto d2 event-by-event (exact
/// probability equality). Unsupported alphabet values are ignored: the
/// returned maps are bijections between supports. Structured fold-shaped
/// candidates are tried first; the generic fallback (colour refinement plus
/// backtracking) runs for supports of at most 16 values per party and
/// reports Undecided beyond that or when its node budget runs out.
RelabelResult find_relabeling(const TripartiteDistribution& d1, const TripartiteDistribution& d2);

}  // namespace keyfold
