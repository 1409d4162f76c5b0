#pragma once

#include "keyfold/distribution.hpp"

namespace keyfold {

/// Parameters of the recursively folded distribution family b^(r,lambda).
struct OrigamiParams {
  int rounds = 1;          // r >= 1
  Rational bias = rat(1, 2);  // 0 < lambda <= 1/2
};

void validate_origami_params(const OrigamiParams& p);

int origami_x_size(int rounds);
int origami_y_size(int rounds);
int origami_z_size(int rounds);

/// The 4x4x4 base distribution b^(1,lambda): two events per z value, placed
/// on distinct rows and columns, with conditional weight lambda on even x.
TripartiteDistribution build_base(const Rational& bias);

/// The fold step: for odd n swaps row i with row i + y_size/2 for odd i, for
/// even n the same on columns, and shifts every z by the z-alphabet size.
/// The input must be b^(n,lambda)-shaped.
TripartiteDistribution overline_transform(const TripartiteDistribution& d, int n);

/// b^(r,lambda) via the recursion: even n stacks [b^(n-1) | overline(b^(n-1))]
/// horizontally, odd n stacks vertically.
TripartiteDistribution build_origami(const OrigamiParams& p);

}  // namespace keyfold
