#include "keyfold/distribution.hpp"
#include "keyfold/origami.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace keyfold;
using namespace keyfold::testutil;

TEST_CASE("fraction parsing and formatting") {
  CHECK(parse_fraction("1/3") == rat(1, 3));
  CHECK(parse_fraction("2/6") == rat(1, 3));
  CHECK(parse_fraction("7") == rat(7));
  CHECK(parse_fraction("-3/9") == rat(-1, 3));
  CHECK(format_fraction(rat(1, 3)) == "1/3");
  CHECK(format_fraction(rat(2)) == "2/1");
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
}

TEST_CASE("base distribution matches the reference grid") {
  const auto d = build_base(rat(1, 3));
  CHECK(d.x_size() == 4);
  CHECK(d.y_size() == 4);
  CHECK(d.z_size() == 4);
  CHECK(d.events().size() == 8);
  CHECK(d.prob({0, 0, 0}) == rat(1, 12));
  CHECK(d.prob({3, 0, 1}) == rat(1, 6));

  // z=2 slice: exactly {(0,2),(3,3)} with weights (lambda, 1-lambda)/4.
  const auto slice = d.slice_joint(2);
  REQUIRE(slice.size() == 2);
  CHECK(slice.at({0, 2}) == rat(1, 12));
  CHECK(slice.at({3, 3}) == rat(1, 6));

  for (const auto& [z, pz] : d.z_marginal()) CHECK(pz == rat(1, 4));
  CHECK(grid_of(d) == kBase);
}

TEST_CASE("uniform bias base has eight events of 1/8") {
  const auto d = build_base(rat(1, 2));
  for (const auto& [e, p] : d.events()) CHECK(p == rat(1, 8));
}

TEST_CASE("bias domain validation") {
  CHECK_THROWS_AS(build_base(rat(0)), std::domain_error);
  CHECK_THROWS_AS(build_base(rat(2, 3)), std::domain_error);
  CHECK_THROWS_AS(build_origami({0, rat(1, 3)}), std::domain_error);
}

TEST_CASE("fold of the base distribution matches the reference table") {
  const auto d = build_base(rat(1, 3));
  const auto folded = overline_transform(d, 1);
  CHECK(folded.z_size() == 8);
  CHECK(folded.events().size() == 8);
  CHECK(grid_of(folded) == kBaseFolded);
  // Even columns keep conditional weight lambda.
  CHECK(folded.prob({0, 0, 4}) == rat(1, 12));
  CHECK(folded.prob({3, 0, 5}) == rat(1, 6));
}

TEST_CASE("fold never merges events") {
  const auto b1 = build_base(rat(1, 3));
  CHECK(overline_transform(b1, 1).events().size() == b1.events().size());
  const auto b2 = build_origami({2, rat(1, 3)});
  CHECK(overline_transform(b2, 2).events().size() == b2.events().size());
}

TEST_CASE("fold rejects mis-shaped input") {
  const auto b1 = build_base(rat(1, 3));
  CHECK_THROWS_AS(overline_transform(b1, 2), std::domain_error);
}

TEST_CASE("column fold of the second distribution reproduces the third's lower rows") {
  // Swapping columns 1<->5 and 3<->7 with z += 8 must give rows 4..7 of the
  // printed third-index grid.
  const auto b2 = build_origami({2, rat(1, 3)});
  const auto folded = overline_transform(b2, 2);
  const auto g = grid_of(folded);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 8; ++x) CHECK(g[y][x] == kGrid3[y + 4][x]);
}

TEST_CASE("recursion reproduces the printed grids") {
  const auto b2 = build_origami({2, rat(1, 3)});
  CHECK(b2.x_size() == 8);
  CHECK(b2.y_size() == 4);
  CHECK(b2.z_size() == 8);
  CHECK(b2.events().size() == 16);
  CHECK(grid_of(b2) == kGrid2);
  CHECK(b2 == dist_from_grid(kGrid2, rat(1, 3), 8, 8));

  const auto b3 = build_origami({3, rat(1, 3)});
  CHECK(b3.x_size() == 8);
  CHECK(b3.y_size() == 8);
  CHECK(b3.z_size() == 16);
  CHECK(grid_of(b3) == kGrid3);
  CHECK(b3 == dist_from_grid(kGrid3, rat(1, 3), 16, 16));
}

TEST_CASE("base case of the recursion") {
  CHECK(build_origami({1, rat(1, 3)}) == build_base(rat(1, 3)));
}

TEST_CASE("size and support laws for r up to 10") {
  const Rational lambda = rat(1, 3);
  for (int r = 1; r <= 10; ++r) {
    const auto d = build_origami({r, lambda});
    CHECK(d.x_size() == origami_x_size(r));
    CHECK(d.y_size() == origami_y_size(r));
    CHECK(d.z_size() == origami_z_size(r));
    CHECK(static_cast<int>(d.events().size()) == 2 * d.z_size());

    Rational total = 0;
    for (const auto& [e, p] : d.events()) total += p;
    CHECK(total == 1);

    const Rational zmass = rat(1, d.z_size());
    for (const auto& [z, pz] : d.z_marginal()) CHECK(pz == zmass);

    for (int z = 0; z < d.z_size(); ++z) {
      const auto slice = d.slice_conditional(z);
      REQUIRE(slice.size() == 2);
      std::vector<Rational> weights;
      std::set<int> rows, cols;
      for (const auto& [xy, p] : slice) {
        weights.push_back(p);
        cols.insert(xy.first);
        rows.insert(xy.second);
      }
      std::sort(weights.begin(), weights.end());
      CHECK(weights == std::vector<Rational>{lambda, 1 - lambda});
      CHECK(rows.size() == 2);
      CHECK(cols.size() == 2);
    }
  }
}

TEST_CASE("conditioning on the left half recovers the previous index") {
  const auto b2 = build_origami({2, rat(1, 3)});
  const auto [cond, mass] = b2.condition([](int x, int, int) { return x <= 3; });
  CHECK(mass == rat(1, 2));
  CHECK(cond.compact().dist == build_base(rat(1, 3)));
}

TEST_CASE("conditioning on the full space is the identity") {
  const auto b2 = build_origami({2, rat(1, 3)});
  const auto [cond, mass] = b2.condition([](int, int, int) { return true; });
  CHECK(mass == 1);
  CHECK(cond == b2);
}

TEST_CASE("conditioning the base on low rows, enumerated by hand") {
  const auto b1 = build_base(rat(1, 3));
  const auto [cond, mass] = b1.condition([](int, int y, int) { return y <= 1; });
  CHECK(mass == rat(1, 2));
  REQUIRE(cond.events().size() == 4);
  CHECK(cond.prob({0, 0, 0}) == rat(1, 6));
  CHECK(cond.prob({1, 1, 0}) == rat(1, 3));
  CHECK(cond.prob({3, 0, 1}) == rat(1, 3));
  CHECK(cond.prob({2, 1, 1}) == rat(1, 6));
  for (int z : {0, 1}) {
    std::vector<Rational> w;
    for (const auto& [xy, p] : cond.slice_conditional(z)) w.push_back(p);
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<Rational>{rat(1, 3), rat(2, 3)});
  }
}

TEST_CASE("conditioning with an empty constraint set fails") {
  const auto b1 = build_base(rat(1, 3));
  CHECK_THROWS_AS(b1.condition([](int, int, int) { return false; }), std::domain_error);
}

TEST_CASE("distribution invariants are enforced") {
  std::map<Event, Rational> bad{{Event{0, 0, 0}, rat(1, 2)}};
  CHECK_THROWS_AS(TripartiteDistribution(1, 1, 1, bad), std::invalid_argument);
  std::map<Event, Rational> oob{{Event{0, 0, 5}, rat(1)}};
  CHECK_THROWS_AS(TripartiteDistribution(1, 1, 1, oob), std::invalid_argument);
  std::map<Event, Rational> zero{{Event{0, 0, 0}, rat(0)}, {Event{0, 0, 1}, rat(1)}};
  CHECK_THROWS_AS(TripartiteDistribution(1, 1, 2, zero), std::invalid_argument);
}

TEST_CASE("compacting keeps values in order") {
  const auto b2 = build_origami({2, rat(1, 3)});
  const auto right = b2.condition([](int x, int, int) { return x >= 4; }).first.compact();
  CHECK(right.x_values == std::vector<int>{4, 5, 6, 7});
  CHECK(right.z_values == std::vector<int>{4, 5, 6, 7});
  CHECK(right.dist.x_size() == 4);
}
