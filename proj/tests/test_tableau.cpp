#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace gt;
using gtt::T;

TEST_CASE("construction and anchor validation") {
  CHECK(T("2,0|1").n() == 2);
  CHECK(T("3,3,a|4,2|b").value({3, 3}) == Rat(1, 2));
  CHECK_THROWS_AS(Tableau::make(2, {{Entry{}}, {Entry{}}}, nullptr), error);  // bad shape
  // Anchors with integral difference are rejected.
  CHECK_THROWS_AS(make_anchor_table({{"a", Rat(1, 2)}, {"b", Rat(3, 2)}}), error);
  CHECK_THROWS_AS(make_anchor_table({{"a", Rat(5)}}), error);  // integral value duplicates "0"
  CHECK_NOTHROW(make_anchor_table({{"a", Rat(1, 2)}, {"b", Rat(1, 3)}}));
}

TEST_CASE("entry differences") {
  Tableau t = T("2,0|1");
  EntryDiff d = entry_diff(t, {2, 1}, {1, 1});
  CHECK(d.integral);
  CHECK(d.ival == 1);
  CHECK(entry_diff(t, {1, 1}, {1, 1}).ival == 0);

  Tableau m = T("3,3,a|4,2|b");
  EntryDiff nd = entry_diff(m, {3, 3}, {3, 1});
  CHECK_FALSE(nd.integral);
  CHECK(nd.rval == Rat(-5, 2));

  // Antisymmetry.
  for (Position p : {Position{3, 1}, Position{2, 2}, Position{1, 1}})
    for (Position q : {Position{3, 3}, Position{2, 1}}) {
      CHECK(entry_diff(m, p, q).rval == -entry_diff(m, q, p).rval);
      CHECK(entry_diff(m, p, q).integral == entry_diff(m, q, p).integral);
    }
}

TEST_CASE("standardness") {
  CHECK(is_standard(T("2,0,-2|2,0|1")));
  CHECK_FALSE(is_standard(T("2,0|0")));  // l11 - l22 = 0 is not > 0
  CHECK_FALSE(is_standard(T("2,0|3")));  // l21 - l11 = -1
  CHECK_FALSE(is_standard(T("3,3,a|4,2|b")));
}

TEST_CASE("noncriticality ignores the top row") {
  CHECK(is_noncritical_tableau(T("2,0|1")));
  CHECK_FALSE(is_noncritical_tableau(T("3,1,0|2,2|1")));
  CHECK(is_noncritical_tableau(T("3,3,a|4,2|b")));
}

TEST_CASE("shifts compose and never touch the top row") {
  Tableau t = T("2,0,-2|2,0|1");
  CHECK(shift(t, ShiftVector{}) == t);
  CHECK(shift(T("2,0|1"), ShiftVector::delta({1, 1})) == T("2,0|2"));
  ShiftVector z = ShiftVector::delta({2, 1}) + ShiftVector::delta({1, 1}, -1);
  CHECK(shift(t, z) == T("2,0,-2|3,0|0"));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    ShiftVector z1, z2;
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= k; ++i) {
        z1 += ShiftVector::delta({k, i}, static_cast<int>(rng() % 5) - 2);
        z2 += ShiftVector::delta({k, i}, static_cast<int>(rng() % 5) - 2);
      }
    CHECK(shift(shift(t, z1), z2) == shift(t, z1 + z2));
  }
  CHECK_THROWS_AS(shift(t, ShiftVector::delta({3, 1})), error);
}

TEST_CASE("row permutations") {
  Tableau t = T("2,0,-2|2,0|1");
  RowPermutation id = RowPermutation::identity(3);
  CHECK(apply_permutation(id, t) == t);

  RowPermutation swap2 = id;
  swap2.perm[1] = {2, 1};
  CHECK(apply_permutation(swap2, t) == T("2,0,-2|0,2|1"));
  CHECK(apply_permutation(swap2.inverse(), apply_permutation(swap2, t)) == t);

  // Row multisets are invariant, so noncriticality is preserved.
  RowPermutation rot3 = id;
  rot3.perm[2] = {2, 3, 1};
  Tableau u = apply_permutation(rot3, t);
  CHECK(is_noncritical_tableau(u) == is_noncritical_tableau(t));
}

TEST_CASE("standard enumeration matches the dimension oracle") {
  auto std2 = enumerate_standard({Entry{"0", 2}, Entry{"0", 0}}, nullptr);
  REQUIRE(std2.size() == 2);
  CHECK(std2[0] == T("2,0|1"));
  CHECK(std2[1] == T("2,0|2"));

  auto std3 = enumerate_standard({Entry{"0", 2}, Entry{"0", 0}, Entry{"0", -2}}, nullptr);
  CHECK(std3.size() == 8);
  for (const Tableau& t : std3) CHECK(is_standard(t));

  // A non-strict top row admits no standard tableau.
  CHECK(enumerate_standard({Entry{"0", 0}, Entry{"0", 0}}, nullptr).empty());

  // Mixed anchors cannot be enumerated.
  auto anchors = make_anchor_table({{"a", Rat(1, 2)}});
  CHECK_THROWS_AS(enumerate_standard({Entry{"0", 1}, Entry{"a", 0}}, anchors), error);

  // Every dominant weight with entries in 0..3, n <= 4: count equals the
  // Weyl dimension computed by the independent product formula.
  for (int n = 2; n <= 4; ++n) {
    std::vector<Int> lambda(n, 0);
    auto sweep = [&](auto&& self, int idx) -> void {
      if (idx == n) {
        auto basis = enumerate_standard(gtt::top_row_for(lambda), nullptr);
        CHECK(Int(basis.size()) == gtt::weyl_dimension(lambda));
        for (size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
        return;
      }
      Int hi = idx == 0 ? Int(3) : lambda[idx - 1];
      for (Int v = 0; v <= hi; ++v) {
        lambda[idx] = v;
        self(self, idx + 1);
      }
    };
    sweep(sweep, 0);
  }
}
