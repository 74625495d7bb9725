#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace gt;
using gtt::T;
using gtt::rels;

using gtt::random_noncritical;
using gtt::random_sigma;

TEST_CASE("validation against R and R^0") {
  CHECK(validate_set(standard_set(3)));
  CHECK(validate_set(RelationSet(3, {})));
  CHECK_FALSE(validate_set(rels(3, "(3,1)>(1,1)")));   // rows not adjacent
  CHECK_FALSE(validate_set(rels(3, "(3,1)>(2,1)")));   // strict arrows point up
  CHECK_FALSE(validate_set(rels(3, "(2,1)>=(3,1)")));  // weak arrows point down
  CHECK(validate_set(rels(3, "(3,1)>=(3,2);(3,2)>=(3,1)")));
  CHECK_FALSE(validate_set(rels(3, "(2,1)>=(2,2)")));  // same-row only at the top
}

TEST_CASE("decomposition into indecomposable components") {
  CHECK(decompose(standard_set(3)).size() == 1);
  CHECK(decompose(rels(3, "(2,1)>=(1,1);(3,2)>=(2,2)")).size() == 2);
  CHECK(decompose(RelationSet(3, {})).empty());
  for (const RelationSet& comp : decompose(rels(3, "(3,2)>=(2,2);(2,1)>(3,1)"))) {
    auto again = decompose(comp);
    REQUIRE(again.size() == 1);
    CHECK(again.front() == comp);
  }
}

TEST_CASE("satisfiability is negative-cycle detection") {
  CHECK(is_satisfiable(standard_set(4)));
  CHECK_FALSE(is_satisfiable(rels(3, "(2,1)>(3,1);(3,1)>(2,1)")));
  CHECK(is_satisfiable(rels(3, "(3,1)>=(3,2);(3,2)>=(3,1)")));
  CHECK_FALSE(is_satisfiable(rels(3, "(3,1)>=(2,1);(2,1)>(3,1)")));
}

TEST_CASE("satisfaction of relation sets") {
  CHECK(satisfies(T("2,0,-2|2,0|1"), standard_set(3)));
  CHECK(satisfies(T("3,3,a|4,2|b"), rels(3, "(3,2)>=(2,2);(2,1)>(3,1)")));
  CHECK_FALSE(satisfies(T("2,0|5"), standard_set(2)));
  // Non-integer differences fail a relation outright.
  CHECK_FALSE(satisfies(T("3,3,a|4,2|b"), rels(3, "(2,1)>=(1,1)")));
}

TEST_CASE("noncritical sets") {
  CHECK_FALSE(is_noncritical_set(rels(3, "(2,1)>=(1,1);(2,2)>=(1,1)")));
  CHECK(is_noncritical_set(standard_set(3)));
  CHECK(is_noncritical_set(RelationSet(3, {})));
  CHECK(is_noncritical_set(rels(3, "(3,1)>=(3,2);(3,2)>=(3,1)")));  // top-row tie is fine
  CHECK_THROWS_AS(is_noncritical_set(rels(3, "(2,1)>(3,1);(3,1)>(2,1)")), error);
}

TEST_CASE("forced orders") {
  RelationSet s = standard_set(3);
  for (int k = 1; k <= 2; ++k) {
    auto orders = forced_order(s, k);
    REQUIRE(orders.size() == 1);
    for (size_t i = 0; i < orders[0].size(); ++i)
      CHECK(orders[0][i] == Position{k, static_cast<int>(i) + 1});
  }
  auto single = forced_order(rels(3, "(2,1)>=(1,1)"), 2);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == std::vector<Position>{{2, 1}});
  // Two disconnected components each carry their own (trivial) order.
  CHECK(forced_order(rels(3, "(3,1)>=(2,1);(3,2)>=(2,2)"), 2).size() == 2);
}

TEST_CASE("implication and equivalence") {
  RelationSet c1 = rels(3, "(2,1)>=(1,1);(1,1)>(2,2)");
  CHECK(implies(c1, RelationSet(3, {})));
  // Same-row relations below the top row are not in R, hence never implied.
  CHECK_FALSE(implies(c1, RelationSet(3, {{RelKind::gt, {2, 1}, {2, 2}}})));
  // In gl_2 the same pair sits in the top row, where the weak form is legal.
  RelationSet c2 = rels(2, "(2,1)>=(1,1);(1,1)>(2,2)");
  CHECK(implies(c2, rels(2, "(2,1)>=(2,2)")));
  CHECK_THROWS_AS(implies(rels(3, "(2,1)>(3,1);(3,1)>(2,1)"), c1), error);
  // Relations across disconnected components are never implied.
  CHECK_FALSE(implies(rels(3, "(3,1)>=(2,1);(3,2)>=(2,2)"), rels(3, "(3,1)>=(3,2)")));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RelationSet c = random_noncritical(rng, 3 + static_cast<int>(rng() % 2), 6);
    RelationSet r = reduce(c);
    CHECK(implies(c, r));
    CHECK(implies(r, c));
    CHECK(equivalent(c, r));
  }
}

TEST_CASE("reduction") {
  RelationSet s = standard_set(3);
  CHECK(reduce(s) == s);
  // Duplicates vanish by set semantics already at construction.
  RelationSet dup(3, {{RelKind::ge, {2, 1}, {1, 1}}, {RelKind::ge, {2, 1}, {1, 1}}});
  CHECK(dup.size() == 1);
  CHECK(reduce(dup) == dup);

  // A transitively implied weak relation is removed.
  RelationSet chain = rels(2, "(2,1)>=(1,1);(1,1)>(2,2);(2,1)>=(2,2)");
  RelationSet r = reduce(chain);
  CHECK(r.size() == 2);
  CHECK_FALSE(r.contains({RelKind::ge, {2, 1}, {2, 2}}));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    RelationSet c = random_noncritical(rng, 3 + static_cast<int>(rng() % 2), 6);
    RelationSet once = reduce(c);
    CHECK(reduce(once) == once);
    CHECK(equivalent(c, once));
  }
}

TEST_CASE("cross detection") {
  RelationSet crossed = rels(3, "(2,1)>(3,2);(3,1)>=(2,2)");
  auto crosses = detect_crosses(crossed);
  REQUIRE(crosses.size() == 1);
  CHECK(crosses[0] == Cross{2, 1, 1, 2, 2});
  CHECK(detect_crosses(standard_set(4)).empty());
  CHECK(detect_crosses(RelationSet(3, {})).empty());
  // Parallel arrows do not cross column-wise.
  CHECK(detect_crosses(rels(3, "(3,2)>=(2,2);(2,1)>(3,1)")).empty());
}

TEST_CASE("cross elimination follows the tableau's values") {
  RelationSet c = rels(3, "(2,1)>(3,2);(3,1)>=(2,2)");
  Cross x{2, 1, 1, 2, 2};

  struct Case {
    const char* tab;
    const char* added;
  };
  const std::vector<Case> cases = {
      {"5,0,c|6,1|d", "(2,1)>(3,1);(3,1)>=(2,2);(2,2)>(3,2)"},  // (i)
      {"5,3,c|6,2|d", "(2,1)>(3,1);(3,2)>=(2,2)"},              // (ii)
      {"9,0,c|6,1|d", "(3,1)>=(2,1);(2,2)>(3,2)"},              // (iii)
      {"9,3,c|6,2|d", "(3,1)>=(2,1);(2,1)>(3,2);(3,2)>=(2,2)"}  // (iv)
  };
  for (const Case& cs : cases) {
    Tableau t = T(cs.tab);
    REQUIRE(satisfies(t, c));
    RelationSet out = eliminate_cross(c, x, t);
    CHECK(satisfies(t, out));
    CHECK(detect_crosses(out).empty());
    RelationSet added = rels(3, cs.added);
    for (const Relation& r : added.relations()) CHECK(out.contains(r));
    // B_{C2} is contained in B_C, checked on sampled shifts.
    for (int d1 = -2; d1 <= 2; ++d1)
      for (int d2 = -2; d2 <= 2; ++d2) {
        Tableau u = shift(t, ShiftVector::delta({2, 1}, d1) + ShiftVector::delta({2, 2}, d2));
        if (satisfies(u, out)) CHECK(satisfies(u, c));
      }
  }
  CHECK_THROWS_AS(eliminate_cross(c, Cross{2, 1, 1, 2, 3}, T("5,0,c|6,1|d")), error);
}

TEST_CASE("cross elimination terminates") {
  RelationSet c = rels(3, "(2,1)>(3,2);(2,1)>(3,3);(3,1)>=(2,2);(3,2)>=(2,2)");
  Tableau t = T("9,5,0|6,1|d");
  REQUIRE(satisfies(t, c));
  int steps = 0;
  while (true) {
    auto crosses = detect_crosses(c);
    if (crosses.empty()) break;
    c = eliminate_cross(c, crosses.front(), t);
    CHECK(satisfies(t, c));
    REQUIRE(++steps < 20);
  }
  CHECK(detect_crosses(c).empty());
}

TEST_CASE("pre-admissibility") {
  CHECK(is_pre_admissible(standard_set(3)));
  CHECK_FALSE(is_pre_admissible(rels(3, "(2,1)>(3,2);(3,1)>=(2,2)")));   // cross
  CHECK_FALSE(is_pre_admissible(rels(3, "(2,1)>=(1,1);(2,2)>=(1,1)")));  // critical
  CHECK(is_pre_admissible(rels(3, "(3,2)>=(2,2);(2,1)>(3,1)")));
}

TEST_CASE("admissibility") {
  for (int n = 2; n <= 4; ++n) CHECK(is_admissible(standard_set(n)));
  CHECK(is_admissible(rels(3, "(3,2)>=(2,2);(2,1)>(3,1)")));
  CHECK(is_admissible(RelationSet(3, {})));
  // The two non-admissible patterns: a row pair tied through one side only.
  CHECK_FALSE(is_admissible(rels(3, "(3,2)>=(2,2);(2,1)>(3,2)")));
  CHECK_FALSE(is_admissible(rels(3, "(2,1)>=(1,1);(1,1)>(2,2)")));
  // Admissibility is invariant under reduction.
  RelationSet chain = rels(2, "(2,1)>=(1,1);(1,1)>(2,2);(2,1)>=(2,2)");
  CHECK(is_admissible(chain) == is_admissible(reduce(chain)));
  CHECK(condition11_failures(standard_set(3)).empty());
  CHECK_FALSE(condition11_failures(rels(3, "(2,1)>=(1,1);(1,1)>(2,2)")).empty());
}

TEST_CASE("admissibility is sigma-equivariant") {
  std::mt19937 rng(5);
  std::vector<RelationSet> samples = {
      standard_set(3),
      rels(3, "(3,2)>=(2,2);(2,1)>(3,1)"),
      rels(3, "(3,2)>=(2,2);(2,1)>(3,2)"),
      rels(3, "(2,1)>=(1,1);(1,1)>(2,2)"),
      rels(3, "(3,1)>=(2,1);(2,1)>(3,2);(2,1)>=(1,1)"),
  };
  for (const RelationSet& c : samples) {
    bool base = is_admissible(c);
    for (int trial = 0; trial < 6; ++trial) {
      RowPermutation sigma = random_sigma(rng, 3);
      CHECK(is_admissible(sigma_action(sigma, c)) == base);
    }
  }
}

TEST_CASE("sigma action group laws") {
  std::mt19937 rng(17);
  RelationSet c = standard_set(3);
  CHECK(sigma_action(RowPermutation::identity(3), c) == c);
  for (int trial = 0; trial < 10; ++trial) {
    RowPermutation sigma = random_sigma(rng, 3);
    CHECK(sigma_action(sigma.inverse(), sigma_action(sigma, c)) == c);
  }
}

TEST_CASE("relation removal steps") {
  // Walk of the worked removal chain: standard gl_3, release the corner
  // (3,3), then (2,2), then (3,1).
  RelationSet s = standard_set(3);
  auto releasable = releasable_positions(s);
  CHECK(std::find(releasable.begin(), releasable.end(), Position{1, 1}) == releasable.end());
  CHECK_THROWS_AS(rr_step(s, Position{1, 1}), error);

  RelationSet d2 = rr_step(s, {3, 3});
  CHECK(d2 == rels(3, "(3,1)>=(2,1);(2,1)>(3,2);(3,2)>=(2,2);(2,1)>=(1,1);(1,1)>(2,2)"));
  // With the corner gone, (2,2) is bounded from above only.
  RelationSet d3 = rr_step(d2, {2, 2});
  CHECK(d3 == rels(3, "(3,1)>=(2,1);(2,1)>(3,2);(2,1)>=(1,1)"));
  RelationSet d4 = rr_step(d3, {3, 1});
  CHECK(d4 == rels(3, "(2,1)>(3,2);(2,1)>=(1,1)"));
  for (const RelationSet& c : {d2, d3, d4}) CHECK(is_admissible(c));
}

TEST_CASE("rr reachable sets are admissible") {
  auto sets2 = rr_reachable(2, 100);
  bool has_s = false, has_empty = false;
  for (const RelationSet& c : sets2) {
    if (c == standard_set(2)) has_s = true;
    if (c.empty()) has_empty = true;
    CHECK(is_admissible(c));
  }
  CHECK(has_s);
  CHECK(has_empty);

  std::mt19937 rng(29);
  auto sets3 = rr_reachable(3, 200);
  CHECK(sets3.size() >= 10);
  for (const RelationSet& c : sets3) {
    CHECK(is_admissible(c));
    RelationSet relabeled = sigma_action(random_sigma(rng, 3), c);
    CHECK(is_admissible(relabeled));
  }
}

TEST_CASE("maximal satisfied sets") {
  Tableau t = T("3,3,a|4,2|b");
  RelationSet ms = max_satisfied_set(t);
  // Equivalent to the admissible pair plus the satisfied top-row tie.
  RelationSet expect = rels(3, "(3,2)>=(2,2);(2,1)>(3,1);(3,1)>=(3,2);(3,2)>=(3,1)");
  CHECK(equivalent(ms, expect));
  CHECK(is_admissible(ms));

  // A fully generic tableau satisfies nothing.
  Tableau gen = T("a,b,c|d,e|f");
  CHECK(max_satisfied_set(gen).empty());

  // A standard tableau with wide gaps recovers exactly S plus its top row.
  Tableau wide = T("10,0,-10|8,-2|4");
  RelationSet sat = max_satisfied_set(wide);
  RelationSet s_top = standard_set(3)
                          .with({RelKind::ge, {3, 1}, {3, 2}})
                          .with({RelKind::ge, {3, 2}, {3, 3}})
                          .with({RelKind::ge, {3, 1}, {3, 3}});
  CHECK(equivalent(sat, s_top));

  CHECK_THROWS_AS(max_satisfied_set(T("3,1,0|2,2|1")), error);
}

TEST_CASE("realizations") {
  RelationSet c = rels(3, "(3,2)>=(2,2);(2,1)>(3,1)");
  CHECK(is_realization(T("3,3,a|4,2|b"), c));
  // Replacing the free anchor by an integer links row 3 across components.
  CHECK_FALSE(is_realization(T("3,3,5|4,2|b"), c));
  CHECK(is_realization(T("2,0,-2|2,0|1"), standard_set(3)));
  // An integral same-row pair is incompatible with the empty set.
  CHECK_FALSE(is_realization(T("a,b,c|0,5|d"), RelationSet(3, {})));
  CHECK(is_realization(T("a,b,c|d,e|f"), RelationSet(3, {})));
}

TEST_CASE("sampling realizations") {
  RelationSet s = standard_set(3);
  Tableau t = sample_realization(s, 2);
  CHECK(satisfies(t, s));
  CHECK(is_standard(t));
  CHECK(is_realization(t, s));
  // In-component gaps reach the requested width.
  for (Position p : s.positions())
    for (Position q : s.positions()) {
      if (p == q) continue;
      EntryDiff d = entry_diff(t, p, q);
      REQUIRE(d.integral);
      CHECK(abs(d.ival) >= 2);
    }

  Tableau generic = sample_realization(RelationSet(3, {}), 1);
  CHECK(is_realization(generic, RelationSet(3, {})));
  CHECK_THROWS_AS(sample_realization(rels(3, "(2,1)>=(1,1);(2,2)>=(1,1)"), 1), error);

  std::mt19937 rng(31);
  auto pool = rr_reachable(3, 100);
  for (int trial = 0; trial < 100; ++trial) {
    RelationSet c = pool[rng() % pool.size()];
    if (rng() % 2) c = sigma_action(random_sigma(rng, 3), c);
    Int gap = 1 + static_cast<int>(rng() % 3);
    Tableau sample = sample_realization(c, gap, rng());
    CHECK(satisfies(sample, c));
    CHECK(is_realization(sample, c));
  }
}

TEST_CASE("reduced sets satisfy the four syntactic conditions") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    RelationSet c = random_noncritical(rng, 3 + static_cast<int>(rng() % 2), 6);
    RelationSet r = reduce(c);
    for (Position p : r.positions()) {
      int gt_up = 0, ge_in = 0, ge_down = 0, gt_in = 0;
      for (const Relation& rel : r.relations()) {
        if (rel.kind == RelKind::gt && rel.from == p && rel.to.row == p.row + 1) ++gt_up;
        if (rel.kind == RelKind::ge && rel.to == p && rel.from.row == p.row + 1) ++ge_in;
        if (rel.kind == RelKind::ge && rel.from == p && rel.to.row == p.row - 1) ++ge_down;
        if (rel.kind == RelKind::gt && rel.to == p && rel.from.row == p.row - 1) ++gt_in;
      }
      CHECK(gt_up <= 1);
      CHECK(ge_in <= 1);
      CHECK(ge_down <= 1);
      CHECK(gt_in <= 1);
    }
  }
}
