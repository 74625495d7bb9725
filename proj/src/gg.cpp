#include "gt/gg.hpp"

namespace gt {

IndexFamily IndexFamily::make(std::vector<std::pair<int, int>> pairs) {
  for (size_t k = 1; k <= pairs.size(); ++k) {
    auto [ik, ikp] = pairs[k - 1];
    if (ik < 0 || ik > static_cast<int>(k) || ikp < 1 || ikp > static_cast<int>(k) + 1 ||
        ik >= ikp)
      fail(errc::shape, "index pair (" + std::to_string(ik) + "," + std::to_string(ikp) +
                            ") invalid at k=" + std::to_string(k));
  }
  return IndexFamily{std::move(pairs)};
}

std::vector<IndexFamily> enumerate_families(int n) {
  std::vector<IndexFamily> out;
  if (n < 2) return out;
  std::vector<std::pair<int, int>> cur(n - 1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(IndexFamily{cur});
      return;
    }
    for (int ik = 0; ik <= k; ++ik)
      for (int ikp = ik + 1; ikp <= k + 1; ++ikp) {
        cur[k - 1] = {ik, ikp};
        self(self, k + 1);
      }
  };
  rec(rec, 1);
  return out;
}

RelationSet gg_relation_set(const IndexFamily& fam, int n) {
  if (fam.n() != n) fail(errc::shape, "family length does not match n");
  IndexFamily::make(fam.pairs);  // validate
  std::vector<Relation> rels;
  for (int i = 1; i <= n - 1; ++i) rels.push_back({RelKind::ge, {n, i}, {n, i + 1}});
  for (int k = 1; k <= n - 1; ++k) {
    auto [ik, ikp] = fam.pairs[k - 1];
    for (int j = 1; j <= k; ++j) {
      int src, dst;  // GE (k+1,src) >= (k,j) > (k+1,dst)
      if (j <= ik) {
        src = j - 1;
        dst = j;
      } else if (j < ikp) {
        src = j;
        dst = j + 1;
      } else {
        src = j + 1;
        dst = j + 2;
      }
      if (src >= 1) rels.push_back({RelKind::ge, {k + 1, src}, {k, j}});
      if (dst <= k + 1) rels.push_back({RelKind::gt, {k, j}, {k + 1, dst}});
    }
  }
  return RelationSet(n, std::move(rels));
}

bool lp_condition(const IndexFamily& fam) {
  const int n = fam.n();
  for (int k = 2; k <= n - 1; ++k) {
    auto [ik, ikp] = fam.pairs[k - 1];
    auto [prev, prevp] = fam.pairs[k - 2];
    auto allowed = [&](int v) { return v == 0 || v == ik || v == ikp - 1 || v == k; };
    if (!allowed(prev) || !allowed(prevp)) return false;
  }
  return true;
}

namespace {

std::optional<Tableau> gg_realization(const RelationSet& c, const std::vector<Int>& top,
                                      std::uint64_t seed,
                                      const std::optional<std::pair<Position, Position>>& pair) {
  SampleOptions opt;
  opt.gap = 2;
  opt.seed = seed;
  opt.unit_pair = pair;
  for (size_t i = 0; i < top.size(); ++i) opt.pinned[{static_cast<int>(top.size()), static_cast<int>(i) + 1}] = top[i];
  try {
    return sample_realization_ex(c, opt);
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace

GGVerdict theorem1_check(const IndexFamily& fam, const std::vector<Int>& top_row, int radius,
                         std::uint64_t seed) {
  const int n = fam.n();
  if (static_cast<int>(top_row.size()) != n) fail(errc::shape, "top row length must equal n");
  for (size_t i = 0; i + 1 < top_row.size(); ++i)
    if (top_row[i] <= top_row[i + 1])
      fail(errc::precondition_failed, "top row must be strictly decreasing");

  GGVerdict verdict;
  verdict.top_row = top_row;
  RelationSet c = gg_relation_set(fam, n);
  verdict.lp = lp_condition(fam);
  verdict.admissible = is_admissible(c);

  // A realization over the requested top row; widen the gaps if the row is
  // too tight to interlace.
  std::vector<Int> top = top_row;
  std::optional<Tableau> base;
  for (int attempt = 0; attempt < 4 && !base; ++attempt) {
    base = gg_realization(c, top, seed, std::nullopt);
    if (!base) {
      verdict.top_row_widened = true;
      std::vector<Int> wide = top;
      for (int i = static_cast<int>(top.size()) - 2; i >= 0; --i)
        wide[i] = wide[i + 1] + 2 * (top[i] - top[i + 1]);
      top = wide;
      verdict.top_row = top;
    }
  }
  if (!base) fail(errc::precondition_failed, "no realization over the given top row");
  verdict.realization = base;

  if (verdict.lp) {
    SpecBasis basis(c, *base);
    VerificationReport rep = check_defining_relations(basis, radius);
    verdict.verification_passed = rep.passed;
    verdict.is_module = true;
    if (!rep.passed && !rep.failures.empty()) verdict.witness = rep.failures.front();
    return verdict;
  }

  verdict.is_module = false;
  for (const auto& [p, q] : condition11_failures(c)) {
    std::optional<Tableau> w = gg_realization(c, top, seed, std::make_pair(p, q));
    if (!w) continue;
    try {
      SpecBasis basis(c, *w);
      if (auto v = find_violation(basis, enumerate_ball(basis, 1))) {
        verdict.witness = v;
        return verdict;
      }
    } catch (const error&) {
      continue;
    }
  }
  SpecBasis basis(c, *base);
  if (auto v = find_violation(basis, enumerate_ball(basis, radius))) verdict.witness = v;
  return verdict;
}

}  // namespace gt
