#include "gt/gamma.hpp"

#include <algorithm>

namespace gt {

Rat gamma_value(int m, int k, const std::vector<Entry>& row, const AnchorTable& anchors) {
  if (static_cast<int>(row.size()) != m) fail(errc::shape, "row length does not match m");
  if (k < 1 || k > m) fail(errc::shape, "gamma indices need 1 <= k <= m");
  std::vector<Rat> vals(m);
  for (int i = 0; i < m; ++i) vals[i] = anchors.value(row[i].anchor) + Rat(row[i].offset);
  Rat total = 0;
  for (int i = 0; i < m; ++i) {
    Rat term = 1;
    Rat base = vals[i] + (m - 1);
    for (int p = 0; p < k; ++p) term *= base;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      Rat d = vals[i] - vals[j];
      if (d == 0) fail(errc::singular_row, "repeated entries make gamma singular");
      term *= Rat(1) - Rat(1) / d;
    }
    total += term;
  }
  return total;
}

Rat gamma_value(int m, int k, const Tableau& t) {
  return gamma_value(m, k, t.row(m), *t.anchors());
}

std::vector<GeneratorWord> cmk_expression(int m, int k) {
  if (m < 1 || k < 1 || k > m) fail(errc::shape, "c_{mk} needs 1 <= k <= m");
  if (m > 4 || k > 4) fail(errc::budget, "c_{mk} word expansion capped at m <= 4, k <= 4");
  std::vector<GeneratorWord> words;
  std::vector<int> tuple(k, 1);
  while (true) {
    GeneratorWord w;
    for (int p = 0; p < k; ++p) w.factors.push_back({tuple[p], tuple[(p + 1) % k]});
    words.push_back(std::move(w));
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == m) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return words;
}

FormalVector apply_word(const Basis& b, const GeneratorWord& w, const FormalVector& v) {
  FormalVector cur = v;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    if (cur.is_zero()) return cur;
    cur = apply_Eij(b, it->first, it->second, cur);
  }
  return cur;
}

FormalVector apply_cmk(const Basis& b, int m, int k, const Tableau& t) {
  if (!b.contains(t)) fail(errc::not_in_basis, "c_{mk} applied outside the basis");
  FormalVector unit = FormalVector::unit(t);
  FormalVector out;
  for (const GeneratorWord& w : cmk_expression(m, k)) out.add_scaled(apply_word(b, w, unit), 1);
  return out;
}

GammaCheck check_gamma_action(const Basis& b, const Tableau& t, int m, int k) {
  GammaCheck res;
  FormalVector lhs = apply_cmk(b, m, k, t);
  Rat eigen = gamma_value(m, k, t);
  FormalVector rhs = FormalVector::unit(t).scaled(eigen);
  res.defect = lhs - rhs;
  res.ok = res.defect.is_zero();
  return res;
}

Fingerprint::Fingerprint(const Tableau& t) {
  for (int m = 1; m <= t.n(); ++m) {
    std::vector<Entry> sorted = t.row(m);
    std::sort(sorted.begin(), sorted.end());
    bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    rows_sorted_.push_back(std::move(sorted));
    if (repeated) {
      singular_.insert(m);
      continue;
    }
    for (int k = 1; k <= m; ++k) gamma_[{m, k}] = gamma_value(m, k, t);
  }
}

Fingerprint fingerprint(const Tableau& t) { return Fingerprint(t); }

bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b) { return a == b; }

bool multiplicity_one_check(const SpecBasis& b, int radius) {
  std::vector<Tableau> ball = enumerate_ball(b, radius);
  std::vector<Fingerprint> prints;
  prints.reserve(ball.size());
  for (const Tableau& t : ball) prints.emplace_back(t);
  for (size_t i = 0; i < prints.size(); ++i)
    for (size_t j = i + 1; j < prints.size(); ++j)
      if (fingerprints_equal(prints[i], prints[j])) return false;
  return true;
}

}  // namespace gt
