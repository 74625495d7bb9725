#include "gt/action.hpp"

#include <algorithm>
#include <sstream>

namespace gt {

SpecBasis::SpecBasis(RelationSet c, Tableau seed) : c_(std::move(c)), seed_(std::move(seed)) {
  if (!is_realization(seed_, c_))
    fail(errc::not_realization, "seed tableau is not a realization of the relation set");
}

bool SpecBasis::contains(const Tableau& t) const {
  if (t.n() != seed_.n()) return false;
  // Same top row, same anchors entrywise (so the shift is integral), C holds.
  for (int i = 1; i <= t.n(); ++i)
    if (t.at({t.n(), i}) != seed_.at({t.n(), i})) return false;
  for (int k = 1; k < t.n(); ++k)
    for (int i = 1; i <= k; ++i)
      if (t.at({k, i}).anchor != seed_.at({k, i}).anchor) return false;
  return satisfies(t, c_);
}

std::string SpecBasis::describe() const {
  return "B[" + c_.key() + " @ " + seed_.str() + "]";
}

ExplicitBasis::ExplicitBasis(std::vector<Tableau> members) {
  if (members.empty()) fail(errc::shape, "explicit basis needs at least one tableau");
  n_ = members.front().n();
  for (const Tableau& t : members) {
    if (t.n() != n_) fail(errc::shape, "explicit basis mixes heights");
    members_.insert(t);
  }
}

std::string ExplicitBasis::describe() const {
  return "explicit basis of " + std::to_string(members_.size()) + " tableaux";
}

void FormalVector::add(const Tableau& t, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void FormalVector::add_scaled(const FormalVector& o, const Rat& coeff) {
  for (const auto& [t, c] : o.terms_) add(t, Rat(c * coeff));
}

FormalVector FormalVector::operator-(const FormalVector& o) const {
  FormalVector out = *this;
  out.add_scaled(o, Rat(-1));
  return out;
}

FormalVector FormalVector::operator+(const FormalVector& o) const {
  FormalVector out = *this;
  out.add_scaled(o, Rat(1));
  return out;
}

FormalVector FormalVector::scaled(const Rat& coeff) const {
  FormalVector out;
  out.add_scaled(*this, coeff);
  return out;
}

std::string FormalVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    os << rat_str(c) << "*(" << t.str() << ")";
    first = false;
  }
  return os.str();
}

namespace {

Rat row_denominator(const Tableau& t, int k, int i) {
  Rat den = 1;
  Rat vi = t.value({k, i});
  for (int j = 1; j <= k; ++j) {
    if (j == i) continue;
    Rat d = vi - t.value({k, j});
    if (d == 0)
      fail(errc::critical_tableau, "coefficient denominator vanishes at row " + std::to_string(k));
    den *= d;
  }
  return den;
}

void check_k_range(const Basis& b, int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    fail(errc::shape, std::string(what) + " index " + std::to_string(k) + " out of range for n=" +
                          std::to_string(b.n()));
}

}  // namespace

Rat coeff_e(const Basis& b, int k, int i, const Tableau& t) {
  check_k_range(b, k, 1, b.n() - 1, "e");
  if (i < 1 || i > k) fail(errc::shape, "column out of range");
  if (!b.contains(t)) return 0;
  Rat num = 1;
  Rat vi = t.value({k, i});
  for (int j = 1; j <= k + 1; ++j) num *= vi - t.value({k + 1, j});
  return -num / row_denominator(t, k, i);
}

Rat coeff_f(const Basis& b, int k, int i, const Tableau& t) {
  check_k_range(b, k, 1, b.n() - 1, "f");
  if (i < 1 || i > k) fail(errc::shape, "column out of range");
  if (!b.contains(t)) return 0;
  Rat num = 1;
  Rat vi = t.value({k, i});
  for (int j = 1; j <= k - 1; ++j) num *= vi - t.value({k - 1, j});
  return num / row_denominator(t, k, i);
}

Rat coeff_h(const Basis& b, int k, const Tableau& t) {
  check_k_range(b, k, 1, b.n() - 1, "h");
  if (!b.contains(t)) return 0;
  Rat sum = 0;
  for (int i = 1; i <= k; ++i) sum += 2 * t.value({k, i});
  for (int i = 1; i <= k - 1; ++i) sum -= t.value({k - 1, i});
  for (int i = 1; i <= k + 1; ++i) sum -= t.value({k + 1, i});
  return sum - 1;
}

Rat diag_Ekk(const Basis& b, int k, const Tableau& t) {
  check_k_range(b, k, 1, b.n(), "E_kk");
  if (!b.contains(t)) return 0;
  Rat sum = k - 1;
  for (int i = 1; i <= k; ++i) sum += t.value({k, i});
  for (int i = 1; i <= k - 1; ++i) sum -= t.value({k - 1, i});
  return sum;
}

int phi(const Basis& b, const Tableau& l, const std::vector<ShiftVector>& path) {
  if (!b.contains(l)) return 0;
  Tableau cur = l;
  for (const ShiftVector& z : path) {
    cur = shift(cur, z);
    if (!b.contains(cur)) return 0;
  }
  return 1;
}

namespace {

void require_members(const Basis& b, const FormalVector& v) {
  for (const auto& [t, c] : v.terms())
    if (!b.contains(t)) fail(errc::not_in_basis, "vector term outside the basis: " + t.str());
}

}  // namespace

FormalVector apply_e(const Basis& b, int k, const FormalVector& v) {
  check_k_range(b, k, 1, b.n() - 1, "e");
  require_members(b, v);
  FormalVector out;
  for (const auto& [t, c] : v.terms())
    for (int i = 1; i <= k; ++i) {
      Tableau target = shift(t, ShiftVector::delta({k, i}));
      if (!b.contains(target)) continue;
      out.add(target, Rat(c * coeff_e(b, k, i, t)));
    }
  return out;
}

FormalVector apply_f(const Basis& b, int k, const FormalVector& v) {
  check_k_range(b, k, 1, b.n() - 1, "f");
  require_members(b, v);
  FormalVector out;
  for (const auto& [t, c] : v.terms())
    for (int i = 1; i <= k; ++i) {
      Tableau target = shift(t, ShiftVector::delta({k, i}, -1));
      if (!b.contains(target)) continue;
      out.add(target, Rat(c * coeff_f(b, k, i, t)));
    }
  return out;
}

FormalVector apply_h(const Basis& b, int k, const FormalVector& v) {
  check_k_range(b, k, 1, b.n() - 1, "h");
  require_members(b, v);
  FormalVector out;
  for (const auto& [t, c] : v.terms()) out.add(t, Rat(c * coeff_h(b, k, t)));
  return out;
}

FormalVector apply_Ekk(const Basis& b, int k, const FormalVector& v) {
  check_k_range(b, k, 1, b.n(), "E_kk");
  require_members(b, v);
  FormalVector out;
  for (const auto& [t, c] : v.terms()) out.add(t, Rat(c * diag_Ekk(b, k, t)));
  return out;
}

FormalVector apply_Eij(const Basis& b, int i, int j, const FormalVector& v) {
  if (i < 1 || i > b.n() || j < 1 || j > b.n()) fail(errc::shape, "generator index out of range");
  if (i == j) return apply_Ekk(b, i, v);
  if (j == i + 1) return apply_e(b, i, v);
  if (j == i - 1) return apply_f(b, j, v);
  // E_{ij} = [E_{im}, E_{mj}] with m one step from j toward i.
  int m = i < j ? j - 1 : j + 1;
  FormalVector lhs = apply_Eij(b, i, m, apply_Eij(b, m, j, v));
  FormalVector rhs = apply_Eij(b, m, j, apply_Eij(b, i, m, v));
  return lhs - rhs;
}

std::vector<Tableau> enumerate_ball(const SpecBasis& b, int radius) {
  if (radius < 0) fail(errc::shape, "radius must be nonnegative");
  const Tableau& seed = b.seed();
  const int n = seed.n();
  std::vector<Position> free_positions;
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) free_positions.push_back({k, i});
  std::vector<Tableau> out;
  std::vector<Int> offsets(free_positions.size());
  auto rec = [&](auto&& self, size_t idx, const Tableau& cur) -> void {
    if (idx == free_positions.size()) {
      if (satisfies(cur, b.relations())) out.push_back(cur);
      return;
    }
    Position p = free_positions[idx];
    Entry base = seed.at(p);
    for (int d = -radius; d <= radius; ++d) {
      Entry e = base;
      e.offset += d;
      self(self, idx + 1, cur.with_entry(p, e));
    }
  };
  rec(rec, 0, seed);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gt
