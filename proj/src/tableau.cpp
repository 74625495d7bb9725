#include "gt/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace gt {

const char* errc_name(errc c) {
  switch (c) {
    case errc::shape: return "ShapeError";
    case errc::anchor: return "AnchorError";
    case errc::parse: return "ParseError";
    case errc::invalid_relation: return "InvalidRelation";
    case errc::unsatisfiable: return "UnsatisfiableSet";
    case errc::critical_set: return "CriticalSet";
    case errc::critical_tableau: return "CriticalTableau";
    case errc::order_undetermined: return "OrderUndetermined";
    case errc::not_releasable: return "NotReleasable";
    case errc::no_case_applies: return "NoCaseApplies";
    case errc::not_in_basis: return "NotInBasis";
    case errc::singular_row: return "SingularRow";
    case errc::not_realization: return "NotRealization";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::budget: return "BudgetExceeded";
    case errc::infinite_enumeration: return "InfiniteEnumeration";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < q) q -= 1;
  return q;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(errc::parse, "empty rational literal");
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    fail(errc::parse, "bad rational literal '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string int_str(const Int& i) { return i.str(); }

std::string pos_str(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

AnchorTable::AnchorTable() { values_["0"] = 0; }

AnchorTable::AnchorTable(const std::map<std::string, Rat>& values) : values_(values) {
  auto it = values_.find("0");
  if (it != values_.end() && it->second != 0)
    fail(errc::anchor, "anchor id \"0\" is reserved for value 0");
  values_["0"] = 0;
  for (auto a = values_.begin(); a != values_.end(); ++a)
    for (auto b = std::next(a); b != values_.end(); ++b)
      if (is_integer(a->second - b->second))
        fail(errc::anchor, "anchors '" + a->first + "' and '" + b->first +
                               "' differ by an integer");
}

const Rat& AnchorTable::value(const std::string& id) const {
  auto it = values_.find(id);
  if (it == values_.end()) fail(errc::anchor, "unknown anchor '" + id + "'");
  return it->second;
}

AnchorTablePtr make_anchor_table(const std::map<std::string, Rat>& values) {
  return std::make_shared<const AnchorTable>(values);
}

Tableau Tableau::make(int n, std::vector<std::vector<Entry>> rows, AnchorTablePtr anchors) {
  if (n < 2) fail(errc::shape, "tableau height must be at least 2");
  if (!anchors) anchors = std::make_shared<const AnchorTable>();
  if (static_cast<int>(rows.size()) != n)
    fail(errc::shape, "expected " + std::to_string(n) + " rows");
  for (int k = 1; k <= n; ++k)
    if (static_cast<int>(rows[k - 1].size()) != k)
      fail(errc::shape, "row " + std::to_string(k) + " must have " + std::to_string(k) +
                            " entries");
  for (const auto& row : rows)
    for (const auto& e : row)
      if (!anchors->has(e.anchor)) fail(errc::anchor, "entry uses unknown anchor '" + e.anchor + "'");
  Tableau t;
  t.n_ = n;
  t.rows_ = std::move(rows);
  t.anchors_ = std::move(anchors);
  return t;
}

const Entry& Tableau::at(Position p) const {
  if (p.row < 1 || p.row > n_ || p.col < 1 || p.col > p.row)
    fail(errc::shape, "position " + pos_str(p) + " out of range for n=" + std::to_string(n_));
  return rows_[p.row - 1][p.col - 1];
}

const std::vector<Entry>& Tableau::row(int k) const {
  if (k < 1 || k > n_) fail(errc::shape, "row " + std::to_string(k) + " out of range");
  return rows_[k - 1];
}

Rat Tableau::value(Position p) const {
  const Entry& e = at(p);
  return anchors_->value(e.anchor) + Rat(e.offset);
}

Tableau Tableau::with_anchors(AnchorTablePtr anchors) const {
  return make(n_, rows_, std::move(anchors));
}

Tableau Tableau::with_entry(Position p, Entry e) const {
  Tableau t = *this;
  t.at(p);  // bounds check
  if (!anchors_->has(e.anchor)) fail(errc::anchor, "entry uses unknown anchor '" + e.anchor + "'");
  t.rows_[p.row - 1][p.col - 1] = std::move(e);
  return t;
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (int k = n_; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) {
      if (i > 1) os << ' ';
      const Entry& e = rows_[k - 1][i - 1];
      if (e.anchor == "0")
        os << e.offset.str();
      else
        os << e.anchor << (e.offset >= 0 ? "+" : "") << e.offset.str();
    }
    if (k > 1) os << " | ";
  }
  return os.str();
}

ShiftVector ShiftVector::delta(Position p, Int amount) {
  ShiftVector v;
  if (amount != 0) v.z[p] = std::move(amount);
  return v;
}

ShiftVector& ShiftVector::operator+=(const ShiftVector& o) {
  for (const auto& [p, a] : o.z) {
    Int& cur = z[p];
    cur += a;
    if (cur == 0) z.erase(p);
  }
  return *this;
}

EntryDiff entry_diff(const Tableau& t, Position p, Position q) {
  const Entry& a = t.at(p);
  const Entry& b = t.at(q);
  EntryDiff d;
  d.rval = t.value(p) - t.value(q);
  if (a.anchor == b.anchor) {
    d.integral = true;
    d.ival = a.offset - b.offset;
  }
  return d;
}

bool is_standard(const Tableau& t) {
  // l_{k+1,i} >= l_{k,i} > l_{k+1,i+1} for 1 <= i <= k <= n-1.
  for (int k = 1; k < t.n(); ++k)
    for (int i = 1; i <= k; ++i) {
      EntryDiff up = entry_diff(t, {k + 1, i}, {k, i});
      if (!up.integral || up.ival < 0) return false;
      EntryDiff dn = entry_diff(t, {k, i}, {k + 1, i + 1});
      if (!dn.integral || dn.ival < 1) return false;
    }
  return true;
}

bool is_noncritical_tableau(const Tableau& t) {
  for (int k = 1; k < t.n(); ++k) {
    const auto& row = t.row(k);
    for (size_t i = 0; i < row.size(); ++i)
      for (size_t j = i + 1; j < row.size(); ++j)
        if (row[i] == row[j]) return false;
  }
  return true;
}

Tableau shift(const Tableau& t, const ShiftVector& z) {
  Tableau out = t;
  for (const auto& [p, a] : z.z) {
    if (p.row >= t.n()) fail(errc::shape, "shift touches the top row at " + pos_str(p));
    Entry e = t.at(p);
    e.offset += a;
    out = out.with_entry(p, e);
  }
  return out;
}

RowPermutation RowPermutation::identity(int n) {
  RowPermutation s;
  s.perm.resize(n);
  for (int k = 1; k <= n; ++k) {
    s.perm[k - 1].resize(k);
    for (int j = 1; j <= k; ++j) s.perm[k - 1][j - 1] = j;
  }
  return s;
}

void RowPermutation::validate() const {
  for (int k = 1; k <= n(); ++k) {
    std::vector<bool> seen(k, false);
    if (static_cast<int>(perm[k - 1].size()) != k)
      fail(errc::shape, "permutation of row " + std::to_string(k) + " has wrong size");
    for (int v : perm[k - 1]) {
      if (v < 1 || v > k || seen[v - 1])
        fail(errc::shape, "row " + std::to_string(k) + " permutation is not a bijection");
      seen[v - 1] = true;
    }
  }
}

RowPermutation RowPermutation::inverse() const {
  RowPermutation inv = *this;
  for (int k = 1; k <= n(); ++k)
    for (int j = 1; j <= k; ++j) inv.perm[k - 1][perm[k - 1][j - 1] - 1] = j;
  return inv;
}

Tableau apply_permutation(const RowPermutation& sigma, const Tableau& t) {
  sigma.validate();
  if (sigma.n() != t.n()) fail(errc::shape, "permutation height mismatch");
  std::vector<std::vector<Entry>> rows(t.n());
  for (int k = 1; k <= t.n(); ++k) {
    rows[k - 1].resize(k);
    for (int j = 1; j <= k; ++j) rows[k - 1][sigma.image(k, j) - 1] = t.at({k, j});
  }
  return Tableau::make(t.n(), std::move(rows), t.anchors());
}

namespace {

void complete_rows(int n, int k, std::vector<std::vector<Entry>>& rows,
                   const std::string& anchor, AnchorTablePtr anchors,
                   std::vector<Tableau>& out) {
  if (k == 0) {
    out.push_back(Tableau::make(n, rows, anchors));
    return;
  }
  // Row k entries interlace row k+1: l_{k+1,i} >= l_{k,i} > l_{k+1,i+1}.
  std::vector<std::pair<Int, Int>> windows(k);  // [lo, hi] inclusive
  for (int i = 1; i <= k; ++i) {
    windows[i - 1] = {rows[k][i].offset + 1, rows[k][i - 1].offset};
    if (windows[i - 1].first > windows[i - 1].second) return;
  }
  std::vector<Int> cur(k);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      rows[k - 1].resize(k);
      for (int j = 0; j < k; ++j) rows[k - 1][j] = Entry{anchor, cur[j]};
      complete_rows(n, k - 1, rows, anchor, anchors, out);
      return;
    }
    for (Int v = windows[i].first; v <= windows[i].second; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Tableau> enumerate_standard(const std::vector<Entry>& top_row,
                                        AnchorTablePtr anchors) {
  if (top_row.size() < 2) fail(errc::shape, "top row must have at least 2 entries");
  const int n = static_cast<int>(top_row.size());
  if (!anchors) anchors = std::make_shared<const AnchorTable>();
  const std::string& a = top_row.front().anchor;
  for (const auto& e : top_row)
    if (e.anchor != a)
      fail(errc::infinite_enumeration,
           "top row mixes anchors; standard tableaux need an integral top row");
  std::vector<std::vector<Entry>> rows(n);
  rows[n - 1] = top_row;
  std::vector<Tableau> out;
  complete_rows(n, n - 1, rows, a, anchors, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gt
