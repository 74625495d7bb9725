#ifndef GT_TABLEAU_HPP
#define GT_TABLEAU_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gt/errors.hpp"
#include "gt/rational.hpp"

namespace gt {

// Row/column index into the triangular array, 1 <= col <= row <= n.
// Row n is the top row.
struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string pos_str(Position p);

// Assignment of exact rational values to anchor ids. The id "0" is reserved
// for the integral class and always has value 0; any two distinct anchors must
// differ by a non-integer, so entries differ by an integer iff they share an
// anchor.
class AnchorTable {
public:
  AnchorTable();
  explicit AnchorTable(const std::map<std::string, Rat>& values);

  bool has(const std::string& id) const { return values_.count(id) != 0; }
  const Rat& value(const std::string& id) const;
  const std::map<std::string, Rat>& values() const { return values_; }

private:
  std::map<std::string, Rat> values_;
};

using AnchorTablePtr = std::shared_ptr<const AnchorTable>;

AnchorTablePtr make_anchor_table(const std::map<std::string, Rat>& values);

struct Entry {
  std::string anchor = "0";
  Int offset = 0;
  friend bool operator==(const Entry& a, const Entry& b) {
    return a.anchor == b.anchor && a.offset == b.offset;
  }
  friend bool operator<(const Entry& a, const Entry& b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    return a.offset < b.offset;
  }
};

struct EntryDiff {
  bool integral = false;
  Int ival = 0;  // meaningful when integral
  Rat rval = 0;  // always the exact difference
};

class Tableau {
public:
  // rows[k-1] is row k (bottom row first), row k has k entries.
  static Tableau make(int n, std::vector<std::vector<Entry>> rows, AnchorTablePtr anchors);

  int n() const { return n_; }
  const Entry& at(Position p) const;
  const std::vector<Entry>& row(int k) const;
  Rat value(Position p) const;
  const AnchorTablePtr& anchors() const { return anchors_; }

  // Same entries, different anchor assignment (revalidated).
  Tableau with_anchors(AnchorTablePtr anchors) const;
  Tableau with_entry(Position p, Entry e) const;

  // Structural comparison on (n, entries); anchor values are not compared.
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rows_ < b.rows_;
  }

  std::string str() const;  // staircase rendering, top row first

private:
  Tableau() = default;
  int n_ = 0;
  std::vector<std::vector<Entry>> rows_;
  AnchorTablePtr anchors_;
};

// Integer shift supported on rows 1..n-1; the top row never moves.
struct ShiftVector {
  std::map<Position, Int> z;

  static ShiftVector delta(Position p, Int amount = 1);
  ShiftVector& operator+=(const ShiftVector& o);
  friend ShiftVector operator+(ShiftVector a, const ShiftVector& b) { return a += b; }
};

EntryDiff entry_diff(const Tableau& t, Position p, Position q);

bool is_standard(const Tableau& t);
bool is_noncritical_tableau(const Tableau& t);

Tableau shift(const Tableau& t, const ShiftVector& z);

// One permutation per row: perm[k-1] is an element of S_k given by its images
// (1-based). Entries move from column j to column perm[k-1][j-1].
struct RowPermutation {
  std::vector<std::vector<int>> perm;

  static RowPermutation identity(int n);
  int n() const { return static_cast<int>(perm.size()); }
  int image(int row, int col) const { return perm[row - 1][col - 1]; }
  RowPermutation inverse() const;
  void validate() const;
};

Tableau apply_permutation(const RowPermutation& sigma, const Tableau& t);

// All standard tableaux with the given integral top row (single anchor,
// integer offsets). Rejects mixed-anchor top rows.
std::vector<Tableau> enumerate_standard(const std::vector<Entry>& top_row, AnchorTablePtr anchors);

}  // namespace gt

#endif
