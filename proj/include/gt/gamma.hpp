#ifndef GT_GAMMA_HPP
#define GT_GAMMA_HPP

#include <utility>

#include "gt/action.hpp"

namespace gt {

// gamma_{mk}(row) = sum_i (l_{mi}+m-1)^k prod_{j!=i} (1 - 1/(l_{mi}-l_{mj})).
Rat gamma_value(int m, int k, const std::vector<Entry>& row, const AnchorTable& anchors);
Rat gamma_value(int m, int k, const Tableau& t);

// One word E_{i1,i2} E_{i2,i3} ... E_{ik,i1}; the rightmost factor acts first.
struct GeneratorWord {
  std::vector<std::pair<int, int>> factors;
};

// The m^k words of c_{mk}, tuples in lexicographic order. Budget-capped.
std::vector<GeneratorWord> cmk_expression(int m, int k);

FormalVector apply_word(const Basis& b, const GeneratorWord& w, const FormalVector& v);
FormalVector apply_cmk(const Basis& b, int m, int k, const Tableau& t);

struct GammaCheck {
  bool ok = false;
  FormalVector defect;
};

// apply_cmk(b,m,k,t) - gamma_{mk}(row m) * t, exactly.
GammaCheck check_gamma_action(const Basis& b, const Tableau& t, int m, int k);

// The tuple of gamma values of a tableau; rows with repeated entries (only
// possible in the top row for basis members) are recorded by multiset with
// the gamma values flagged unavailable.
class Fingerprint {
public:
  explicit Fingerprint(const Tableau& t);

  const std::map<std::pair<int, int>, Rat>& gamma() const { return gamma_; }
  const std::vector<std::vector<Entry>>& row_multisets() const { return rows_sorted_; }
  const std::set<int>& singular_rows() const { return singular_; }

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.gamma_ == b.gamma_ && a.rows_sorted_ == b.rows_sorted_ &&
           a.singular_ == b.singular_;
  }

private:
  std::map<std::pair<int, int>, Rat> gamma_;
  std::vector<std::vector<Entry>> rows_sorted_;
  std::set<int> singular_;
};

Fingerprint fingerprint(const Tableau& t);
bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b);

// Pairwise-distinct fingerprints over the radius ball.
bool multiplicity_one_check(const SpecBasis& b, int radius);

}  // namespace gt

#endif
