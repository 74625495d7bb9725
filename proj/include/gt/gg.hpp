#ifndef GT_GG_HPP
#define GT_GG_HPP

#include "gt/verifier.hpp"

namespace gt {

// One pair (i_k, i_k') per k = 1..n-1 with i_k in 0..k, i_k' in 1..k+1 and
// i_k < i_k'.
struct IndexFamily {
  std::vector<std::pair<int, int>> pairs;

  static IndexFamily make(std::vector<std::pair<int, int>> pairs);
  int n() const { return static_cast<int>(pairs.size()) + 1; }
};

std::vector<IndexFamily> enumerate_families(int n);

// The continuation pattern as a relation set: left-shifted interlacing for
// j <= i_k, plain interlacing for i_k < j < i_k', right-shifted for j >= i_k',
// plus the weak top-row chain (strictness of the top row is validated against
// the concrete top row, which never shifts).
RelationSet gg_relation_set(const IndexFamily& fam, int n);

bool lp_condition(const IndexFamily& fam);

struct GGVerdict {
  bool is_module = false;
  bool lp = false;
  bool admissible = false;
  bool verification_passed = false;  // meaningful when is_module
  bool top_row_widened = false;
  std::vector<Int> top_row;
  std::optional<Tableau> realization;
  std::optional<CheckFailure> witness;  // nonzero defect when not a module
};

// Decides whether the continuation with the given strictly decreasing
// integral top row defines a module, with an exact witness otherwise.
GGVerdict theorem1_check(const IndexFamily& fam, const std::vector<Int>& top_row, int radius,
                         std::uint64_t seed = 0);

}  // namespace gt

#endif
