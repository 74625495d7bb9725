#ifndef GT_RELATIONS_HPP
#define GT_RELATIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gt/tableau.hpp"

namespace gt {

enum class RelKind { ge, gt };

// A relation "from >= to" (ge) or "from > to" (gt) between tableau positions.
// Canonical members of R have the weak arrow pointing from row k+1 down to
// row k and the strict arrow from row k up to row k+1; R^0 holds the weak
// top-row relations. Other orientations are representable so that cyclic or
// malformed inputs can be diagnosed rather than rejected at parse time.
struct Relation {
  RelKind kind = RelKind::ge;
  Position from;
  Position to;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

std::string rel_str(const Relation& r);

class RelationSet {
public:
  RelationSet() = default;
  RelationSet(int n, std::vector<Relation> rels);

  int n() const { return n_; }
  const std::vector<Relation>& relations() const { return rels_; }
  bool empty() const { return rels_.empty(); }
  size_t size() const { return rels_.size(); }
  bool contains(const Relation& r) const;

  RelationSet with(const Relation& r) const;
  RelationSet without(const Relation& r) const;
  RelationSet united(const RelationSet& o) const;

  // V(C): every position incident to some relation.
  std::set<Position> positions() const;

  std::string key() const;  // canonical text form, sorted
  friend bool operator==(const RelationSet& a, const RelationSet& b) {
    return a.n_ == b.n_ && a.rels_ == b.rels_;
  }
  friend bool operator<(const RelationSet& a, const RelationSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rels_ < b.rels_;
  }

private:
  int n_ = 0;
  std::vector<Relation> rels_;  // sorted, unique
};

// The full ambient sets for height n.
std::vector<Relation> all_adjacent_relations(int n);  // R
std::vector<Relation> all_top_relations(int n);       // R^0
RelationSet standard_set(int n);                      // S

bool validate_relation(const Relation& r, int n);
bool validate_set(const RelationSet& c);

std::vector<RelationSet> decompose(const RelationSet& c);

bool satisfies(const Tableau& t, const Relation& r);
bool satisfies(const Tableau& t, const RelationSet& c);

bool is_satisfiable(const RelationSet& c);
bool is_noncritical_set(const RelationSet& c);  // pre: satisfiable

// Forced comparison of two same-row positions of one indecomposable
// component, derived from infeasibility of the opposite orientation.
enum class Forced { above, below, tied, free };
Forced forced_compare(const RelationSet& c, Position a, Position b);
bool forced_weak_above(const RelationSet& c, Position a, Position b);  // l_a >= l_b always

// Total order (largest first) on the row-k positions of each component.
// Throws OrderUndetermined if some pair is not forced either way.
std::vector<std::vector<Position>> forced_order(const RelationSet& c, int k);

bool implies(const RelationSet& c1, const RelationSet& c2);
bool equivalent(const RelationSet& c1, const RelationSet& c2);

// Removes relations implied by the rest, scanning in canonical order until
// stable. Unique normal form for noncritical sets.
RelationSet reduce(const RelationSet& c);

// {(k,i) > (k+1,t), (k+1,s) >= (k,j)} with i < j and s < t; identified with
// the tuple [k,i,s,j,t].
struct Cross {
  int k = 0, i = 0, s = 0, j = 0, t = 0;
  friend auto operator<=>(const Cross&, const Cross&) = default;
};

std::vector<Cross> detect_crosses(const RelationSet& c);
RelationSet eliminate_cross(const RelationSet& c, const Cross& x, const Tableau& t);

bool is_pre_admissible(const RelationSet& c);
bool is_admissible(const RelationSet& c);

// Adjoining pairs (upper, lower) of reduce(c) that fail the admissibility
// pattern condition; empty for admissible sets.
std::vector<std::pair<Position, Position>> condition11_failures(const RelationSet& c);

// Implication relative to a fixed seed: does every member of B_c(seed)
// satisfy r? Top-row entries are pinned to the seed's values.
bool implies_for_seed(const RelationSet& c, const Relation& r, const Tableau& seed);

// Relations-removal step: p must be bounded from one side only.
RelationSet rr_step(const RelationSet& c, Position p);
std::vector<Position> releasable_positions(const RelationSet& c);
std::vector<RelationSet> rr_reachable(int n, size_t limit);

RelationSet sigma_action(const RowPermutation& sigma, const RelationSet& c);

// Reduced form of the set of all relations in R u R^0 satisfied by t.
RelationSet max_satisfied_set(const Tableau& t);

bool is_realization(const Tableau& t, const RelationSet& c);

struct SampleOptions {
  Int gap = 1;
  std::uint64_t seed = 0;
  std::map<Position, Int> pinned;                         // exact integral values
  std::optional<std::pair<Position, Position>> unit_pair;  // l_first - l_second = 1
};

Tableau sample_realization(const RelationSet& c, const Int& gap, std::uint64_t seed = 0);
Tableau sample_realization_ex(const RelationSet& c, const SampleOptions& opt);

// Distinct anchor assignment for the same entry structure; index 0 returns
// the tableau unchanged.
Tableau reassign_anchors(const Tableau& t, int assignment_index);

}  // namespace gt

#endif
