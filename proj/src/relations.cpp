#include "gt/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace gt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string rel_str(const Relation& r) {
  return pos_str(r.from) + (r.kind == RelKind::ge ? ">=" : ">") + pos_str(r.to);
}

RelationSet::RelationSet(int n, std::vector<Relation> rels) : n_(n), rels_(std::move(rels)) {
  if (n < 2) fail(errc::shape, "relation set needs n >= 2");
  for (const Relation& r : rels_) {
    for (Position p : {r.from, r.to})
      if (p.row < 1 || p.row > n || p.col < 1 || p.col > p.row)
        fail(errc::shape, "relation " + rel_str(r) + " uses position out of range");
    if (r.from == r.to) fail(errc::shape, "relation " + rel_str(r) + " is reflexive");
  }
  std::sort(rels_.begin(), rels_.end());
  rels_.erase(std::unique(rels_.begin(), rels_.end()), rels_.end());
}

bool RelationSet::contains(const Relation& r) const {
  return std::binary_search(rels_.begin(), rels_.end(), r);
}

RelationSet RelationSet::with(const Relation& r) const {
  std::vector<Relation> rels = rels_;
  rels.push_back(r);
  return RelationSet(n_, std::move(rels));
}

RelationSet RelationSet::without(const Relation& r) const {
  std::vector<Relation> rels;
  rels.reserve(rels_.size());
  for (const Relation& x : rels_)
    if (!(x == r)) rels.push_back(x);
  return RelationSet(n_, std::move(rels));
}

RelationSet RelationSet::united(const RelationSet& o) const {
  if (o.n_ != n_) fail(errc::shape, "uniting relation sets of different heights");
  std::vector<Relation> rels = rels_;
  rels.insert(rels.end(), o.rels_.begin(), o.rels_.end());
  return RelationSet(n_, std::move(rels));
}

std::set<Position> RelationSet::positions() const {
  std::set<Position> out;
  for (const Relation& r : rels_) {
    out.insert(r.from);
    out.insert(r.to);
  }
  return out;
}

std::string RelationSet::key() const {
  std::ostringstream os;
  os << "n" << n_ << ":";
  for (const Relation& r : rels_) os << rel_str(r) << ";";
  return os.str();
}

std::vector<Relation> all_adjacent_relations(int n) {
  std::vector<Relation> out;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      for (int jp = 1; jp <= i - 1; ++jp) {
        out.push_back({RelKind::ge, {i, j}, {i - 1, jp}});
        out.push_back({RelKind::gt, {i - 1, jp}, {i, j}});
      }
  return out;
}

std::vector<Relation> all_top_relations(int n) {
  std::vector<Relation> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({RelKind::ge, {n, i}, {n, j}});
  return out;
}

RelationSet standard_set(int n) {
  std::vector<Relation> rels;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      rels.push_back({RelKind::ge, {i + 1, j}, {i, j}});
      rels.push_back({RelKind::gt, {i, j}, {i + 1, j + 1}});
    }
  return RelationSet(n, std::move(rels));
}

bool validate_relation(const Relation& r, int n) {
  if (r.kind == RelKind::ge) {
    if (r.from.row == n && r.to.row == n) return r.from.col != r.to.col;
    return r.from.row == r.to.row + 1;  // weak arrows point downward
  }
  return r.to.row == r.from.row + 1;  // strict arrows point upward
}

bool validate_set(const RelationSet& c) {
  for (const Relation& r : c.relations())
    if (!validate_relation(r, c.n())) return false;
  return true;
}

std::vector<RelationSet> decompose(const RelationSet& c) {
  const auto& rels = c.relations();
  const size_t m = rels.size();
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Position, size_t> first_seen;
  for (size_t i = 0; i < m; ++i)
    for (Position p : {rels[i].from, rels[i].to}) {
      auto [it, fresh] = first_seen.emplace(p, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<size_t, std::vector<Relation>> groups;
  for (size_t i = 0; i < m; ++i) groups[find(i)].push_back(rels[i]);
  std::vector<RelationSet> out;
  for (auto& [root, g] : groups) out.emplace_back(c.n(), std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const Tableau& t, const Relation& r) {
  EntryDiff d = entry_diff(t, r.from, r.to);
  if (!d.integral) return false;
  return r.kind == RelKind::ge ? d.ival >= 0 : d.ival >= 1;
}

bool satisfies(const Tableau& t, const RelationSet& c) {
  for (const Relation& r : c.relations())
    if (!satisfies(t, r)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Difference-constraint feasibility. Each edge (u, v, w) encodes x_v <= x_u + w;
// a relation p >= q becomes (p, q, 0) and p > q becomes (p, q, -1). The system
// is feasible over the integers iff the edge graph has no negative cycle.

namespace {

class DiffSystem {
public:
  explicit DiffSystem(const RelationSet& c, bool all_strict = false) {
    for (const Relation& r : c.relations())
      add_upper(r.to, r.from, !all_strict && r.kind == RelKind::ge ? 0 : -1);
  }

  DiffSystem(const RelationSet& c, const Int& gt_weight, std::uint64_t seed) {
    size_t idx = 0;
    for (const Relation& r : c.relations()) {
      Int w = r.kind == RelKind::ge ? Int(0) : -gt_weight;
      if (seed != 0 && r.kind == RelKind::gt)
        w -= Int(splitmix64(seed ^ (0x5bd1e995ULL * ++idx)) % 3);
      add_upper(r.to, r.from, w);
    }
  }

  // x_a <= x_b + w
  void add_upper(Position a, Position b, Int w) {
    edges_.push_back({node(b), node(a), std::move(w)});
  }

  void pin(Position p, const Int& value) {
    size_t zp = zero();
    size_t np = node(p);
    edges_.push_back({zp, np, value});
    edges_.push_back({np, zp, -value});
  }

  bool feasible() const {
    std::vector<Int> dist(nodes_.size(), 0);
    return relax(dist);
  }

  std::optional<std::map<Position, Int>> solve() const {
    std::vector<Int> dist(nodes_.size(), 0);
    if (!relax(dist)) return std::nullopt;
    Int base = 0;
    if (zero_) base = dist[*zero_];
    std::map<Position, Int> out;
    for (const auto& [p, i] : index_) out[p] = dist[i] - base;
    return out;
  }

private:
  struct Edge {
    size_t u, v;
    Int w;
  };

  size_t node(Position p) {
    auto [it, fresh] = index_.emplace(p, nodes_.size());
    if (fresh) nodes_.push_back(p);
    return it->second;
  }

  size_t zero() {
    if (!zero_) {
      zero_ = nodes_.size();
      nodes_.push_back(Position{0, 0});
    }
    return *zero_;
  }

  bool relax(std::vector<Int>& dist) const {
    const size_t n = nodes_.size();
    for (size_t pass = 0; pass + 1 < n; ++pass) {
      bool changed = false;
      for (const Edge& e : edges_) {
        Int cand = dist[e.u] + e.w;
        if (cand < dist[e.v]) {
          dist[e.v] = std::move(cand);
          changed = true;
        }
      }
      if (!changed) return true;
    }
    for (const Edge& e : edges_)
      if (dist[e.u] + e.w < dist[e.v]) return false;
    return true;
  }

  std::map<Position, size_t> index_;
  std::vector<Position> nodes_;
  std::optional<size_t> zero_;
  std::vector<Edge> edges_;
};

// A solution separating every pair that is not forced equal; widened by a
// gap factor it realizes arbitrarily large in-component gaps.
std::map<Position, Int> solve_separated(const RelationSet& comp) {
  DiffSystem sys(comp, true);
  if (!sys.feasible()) sys = DiffSystem(comp);
  auto sol = sys.solve();
  if (!sol) fail(errc::unsatisfiable, "separating an unsatisfiable component");
  std::set<Position> pos_set = comp.positions();
  std::vector<Position> ps(pos_set.begin(), pos_set.end());
  while (true) {
    bool tie_broken = false;
    for (size_t i = 0; i < ps.size() && !tie_broken; ++i)
      for (size_t j = i + 1; j < ps.size() && !tie_broken; ++j) {
        if ((*sol)[ps[i]] != (*sol)[ps[j]]) continue;
        DiffSystem below = sys;
        below.add_upper(ps[i], ps[j], -1);
        if (below.feasible()) {
          sys = below;
          tie_broken = true;
          break;
        }
        DiffSystem above = sys;
        above.add_upper(ps[j], ps[i], -1);
        if (above.feasible()) {
          sys = above;
          tie_broken = true;
        }
      }
    if (!tie_broken) break;
    sol = sys.solve();
  }
  return *sol;
}

}  // namespace

bool is_satisfiable(const RelationSet& c) { return DiffSystem(c).feasible(); }

bool is_noncritical_set(const RelationSet& c) {
  if (!is_satisfiable(c)) fail(errc::unsatisfiable, "criticality is undefined for " + c.key());
  for (const RelationSet& comp : decompose(c)) {
    std::map<int, std::vector<Position>> by_row;
    for (Position p : comp.positions())
      if (p.row <= c.n() - 1) by_row[p.row].push_back(p);
    for (const auto& [row, ps] : by_row)
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
          DiffSystem sys(comp);
          sys.add_upper(ps[i], ps[j], 0);
          sys.add_upper(ps[j], ps[i], 0);
          if (sys.feasible()) return false;
        }
  }
  return true;
}

Forced forced_compare(const RelationSet& c, Position a, Position b) {
  DiffSystem below(c);
  below.add_upper(a, b, 0);  // l_a <= l_b possible?
  bool can_le = below.feasible();
  DiffSystem above(c);
  above.add_upper(b, a, 0);
  bool can_ge = above.feasible();
  if (!can_le && can_ge) return Forced::above;
  if (can_le && !can_ge) return Forced::below;
  if (!can_le && !can_ge) fail(errc::unsatisfiable, "comparing positions of an unsatisfiable set");
  DiffSystem strict_above(c);
  strict_above.add_upper(b, a, -1);  // l_a >= l_b + 1 possible?
  DiffSystem strict_below(c);
  strict_below.add_upper(a, b, -1);
  bool can_gt = strict_above.feasible();
  bool can_lt = strict_below.feasible();
  if (!can_gt && !can_lt) return Forced::tied;
  return Forced::free;
}

bool forced_weak_above(const RelationSet& c, Position a, Position b) {
  DiffSystem sys(c);
  sys.add_upper(a, b, -1);  // l_b > l_a possible?
  return !sys.feasible();
}

std::vector<std::vector<Position>> forced_order(const RelationSet& c, int k) {
  if (k < 1 || k > c.n()) fail(errc::shape, "row out of range");
  std::vector<std::vector<Position>> out;
  for (const RelationSet& comp : decompose(c)) {
    std::vector<Position> ps;
    for (Position p : comp.positions())
      if (p.row == k) ps.push_back(p);
    if (ps.empty()) continue;
    std::vector<Position> order = ps;
    // Insertion sort with forced comparisons; "free" pairs have no order.
    for (size_t i = 0; i + 1 < order.size(); ++i)
      for (size_t j = i + 1; j < order.size(); ++j) {
        Forced f = forced_compare(comp, order[i], order[j]);
        if (f == Forced::free)
          fail(errc::order_undetermined, "no forced order between " + pos_str(order[i]) +
                                             " and " + pos_str(order[j]));
        if (f == Forced::below) std::swap(order[i], order[j]);
      }
    out.push_back(std::move(order));
  }
  return out;
}

namespace {

// not_edge(r): the constraint violated-r adds to the system.
void add_negation(DiffSystem& sys, const Relation& r) {
  if (r.kind == RelKind::ge)
    sys.add_upper(r.from, r.to, -1);  // to - from >= 1
  else
    sys.add_upper(r.from, r.to, 0);  // to - from >= 0
}

bool implies_one(const RelationSet& c1, const Relation& r) {
  if (!validate_relation(r, c1.n())) return false;
  if (c1.contains(r)) return true;
  DiffSystem sys(c1);
  add_negation(sys, r);
  return !sys.feasible();
}

}  // namespace

bool implies(const RelationSet& c1, const RelationSet& c2) {
  if (c1.n() != c2.n()) fail(errc::shape, "comparing relation sets of different heights");
  if (!is_satisfiable(c1)) fail(errc::unsatisfiable, "implication from an unsatisfiable set");
  for (const Relation& r : c2.relations())
    if (!implies_one(c1, r)) return false;
  return true;
}

bool equivalent(const RelationSet& c1, const RelationSet& c2) {
  return implies(c1, c2) && implies(c2, c1);
}

RelationSet reduce(const RelationSet& c) {
  if (!is_satisfiable(c)) fail(errc::unsatisfiable, "reducing an unsatisfiable set");
  RelationSet cur = c;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Relation& r : cur.relations()) {
      RelationSet rest = cur.without(r);
      if (implies_one(rest, r)) {
        cur = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<Cross> detect_crosses(const RelationSet& c) {
  std::vector<Cross> out;
  for (const Relation& g : c.relations()) {
    if (g.kind != RelKind::gt || g.to.row != g.from.row + 1) continue;
    const int k = g.from.row;
    for (const Relation& e : c.relations()) {
      if (e.kind != RelKind::ge || e.from.row != k + 1 || e.to.row != k) continue;
      // g: (k,i) > (k+1,t); e: (k+1,s) >= (k,j); cross iff i < j and s < t.
      if (g.from.col < e.to.col && e.from.col < g.to.col)
        out.push_back({k, g.from.col, e.from.col, e.to.col, g.to.col});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RelationSet eliminate_cross(const RelationSet& c, const Cross& x, const Tableau& t) {
  auto crosses = detect_crosses(c);
  if (std::find(crosses.begin(), crosses.end(), x) == crosses.end())
    fail(errc::precondition_failed, "tuple is not a cross of the set");
  if (!satisfies(t, c)) fail(errc::precondition_failed, "tableau does not satisfy the set");
  const Relation gt_rel{RelKind::gt, {x.k, x.i}, {x.k + 1, x.t}};
  const Relation ge_rel{RelKind::ge, {x.k + 1, x.s}, {x.k, x.j}};
  EntryDiff d1 = entry_diff(t, {x.k, x.i}, {x.k + 1, x.s});
  EntryDiff d2 = entry_diff(t, {x.k, x.j}, {x.k + 1, x.t});
  if (!d1.integral || !d2.integral)
    fail(errc::no_case_applies, "cross endpoints are not integrally comparable in the tableau");
  RelationSet base = c.without(gt_rel).without(ge_rel);
  std::vector<Relation> add;
  if (d1.ival >= 1 && d2.ival >= 1) {
    // (i): l_ki > l_{k+1,s} >= l_kj > l_{k+1,t}
    add = {{RelKind::gt, {x.k, x.i}, {x.k + 1, x.s}},
           {RelKind::ge, {x.k + 1, x.s}, {x.k, x.j}},
           {RelKind::gt, {x.k, x.j}, {x.k + 1, x.t}}};
  } else if (d1.ival >= 1) {
    // (ii): l_ki > l_{k+1,s}, l_{k+1,t} >= l_kj
    add = {{RelKind::gt, {x.k, x.i}, {x.k + 1, x.s}},
           {RelKind::ge, {x.k + 1, x.t}, {x.k, x.j}}};
  } else if (d2.ival >= 1) {
    // (iii): l_{k+1,s} >= l_ki, l_kj > l_{k+1,t}
    add = {{RelKind::ge, {x.k + 1, x.s}, {x.k, x.i}},
           {RelKind::gt, {x.k, x.j}, {x.k + 1, x.t}}};
  } else {
    // (iv): l_{k+1,s} >= l_ki > l_{k+1,t} >= l_kj
    add = {{RelKind::ge, {x.k + 1, x.s}, {x.k, x.i}},
           {RelKind::gt, {x.k, x.i}, {x.k + 1, x.t}},
           {RelKind::ge, {x.k + 1, x.t}, {x.k, x.j}}};
  }
  for (const Relation& r : add) base = base.with(r);
  return base;
}

namespace {

struct ComponentOrders {
  // Per row, positions sorted largest-first; rows 1..n-1 are strictly ordered.
  std::map<int, std::vector<Position>> rows;
  bool total = true;
};

ComponentOrders component_orders(const RelationSet& comp, int up_to_row) {
  ComponentOrders out;
  std::map<int, std::vector<Position>> by_row;
  for (Position p : comp.positions())
    if (p.row <= up_to_row) by_row[p.row].push_back(p);
  for (auto& [row, ps] : by_row) {
    for (size_t i = 0; i + 1 < ps.size() && out.total; ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) {
        Forced f = forced_compare(comp, ps[i], ps[j]);
        if (f == Forced::free || f == Forced::tied) {
          out.total = false;
          break;
        }
        if (f == Forced::below) std::swap(ps[i], ps[j]);
      }
    out.rows[row] = ps;
  }
  return out;
}

// The admissibility pattern for one adjoining pair, read semantically: a
// pattern relation counts when the component implies it, and a pair whose
// entries can never sit at distance 1 needs no pattern at all.
bool pair_condition11(const RelationSet& comp, int k, Position p, Position q) {
  {
    DiffSystem sys(comp);
    sys.add_upper(p, q, 1);
    sys.add_upper(q, p, -1);
    if (!sys.feasible()) return true;
  }
  auto implied = [&](const Relation& r) { return implies_one(comp, r); };
  bool chain_up = false, chain_down = false;
  for (int s = 1; s <= k + 1 && !chain_up; ++s)
    chain_up = implied({RelKind::gt, p, {k + 1, s}}) && implied({RelKind::ge, {k + 1, s}, q});
  if (k >= 2)
    for (int t = 1; t <= k - 1 && !chain_down; ++t)
      chain_down = implied({RelKind::ge, p, {k - 1, t}}) && implied({RelKind::gt, {k - 1, t}, q});
  if (chain_up && chain_down) return true;
  for (int s = 1; s <= k + 1; ++s) {
    if (!implied({RelKind::gt, p, {k + 1, s}})) continue;
    for (int t = 1; t <= k + 1; ++t) {
      if (t == s) continue;
      if (!implied({RelKind::ge, {k + 1, t}, q})) continue;
      if (forced_weak_above(comp, {k + 1, s}, {k + 1, t})) return true;
    }
  }
  return false;
}

bool component_condition11(const RelationSet& comp, int n) {
  ComponentOrders orders = component_orders(comp, n - 1);
  if (!orders.total) return false;
  for (const auto& [k, ps] : orders.rows)
    for (size_t idx = 0; idx + 1 < ps.size(); ++idx)
      if (!pair_condition11(comp, k, ps[idx], ps[idx + 1])) return false;
  return true;
}

// Order-relative cross detection: a strict arrow (k,x) > (k+1,u) crossing a
// weak arrow (k+1,v) >= (k,y) with (k,x) forced above (k,y) and (k+1,v)
// forced strictly above (k+1,u).
bool component_has_semantic_cross(const RelationSet& comp) {
  for (const Relation& g : comp.relations()) {
    if (g.kind != RelKind::gt || g.to.row != g.from.row + 1) continue;
    const int k = g.from.row;
    for (const Relation& e : comp.relations()) {
      if (e.kind != RelKind::ge || e.from.row != k + 1 || e.to.row != k) continue;
      if (g.from == e.to || g.to == e.from) continue;
      if (forced_compare(comp, g.from, e.to) == Forced::above &&
          forced_compare(comp, e.from, g.to) == Forced::above)
        return true;
    }
  }
  return false;
}

}  // namespace

bool is_pre_admissible(const RelationSet& c) {
  if (!validate_set(c)) return false;
  if (!is_satisfiable(c)) return false;
  if (!is_noncritical_set(c)) return false;
  if (!detect_crosses(c).empty()) return false;
  for (const Relation& r : c.relations())
    if (r.from.row == c.n() && r.to.row == c.n() && r.from.col > r.to.col) return false;
  for (const RelationSet& comp : decompose(c)) {
    ComponentOrders orders = component_orders(comp, c.n() - 1);
    if (!orders.total) return false;
    for (const auto& [row, ps] : orders.rows)
      for (size_t i = 0; i + 1 < ps.size(); ++i)
        if (ps[i].col > ps[i + 1].col) return false;  // forced order must follow columns
  }
  return true;
}

bool is_admissible(const RelationSet& c) {
  if (!validate_set(c)) fail(errc::invalid_relation, "set is not a subset of R u R^0");
  if (!is_satisfiable(c)) return false;
  RelationSet reduced = reduce(c);
  for (const RelationSet& comp : decompose(reduced)) {
    if (!is_noncritical_set(comp)) return false;
    ComponentOrders orders = component_orders(comp, c.n() - 1);
    if (!orders.total) return false;
    if (component_has_semantic_cross(comp)) return false;
    if (!component_condition11(comp, c.n())) return false;
  }
  return true;
}

std::vector<std::pair<Position, Position>> condition11_failures(const RelationSet& c) {
  std::vector<std::pair<Position, Position>> out;
  if (!is_satisfiable(c)) fail(errc::unsatisfiable, "condition check on an unsatisfiable set");
  RelationSet reduced = reduce(c);
  for (const RelationSet& comp : decompose(reduced)) {
    ComponentOrders orders = component_orders(comp, c.n() - 1);
    if (!orders.total) continue;
    for (const auto& [k, ps] : orders.rows)
      for (size_t idx = 0; idx + 1 < ps.size(); ++idx)
        if (!pair_condition11(comp, k, ps[idx], ps[idx + 1]))
          out.push_back({ps[idx], ps[idx + 1]});
  }
  return out;
}

bool implies_for_seed(const RelationSet& c, const Relation& r, const Tableau& seed) {
  if (!validate_relation(r, c.n())) return false;
  if (seed.at(r.from).anchor != seed.at(r.to).anchor) return false;
  DiffSystem sys(c);
  const int n = seed.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Position p{n, i}, q{n, j};
      EntryDiff d = entry_diff(seed, p, q);
      if (!d.integral) continue;
      sys.add_upper(p, q, d.ival);
      sys.add_upper(q, p, -d.ival);
    }
  add_negation(sys, r);
  return !sys.feasible();
}

std::vector<Position> releasable_positions(const RelationSet& c) {
  std::vector<Position> out;
  for (Position p : c.positions()) {
    bool lower = false, upper = false;
    for (const Relation& r : c.relations()) {
      if (r.from == p) lower = true;  // p >= / > something
      if (r.to == p) upper = true;    // something >= / > p
    }
    if (lower != upper) out.push_back(p);
  }
  return out;
}

RelationSet rr_step(const RelationSet& c, Position p) {
  auto rel_positions = releasable_positions(c);
  if (std::find(rel_positions.begin(), rel_positions.end(), p) == rel_positions.end())
    fail(errc::not_releasable, pos_str(p) + " is not one-sidedly bounded in the set");
  std::vector<Relation> keep;
  for (const Relation& r : c.relations())
    if (!(r.from == p || r.to == p)) keep.push_back(r);
  return RelationSet(c.n(), std::move(keep));
}

std::vector<RelationSet> rr_reachable(int n, size_t limit) {
  RelationSet start = standard_set(n);
  std::map<std::string, RelationSet> seen;
  std::deque<RelationSet> queue;
  seen.emplace(reduce(start).key(), reduce(start));
  queue.push_back(start);
  while (!queue.empty() && seen.size() < limit) {
    RelationSet cur = queue.front();
    queue.pop_front();
    for (Position p : releasable_positions(cur)) {
      RelationSet child = rr_step(cur, p);
      RelationSet canon = reduce(child);
      if (seen.emplace(canon.key(), canon).second) {
        queue.push_back(child);
        if (seen.size() >= limit) break;
      }
    }
  }
  std::vector<RelationSet> out;
  for (auto& [k, s] : seen) out.push_back(std::move(s));
  return out;
}

RelationSet sigma_action(const RowPermutation& sigma, const RelationSet& c) {
  sigma.validate();
  if (sigma.n() != c.n()) fail(errc::shape, "permutation height mismatch");
  std::vector<Relation> rels;
  rels.reserve(c.size());
  for (const Relation& r : c.relations())
    rels.push_back({r.kind,
                    {r.from.row, sigma.image(r.from.row, r.from.col)},
                    {r.to.row, sigma.image(r.to.row, r.to.col)}});
  return RelationSet(c.n(), std::move(rels));
}

RelationSet max_satisfied_set(const Tableau& t) {
  if (!is_noncritical_tableau(t)) fail(errc::critical_tableau, "tableau has a repeated row entry");
  std::vector<Relation> sat;
  for (const Relation& r : all_adjacent_relations(t.n()))
    if (satisfies(t, r)) sat.push_back(r);
  for (const Relation& r : all_top_relations(t.n()))
    if (satisfies(t, r)) sat.push_back(r);
  return reduce(RelationSet(t.n(), std::move(sat)));
}

bool is_realization(const Tableau& t, const RelationSet& c) {
  if (t.n() != c.n() && !c.empty()) fail(errc::shape, "height mismatch");
  if (!satisfies(t, c)) return false;
  // Extend with the satisfied top-row relations among positions of V(C); this
  // realizes the paper's freedom in choosing C^0 for the given seed.
  std::set<Position> vc = c.positions();
  RelationSet ext = c;
  for (Position p : vc) {
    if (p.row != t.n()) continue;
    for (Position q : vc) {
      if (q.row != t.n() || p == q) continue;
      Relation r{RelKind::ge, p, q};
      if (satisfies(t, r) && !ext.contains(r)) ext = ext.with(r);
    }
  }
  if (!is_noncritical_set(ext)) return false;
  // Same-row integral differences must occur exactly within one component.
  std::vector<RelationSet> comps = decompose(ext);
  std::map<Position, int> comp_of;
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (Position p : comps[ci].positions()) comp_of[p] = static_cast<int>(ci);
  for (int k = 1; k <= t.n(); ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        bool same_anchor = t.at({k, i}).anchor == t.at({k, j}).anchor;
        auto a = comp_of.find({k, i});
        auto b = comp_of.find({k, j});
        bool same_comp = a != comp_of.end() && b != comp_of.end() && a->second == b->second;
        if (same_anchor != same_comp) return false;
      }
  return true;
}

Tableau sample_realization(const RelationSet& c, const Int& gap, std::uint64_t seed) {
  SampleOptions opt;
  opt.gap = gap;
  opt.seed = seed;
  return sample_realization_ex(c, opt);
}

Tableau sample_realization_ex(const RelationSet& c, const SampleOptions& opt) {
  if (!is_satisfiable(c)) fail(errc::unsatisfiable, "sampling an unsatisfiable set");
  if (!is_noncritical_set(c)) fail(errc::critical_set, "sampling a critical set");
  const int n = c.n();
  std::vector<RelationSet> comps = decompose(c);

  // Anchor ids: pinned components share the integral class "0"; every other
  // component and every free position gets its own class.
  std::map<std::string, Rat> anchor_values;
  int fresh = 0;
  auto fresh_anchor = [&]() {
    std::string id = "q" + std::to_string(++fresh);
    anchor_values[id] = Rat(1, 2 * fresh + 1);
    return id;
  };

  std::map<Position, Entry> entries;
  for (const RelationSet& comp : comps) {
    bool pinned = false;
    for (const auto& [p, v] : opt.pinned)
      if (comp.positions().count(p)) pinned = true;
    bool unit = opt.unit_pair && comp.positions().count(opt.unit_pair->first) &&
                comp.positions().count(opt.unit_pair->second);
    std::optional<std::map<Position, Int>> sol;
    bool scaled = false;
    if (pinned || unit || opt.seed != 0) {
      DiffSystem sys(comp, opt.gap, opt.seed);
      for (const auto& [p, v] : opt.pinned)
        if (comp.positions().count(p)) sys.pin(p, v);
      if (unit) {
        sys.add_upper(opt.unit_pair->first, opt.unit_pair->second, 1);
        sys.add_upper(opt.unit_pair->second, opt.unit_pair->first, -1);
      }
      sol = sys.solve();
      if (!sol) {
        DiffSystem plain(comp, 1, 0);
        for (const auto& [p, v] : opt.pinned)
          if (comp.positions().count(p)) plain.pin(p, v);
        if (unit) {
          plain.add_upper(opt.unit_pair->first, opt.unit_pair->second, 1);
          plain.add_upper(opt.unit_pair->second, opt.unit_pair->first, -1);
        }
        sol = plain.solve();
      }
      if (!sol) fail(errc::precondition_failed, "pins are inconsistent with the relation set");
    } else {
      // Separate everything that is not forced equal, then widen by the gap.
      sol = solve_separated(comp);
      scaled = true;
    }
    std::string anchor = pinned ? "0" : fresh_anchor();
    for (auto& [p, v] : *sol)
      entries[p] = Entry{anchor, scaled ? Int(v * opt.gap) : v};
  }
  for (const auto& [p, v] : opt.pinned)
    if (!entries.count(p)) entries[p] = Entry{"0", v};

  std::vector<std::vector<Entry>> rows(n);
  for (int k = 1; k <= n; ++k) {
    rows[k - 1].resize(k);
    for (int i = 1; i <= k; ++i) {
      auto it = entries.find({k, i});
      if (it != entries.end())
        rows[k - 1][i - 1] = it->second;
      else
        rows[k - 1][i - 1] = Entry{fresh_anchor(), 0};
    }
  }
  return Tableau::make(n, std::move(rows), make_anchor_table(anchor_values));
}

Tableau reassign_anchors(const Tableau& t, int assignment_index) {
  if (assignment_index == 0) return t;
  std::vector<std::string> ids;
  for (const auto& [id, v] : t.anchors()->values())
    if (id != "0") ids.push_back(id);
  if (ids.empty()) return t;
  // k distinct proper fractions with one odd denominator per assignment.
  long long den = 2 * (static_cast<long long>(ids.size()) + assignment_index + 1) + 1;
  for (int hop = 0; hop < assignment_index; ++hop) den = den * 2 + 1;
  std::map<std::string, Rat> values;
  for (size_t i = 0; i < ids.size(); ++i) values[ids[i]] = Rat(static_cast<long long>(i) + 1, den);
  return t.with_anchors(make_anchor_table(values));
}

}  // namespace gt
