#include "gt/verifier.hpp"

#include <algorithm>
#include <deque>

namespace gt {

namespace {

using Op = std::function<FormalVector(const Basis&, const FormalVector&)>;

Op op_e(int i) {
  return [i](const Basis& b, const FormalVector& v) { return apply_e(b, i, v); };
}
Op op_f(int i) {
  return [i](const Basis& b, const FormalVector& v) { return apply_f(b, i, v); };
}
Op op_h(int i) {
  return [i](const Basis& b, const FormalVector& v) { return apply_h(b, i, v); };
}
Op op_Ekk(int k) {
  return [k](const Basis& b, const FormalVector& v) { return apply_Ekk(b, k, v); };
}

Op commutator(Op a, Op b) {
  return [a, b](const Basis& bas, const FormalVector& v) {
    return a(bas, b(bas, v)) - b(bas, a(bas, v));
  };
}

RelationInstance make_instance(std::string id, Op defect_op) {
  RelationInstance inst;
  inst.id = std::move(id);
  inst.defect = [op = std::move(defect_op)](const Basis& b, const Tableau& t) {
    return op(b, FormalVector::unit(t));
  };
  return inst;
}

}  // namespace

std::vector<RelationInstance> defining_relation_instances(int n) {
  std::vector<RelationInstance> out;
  // (1) Cartan subalgebra commutes.
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      out.push_back(make_instance("[E" + std::to_string(a) + std::to_string(a) + ",E" +
                                      std::to_string(b) + std::to_string(b) + "]",
                                  commutator(op_Ekk(a), op_Ekk(b))));
  // (2) [e_i, f_j] = delta_ij h_i.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      Op comm = commutator(op_e(i), op_f(j));
      std::string id = "[e" + std::to_string(i) + ",f" + std::to_string(j) + "]";
      if (i == j) {
        Op hi = op_h(i);
        out.push_back(make_instance(id + "-h" + std::to_string(i),
                                    [comm, hi](const Basis& b, const FormalVector& v) {
                                      return comm(b, v) - hi(b, v);
                                    }));
      } else {
        out.push_back(make_instance(id, comm));
      }
    }
  // (3) [E_kk, e_i] = (d_ki - d_{k,i+1}) e_i and [E_kk, f_i] = -(...) f_i.
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n - 1; ++i) {
      int alpha = (k == i ? 1 : 0) - (k == i + 1 ? 1 : 0);
      {
        Op comm = commutator(op_Ekk(k), op_e(i));
        Op e = op_e(i);
        out.push_back(make_instance(
            "[E" + std::to_string(k) + std::to_string(k) + ",e" + std::to_string(i) + "]",
            [comm, e, alpha](const Basis& b, const FormalVector& v) {
              return comm(b, v) - e(b, v).scaled(alpha);
            }));
      }
      {
        Op comm = commutator(op_Ekk(k), op_f(i));
        Op f = op_f(i);
        out.push_back(make_instance(
            "[E" + std::to_string(k) + std::to_string(k) + ",f" + std::to_string(i) + "]",
            [comm, f, alpha](const Basis& b, const FormalVector& v) {
              return comm(b, v) + f(b, v).scaled(alpha);
            }));
      }
    }
  // (4) Serre relations for |i-j| = 1.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) != 1) continue;
      out.push_back(make_instance(
          "[e" + std::to_string(i) + ",[e" + std::to_string(i) + ",e" + std::to_string(j) + "]]",
          commutator(op_e(i), commutator(op_e(i), op_e(j)))));
      out.push_back(make_instance(
          "[f" + std::to_string(i) + ",[f" + std::to_string(i) + ",f" + std::to_string(j) + "]]",
          commutator(op_f(i), commutator(op_f(i), op_f(j)))));
    }
  // (5) distant generators commute.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back(make_instance("[e" + std::to_string(i) + ",e" + std::to_string(j) + "]",
                                  commutator(op_e(i), op_e(j))));
      out.push_back(make_instance("[f" + std::to_string(i) + ",f" + std::to_string(j) + "]",
                                  commutator(op_f(i), op_f(j))));
    }
  return out;
}

VerificationReport check_defining_relations(const SpecBasis& b, int radius) {
  VerificationReport rep;
  rep.spec = b.describe();
  rep.radius = radius;
  std::vector<Tableau> ball = enumerate_ball(b, radius);
  rep.tableaux_checked = ball.size();
  auto instances = defining_relation_instances(b.n());
  for (const Tableau& t : ball)
    for (const RelationInstance& inst : instances) {
      ++rep.checks_run;
      FormalVector defect = inst.defect(b, t);
      if (!defect.is_zero()) rep.failures.push_back({inst.id, t, std::move(defect)});
    }
  rep.passed = rep.failures.empty();
  return rep;
}

std::optional<CheckFailure> find_violation(const Basis& b,
                                           const std::vector<Tableau>& candidates) {
  auto instances = defining_relation_instances(b.n());
  for (const Tableau& t : candidates) {
    if (!b.contains(t)) fail(errc::not_in_basis, "candidate tableau outside the basis");
    for (const RelationInstance& inst : instances) {
      FormalVector defect = inst.defect(b, t);
      if (!defect.is_zero()) return CheckFailure{inst.id, t, std::move(defect)};
    }
  }
  return std::nullopt;
}

std::optional<CheckFailure> targeted_violation(const RelationSet& c, std::uint64_t seed) {
  RelationSet reduced = reduce(c);
  for (const auto& [p, q] : condition11_failures(reduced)) {
    SampleOptions opt;
    opt.gap = 3;
    opt.seed = seed;
    opt.unit_pair = {{p, q}};
    std::optional<Tableau> witness;
    try {
      witness = sample_realization_ex(reduced, opt);
    } catch (const error&) {
      continue;  // distance-1 pin infeasible for this pair
    }
    try {
      SpecBasis basis(reduced, *witness);
      std::vector<Tableau> candidates = enumerate_ball(basis, 1);
      if (auto v = find_violation(basis, candidates)) return v;
    } catch (const error&) {
      continue;
    }
  }
  // Fallback: small-gap samples scanned at radius 2.
  for (int gap = 1; gap <= 2; ++gap) {
    Tableau t = sample_realization(reduced, gap, seed + gap);
    SpecBasis basis(reduced, t);
    if (auto v = find_violation(basis, enumerate_ball(basis, 2))) return v;
  }
  return std::nullopt;
}

bool cross_validate(const RelationSet& c, int samples, int radius, int anchor_assignments,
                    std::uint64_t seed, std::string* witness) {
  if (!is_noncritical_set(c)) fail(errc::critical_set, "cross_validate needs a noncritical set");
  bool adm = is_admissible(c);
  std::optional<CheckFailure> found;
  for (int s = 0; s < samples && !found; ++s) {
    Tableau t = sample_realization(c, 1 + (s % 3), seed + 1000 * s);
    for (int a = 0; a < anchor_assignments && !found; ++a) {
      Tableau ta = reassign_anchors(t, a);
      SpecBasis basis(c, ta);
      found = find_violation(basis, enumerate_ball(basis, radius));
    }
  }
  if (!adm && !found) found = targeted_violation(c, seed);
  bool agree = adm == !found.has_value();
  if (witness) {
    if (found)
      *witness = found->relation_id + " at " + found->tableau.str() + " -> " +
                 found->defect.str();
    else
      *witness = "no violation found";
  }
  return agree;
}

bool is_irreducible(const RelationSet& c, const Tableau& t) {
  if (!is_realization(t, c)) fail(errc::not_realization, "tableau is not a realization");
  RelationSet cmax = max_satisfied_set(t);
  for (const Relation& r : cmax.relations())
    if (!implies_for_seed(c, r, t)) return false;
  return true;
}

FrzResult frz_check(const Tableau& t) {
  if (!is_noncritical_tableau(t)) fail(errc::critical_tableau, "critical tableau");
  FrzResult res;
  RelationSet canonical = max_satisfied_set(t);
  if (is_realization(t, canonical) && is_admissible(canonical)) {
    res.status = FrzResult::Status::found;
    res.set = canonical;
    return res;
  }
  // Bounded top-down search for inclusion-maximal admissible realized subsets.
  std::map<std::string, RelationSet> good;
  std::set<std::string> visited;
  std::deque<RelationSet> queue{canonical};
  visited.insert(canonical.key());
  const size_t state_cap = 20000;
  while (!queue.empty() && visited.size() < state_cap) {
    RelationSet cur = queue.front();
    queue.pop_front();
    if (is_realization(t, cur) && is_admissible(cur)) {
      good.emplace(cur.key(), cur);
      continue;  // subsets are dominated
    }
    for (const Relation& r : cur.relations()) {
      RelationSet child = reduce(cur.without(r));
      if (visited.insert(child.key()).second) queue.push_back(child);
    }
  }
  std::vector<RelationSet> maximal;
  for (const auto& [key, cand] : good) {
    bool dominated = false;
    for (const auto& [key2, other] : good) {
      if (key == key2) continue;
      if (implies(other, cand) && !implies(cand, other)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(cand);
  }
  if (maximal.empty()) {
    res.status = FrzResult::Status::none;
    return res;
  }
  // Collapse equivalent candidates.
  std::vector<RelationSet> distinct;
  for (const RelationSet& cand : maximal) {
    bool dup = false;
    for (const RelationSet& seen : distinct)
      if (equivalent(seen, cand)) dup = true;
    if (!dup) distinct.push_back(cand);
  }
  if (distinct.size() == 1) {
    res.status = FrzResult::Status::found;
    res.set = distinct.front();
  } else {
    res.status = FrzResult::Status::ambiguous;
    res.candidates = distinct;
  }
  return res;
}

TableauModuleReport tableau_module_check(const std::vector<Tableau>& basis) {
  TableauModuleReport rep;
  ExplicitBasis eb(basis);
  rep.noncritical = std::all_of(basis.begin(), basis.end(),
                                [](const Tableau& t) { return is_noncritical_tableau(t); });
  auto instances = defining_relation_instances(eb.n());
  for (const Tableau& t : eb.members())
    for (const RelationInstance& inst : instances) {
      FormalVector defect = inst.defect(eb, t);
      if (!defect.is_zero()) rep.relation_failures.push_back({inst.id, t, std::move(defect)});
    }
  rep.relations_ok = rep.relation_failures.empty();
  std::vector<Fingerprint> prints;
  for (const Tableau& t : eb.members()) prints.emplace_back(t);
  rep.multiplicity_one = true;
  for (size_t i = 0; i < prints.size() && rep.multiplicity_one; ++i)
    for (size_t j = i + 1; j < prints.size(); ++j)
      if (fingerprints_equal(prints[i], prints[j])) {
        rep.multiplicity_one = false;
        break;
      }
  rep.gamma_ok = true;
  for (const Tableau& t : eb.members())
    for (int m = 1; m <= eb.n(); ++m) {
      std::vector<Entry> row = t.row(m);
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) continue;
      for (int k = 1; k <= m; ++k) {
        GammaCheck gc = check_gamma_action(eb, t, m, k);
        if (!gc.ok) {
          rep.gamma_ok = false;
          rep.gamma_failures.push_back({{m, k}, t.str() + " defect " + gc.defect.str()});
        }
      }
    }
  return rep;
}

HighestWeightModule hw_module_build(const std::vector<Rat>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2) fail(errc::shape, "need a weight of length >= 2");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      Rat d = lambda[i - 1] - lambda[j - 1];
      if (is_integer(d) && d <= j - i)
        fail(errc::precondition_failed,
             "lambda_" + std::to_string(i) + " - lambda_" + std::to_string(j) +
                 " is an integer not exceeding " + std::to_string(j - i));
    }
  // Group indices by integral class of lambda_i and order each group by
  // lambda_i - i, strictly decreasing.
  std::vector<std::vector<int>> groups;
  for (int i = 1; i <= n; ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (is_integer(lambda[i - 1] - lambda[g.front() - 1])) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), [&](int a, int b) {
      return lambda[a - 1] - a > lambda[b - 1] - b;
    });
    for (size_t s = 0; s + 1 < g.size(); ++s)
      if (lambda[g[s] - 1] - g[s] == lambda[g[s + 1] - 1] - g[s + 1])
        fail(errc::precondition_failed, "no strict rearrangement exists for the weight");
  }

  std::vector<Relation> rels;
  for (const auto& g : groups)
    for (int k = 1; k <= n - 1; ++k)
      for (size_t s = 0; s < g.size(); ++s) {
        if (g[s] <= k) rels.push_back({RelKind::ge, {k + 1, g[s]}, {k, g[s]}});
        if (s + 1 < g.size() && g[s] <= k && g[s + 1] <= k + 1)
          rels.push_back({RelKind::gt, {k, g[s]}, {k + 1, g[s + 1]}});
      }
  // Top-row relations tie each group's columns into one component.
  for (const auto& g : groups)
    for (size_t s = 0; s + 1 < g.size(); ++s)
      rels.push_back({RelKind::ge, {n, g[s]}, {n, g[s + 1]}});
  RelationSet c(n, std::move(rels));

  // Seed: l_{ni} = lambda_i - i + 1 and constant columns below.
  std::map<std::string, Rat> anchor_values;
  std::vector<Entry> top(n);
  int fresh = 0;
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    Rat rep = lambda[groups[gi].front() - 1] - groups[gi].front() + 1;
    Rat frac = rep - Rat(floor_rat(rep));
    std::string id;
    if (frac == 0)
      id = "0";
    else {
      id = "w" + std::to_string(++fresh);
      anchor_values[id] = frac;
    }
    for (int i : groups[gi]) {
      Rat v = lambda[i - 1] - i + 1;
      top[i - 1] = Entry{id, floor_rat(v - frac)};
    }
  }
  auto anchors = make_anchor_table(anchor_values);
  std::vector<std::vector<Entry>> rows(n);
  rows[n - 1] = top;
  for (int k = 1; k <= n - 1; ++k) {
    rows[k - 1].resize(k);
    for (int i = 1; i <= k; ++i) rows[k - 1][i - 1] = top[i - 1];
  }
  Tableau seed = Tableau::make(n, std::move(rows), anchors);

  if (!is_admissible(c)) fail(errc::internal, "constructed highest-weight set is not admissible");
  SpecBasis basis(c, seed);
  for (int k = 1; k <= n - 1; ++k)
    if (!apply_e(basis, k, FormalVector::unit(seed)).is_zero())
      fail(errc::internal, "highest-weight seed is not annihilated by e_" + std::to_string(k));
  return {c, seed};
}

}  // namespace gt
