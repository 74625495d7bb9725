#ifndef GT_VERIFIER_HPP
#define GT_VERIFIER_HPP

#include <functional>
#include <optional>

#include "gt/gamma.hpp"

namespace gt {

// One defining-relation instance, e.g. "[e1,f1]-h1", as a defect map.
struct RelationInstance {
  std::string id;
  std::function<FormalVector(const Basis&, const Tableau&)> defect;
};

// Instances of the gl_n defining relations: Cartan commutativity, [e_i,f_j] =
// delta_ij h_i, weight brackets [E_kk, e_i] and [E_kk, f_i], the Serre
// relations, and distant commutation.
std::vector<RelationInstance> defining_relation_instances(int n);

struct CheckFailure {
  std::string relation_id;
  Tableau tableau;
  FormalVector defect;
};

struct VerificationReport {
  std::string spec;
  int radius = 0;
  size_t checks_run = 0;
  size_t tableaux_checked = 0;
  bool passed = false;
  std::vector<CheckFailure> failures;
};

VerificationReport check_defining_relations(const SpecBasis& b, int radius);

std::optional<CheckFailure> find_violation(const Basis& b, const std::vector<Tableau>& candidates);

// Builds a realization of a non-admissible set on which some [e_k,f_k]-h_k
// defect is exactly nonzero, following the distance-1 witness recipe; the
// search tries every condition-(11)-failing adjoining pair.
std::optional<CheckFailure> targeted_violation(const RelationSet& c, std::uint64_t seed = 0);

// is_admissible versus bounded empirical verification; true on agreement.
bool cross_validate(const RelationSet& c, int samples, int radius, int anchor_assignments,
                    std::uint64_t seed = 0, std::string* witness = nullptr);

bool is_irreducible(const RelationSet& c, const Tableau& t);

struct FrzResult {
  enum class Status { found, ambiguous, none } status = Status::none;
  std::optional<RelationSet> set;
  std::vector<RelationSet> candidates;  // maximal candidates when ambiguous
};

FrzResult frz_check(const Tableau& t);

struct TableauModuleReport {
  bool noncritical = false;        // (i)
  bool relations_ok = false;       // (ii)
  bool multiplicity_one = false;   // (iii)
  bool gamma_ok = false;           // (iv)
  std::vector<CheckFailure> relation_failures;
  std::vector<std::pair<std::pair<int, int>, std::string>> gamma_failures;
  bool all() const { return noncritical && relations_ok && multiplicity_one && gamma_ok; }
};

TableauModuleReport tableau_module_check(const std::vector<Tableau>& basis);

struct HighestWeightModule {
  RelationSet relations;
  Tableau seed;
};

// L(lambda) as a basis spec, when lambda_i - lambda_j is non-integral or
// exceeds j - i for all 1 <= i < j <= n-1.
HighestWeightModule hw_module_build(const std::vector<Rat>& lambda);

}  // namespace gt

#endif
