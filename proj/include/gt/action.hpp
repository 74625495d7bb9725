#ifndef GT_ACTION_HPP
#define GT_ACTION_HPP

#include <memory>
#include <set>
#include <vector>

#include "gt/relations.hpp"
#include "gt/tableau.hpp"

namespace gt {

// Membership predicate behind the formulas: tableaux outside the basis
// contribute zero, which is the whole gating mechanism.
class Basis {
public:
  virtual ~Basis() = default;
  virtual int n() const = 0;
  virtual bool contains(const Tableau& t) const = 0;
  virtual std::string describe() const = 0;
};

// B_C(seed): all integer shifts of the seed (rows 1..n-1, anchors fixed)
// satisfying C.
class SpecBasis : public Basis {
public:
  SpecBasis(RelationSet c, Tableau seed);  // NotRealization if seed is not one

  int n() const override { return seed_.n(); }
  bool contains(const Tableau& t) const override;
  std::string describe() const override;

  const RelationSet& relations() const { return c_; }
  const Tableau& seed() const { return seed_; }

private:
  RelationSet c_;
  Tableau seed_;
};

// A finite explicit basis; membership is list membership.
class ExplicitBasis : public Basis {
public:
  explicit ExplicitBasis(std::vector<Tableau> members);

  int n() const override { return n_; }
  bool contains(const Tableau& t) const override { return members_.count(t) != 0; }
  std::string describe() const override;
  const std::set<Tableau>& members() const { return members_; }

private:
  int n_ = 0;
  std::set<Tableau> members_;
};

class FormalVector {
public:
  FormalVector() = default;
  static FormalVector unit(const Tableau& t) {
    FormalVector v;
    v.add(t, 1);
    return v;
  }

  void add(const Tableau& t, const Rat& coeff);
  void add_scaled(const FormalVector& o, const Rat& coeff);
  FormalVector operator-(const FormalVector& o) const;
  FormalVector operator+(const FormalVector& o) const;
  FormalVector scaled(const Rat& coeff) const;

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Tableau, Rat>& terms() const { return terms_; }
  friend bool operator==(const FormalVector& a, const FormalVector& b) {
    return a.terms_ == b.terms_;
  }
  std::string str() const;

private:
  std::map<Tableau, Rat> terms_;
};

// Gelfand-Tsetlin coefficients; zero when the tableau is outside the basis.
Rat coeff_e(const Basis& b, int k, int i, const Tableau& t);
Rat coeff_f(const Basis& b, int k, int i, const Tableau& t);
Rat coeff_h(const Basis& b, int k, const Tableau& t);
Rat diag_Ekk(const Basis& b, int k, const Tableau& t);

// 1 iff every partial sum L, L+z1, L+z1+z2, ... lies in the basis.
int phi(const Basis& b, const Tableau& l, const std::vector<ShiftVector>& path);

FormalVector apply_e(const Basis& b, int k, const FormalVector& v);
FormalVector apply_f(const Basis& b, int k, const FormalVector& v);
FormalVector apply_h(const Basis& b, int k, const FormalVector& v);
FormalVector apply_Ekk(const Basis& b, int k, const FormalVector& v);

// E_{ij} for |i-j| > 1 via the fixed commutator path through adjacent
// generators; every intermediate application is gated by the basis.
FormalVector apply_Eij(const Basis& b, int i, int j, const FormalVector& v);

// All basis members with shift max-norm <= radius from the seed.
std::vector<Tableau> enumerate_ball(const SpecBasis& b, int radius);

}  // namespace gt

#endif
