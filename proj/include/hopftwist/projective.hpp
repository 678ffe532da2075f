#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopftwist/algebra.hpp"

namespace hopftwist {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normalized 2-cocycle c: H x H -> k^*.
struct Cocycle2 {
  GroupPtr group;
  std::vector<Scalar> values;  // values[x * n + y] = c(x, y)

  static Cocycle2 trivial(const GroupPtr& g);
  const Scalar& operator()(int x, int y) const { return values[static_cast<size_t>(x) * group->order() + y]; }
  Scalar& at(int x, int y) { return values[static_cast<size_t>(x) * group->order() + y]; }
  // Empty when c is nonvanishing, normalized and satisfies
  // c(x,y) c(xy,z) = c(y,z) c(x,yz); otherwise the first violation.
  std::string validate() const;
  // c(x,y) mu(x) mu(y) / mu(xy)
  Cocycle2 times_coboundary(const std::vector<Scalar>& mu) const;
  // Pointwise c / d.
  Cocycle2 divide(const Cocycle2& d) const;
};

// Matrices pi(h) with pi(x) pi(y) = c(x, y) pi(xy) and pi(e) = I.
struct ProjectiveRep {
  GroupPtr group;
  int dim = 0;
  std::vector<Matrix> matrices;
  Cocycle2 cocycle;
};

// Picks the given representative for every h (rescaling pi(e) to I) and
// derives the cocycle. Throws ConstructionError if a representative is
// singular or the assignment is not projective.
ProjectiveRep lift_projective(const GroupPtr& h, std::vector<Matrix> matrices);

// X_g X_h = c(g, h) X_gh. Throws ConstructionError on an invalid cocycle.
StructureConstantAlgebra twisted_group_algebra(const Cocycle2& c);

// Center of the twisted group algebra is one-dimensional.
bool is_nondegenerate(const Cocycle2& c);
// Abelian H only: b(g, h) = c(g, h) / c(h, g) has trivial radical.
bool alternating_bicharacter_perfect(const Cocycle2& c);
// c is a coboundary: the twisted group algebra has a one-dimensional module.
bool is_coboundary(const Cocycle2& c);

// Dimension of the commutant of {pi(h)}.
size_t commutant_dimension(const ProjectiveRep& v);

}  // namespace hopftwist
