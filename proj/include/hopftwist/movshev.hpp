#pragma once

#include "hopftwist/projective.hpp"
#include "hopftwist/twists.hpp"

namespace hopftwist {

// B_J*: basis Y_x (x in H) dual to B_J = (k[H], x -> (x (x) x) J), with H
// acting by h . Y_x = Y_hx.
struct MovshevAlgebra {
  GroupPtr group;
  StructureConstantAlgebra algebra;
};

// Coproduct table of B_J; coassociativity is checked.
CoalgebraTable build_BJ(const Twist& j);
// Same for an arbitrary rank-2 tensor (no checks); used to test the
// equivalence between coassociativity and the twist identities.
CoalgebraTable build_BJ_unchecked(const TensorElement& j);

// Dual algebra with the H-action; throws CertificateFailure if H does not
// act by automorphisms.
MovshevAlgebra dual_movshev(const Twist& j);

// Center dimension 1 and dimension a perfect square.
Report certify_simple(const MovshevAlgebra& m);
// Trace of h on B_J* is |H| at e and 0 elsewhere.
Report certify_regular_action(const MovshevAlgebra& m);

// For J with J_21 = J: invertible x with Delta(x)(x^-1 (x) x^-1) = J.
// Throws std::invalid_argument when J is not symmetric and ConstructionError
// when the characters of B_J* do not split over the field.
TensorElement trivialize_symmetric_twist(const Twist& j, std::uint64_t seed = 1);

// Number of grouplike elements of (k[G], Delta^J).
size_t count_grouplikes(const Twist& j);

// Cocycle of the projective representation of H realizing the action on a
// central simple H-algebra: u_g u_h = c(g,h) u_gh where h acts as
// conjugation by u_h. Throws ConstructionError if some automorphism is not
// inner with a one-dimensional solution space.
Cocycle2 inner_action_cocycle(const MovshevAlgebra& m);

// An H-equivariant unital algebra isomorphism B_J* -> End(V) exists.
// Both sides are simple with H acting through projective representations of
// dimension |H|^1/2, so this holds exactly when the two cocycles are
// cohomologous. Throws std::invalid_argument on a dimension mismatch.
Report match_projective_rep(const Twist& j, const ProjectiveRep& v);
// Same question for two Movshev algebras over one group.
Report match_movshev(const MovshevAlgebra& a, const MovshevAlgebra& b);

}  // namespace hopftwist
