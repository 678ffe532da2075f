#pragma once

#include <cstdint>

#include "hopftwist/movshev.hpp"

namespace hopftwist {

struct RepTwist {
  Twist twist;
  int candidate = 0;  // index of the functional lambda that succeeded
  Matrix lambda;      // <lambda, X> = tr(lambda X)
};

// Twist attached to an irreducible projective representation V with
// dim(V)^2 = |H|: expand Delta(lambda) in the H-orbit basis of a functional
// lambda on End(V) with <lambda, I> = 1. Candidates are tried in order
// (matrix units e_ii first, then seeded small-integer matrices), starting at
// first_candidate, at most 100 of them.
RepTwist twist_from_rep(const ProjectiveRep& v, std::uint64_t seed = 1, int first_candidate = 0);

// pi: G -> A bijective with pi(g g') = pi(g) + g . pi(g').
struct Bijective1Cocycle {
  GroupAction action;    // G acting on A
  std::vector<int> pi;   // pi[g] = element of A
};

// Empty when valid; otherwise the first violated condition.
std::string check_bijective_1cocycle_detail(const Bijective1Cocycle& data);
bool check_bijective_1cocycle(const Bijective1Cocycle& data);
// All bijective 1-cocycles for the action, by backtracking over bijections.
// Requires |G| = |A| <= 8.
std::vector<Bijective1Cocycle> find_bijective_1cocycles(const GroupAction& action);

// H = A* x| G with the dual action, its pairing and the twist
// J = |A|^-1 sum e(pi(g), b) b (x) g.
struct CocycleTwist {
  SemidirectProduct h;
  std::shared_ptr<const Pairing> pairing;
  Twist twist;
};
CocycleTwist twist_from_1cocycle(const Bijective1Cocycle& data, const Field& field = Field());

// phi(b) delta_a = e(a, b)^-1 delta_a, phi(g) delta_a = delta_{g.a + pi(g)},
// phi(b g) = phi(b) phi(g), as a projective representation of H.
ProjectiveRep heisenberg_rep(const Bijective1Cocycle& data, const Field& field = Field());

// Coproduct of B_J against its closed form, structure constants of B_J*
// against the closed forms in the Y and Z bases, and the explicit action of
// B_J* on Fun(A) as an H-equivariant algebra isomorphism onto End(V).
// The closed forms hold in the rescaled basis Y' = |A| Y of B_J*.
Report verify_eq2345(const Bijective1Cocycle& data, const Field& field = Field());

}  // namespace hopftwist
