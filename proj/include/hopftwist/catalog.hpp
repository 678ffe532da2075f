#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "hopftwist/constructions.hpp"

namespace hopftwist {

// Raised when two criteria that must agree by theorem disagree on an input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// (G, H, V, u): H a subgroup of G given by its sorted elements, V an
// irreducible projective representation of make_subgroup(G, H).group with
// dim(V)^2 = |H|, u central in G with u^2 = e.
struct Quadruple {
  GroupPtr g;
  ElementSet h;
  ProjectiveRep v;
  int u = 0;

  // Empty when every invariant holds; otherwise the first violation.
  std::string validate() const;
};

struct TriangularHopfDatum {
  Quadruple quad;
  Subgroup sub;
  Twist twist;         // J over k[H], pushed into k[G]
  Twist subgroup_twist;
  int candidate = 0;   // lambda index used by twist_from_rep
  TensorElement r;     // J21^-1 J R_u
  TensorElement drinfeld;
  ElementSet minimal_part;  // <H, u>
  bool minimal = false;
  size_t grouplikes = 0;
  bool solvable = false;
  bool deduplicated = false;
  Report report;       // every certificate and integer invariant
};

// F(G, H, V, u) = (k[G]^J, J21^-1 J R_u) with the full verification battery.
// Throws invalid_argument on a malformed quadruple or when the
// characteristic divides |G|, ConstructionError on a degenerate cocycle.
TriangularHopfDatum assign_datum(const Quadruple& q, std::uint64_t seed = 1);

// Leg span of R is all of k[G], cross-checked against <H, u> = G.
// Throws TheoremViolation if the two criteria disagree.
bool is_minimal_datum(const TriangularHopfDatum& d);
bool is_minimal_datum(const GroupPtr& g, const ElementSet& h, int u, const TensorElement& r);

// All quadruples with |G| = n over the built-in catalog (abelian H through
// Heisenberg representations, nonabelian H through representations
// discovered by the bijective 1-cocycle finder), in the order
// (catalog index, |H|, subgroup, class, u). Isomorphic quadruples are
// merged when dedup is set and n <= 16.
std::vector<Quadruple> enumerate_quadruple_inputs(int n, const Field& field = Field(), bool dedup = true);
std::vector<TriangularHopfDatum> enumerate_quadruples(int n, const Field& field = Field(), bool dedup = true,
                                                      std::uint64_t seed = 1);

// Re-runs assign_datum over F_p and compares every certificate and recorded
// invariant with d. Requires p prime, p not dividing |G| and p = 1 mod the
// conductor of V.
Report char_p_mirror(const TriangularHopfDatum& d, std::uint64_t p, std::uint64_t seed = 1);

// Name of a catalog group isomorphic to g, or "?" when none is built in.
std::string catalog_name(const FiniteGroup& g);

}  // namespace hopftwist
