#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopftwist/scalars.hpp"

namespace hopftwist {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ElementSet = std::vector<int>;  // sorted element indices

// A finite group given by its dense multiplication table.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Validates the Latin-square property, identity, inverses and (full triple
  // check) associativity.
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels = {}, std::string name = "");

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  int power(int a, long k) const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::optional<int> find_label(const std::string& l) const;

  bool is_abelian() const;
  int exponent() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  int n_ = 0;
  int e_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Z/d1 x ... x Z/dr, elements indexed in mixed radix (first factor fastest).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  std::vector<int> tuple(int index) const;
  int index(const std::vector<int>& tuple) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return 0; }
  const GroupPtr& group() const { return group_; }

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
  GroupPtr group_;
};

// g -> permutation of A (g . a), required to be an action by automorphisms.
struct GroupAction {
  GroupPtr acting;
  std::shared_ptr<const AbelianGroup> target;
  std::vector<std::vector<int>> images;  // images[g][a] = g . a

  int apply(int g, int a) const { return images[g][a]; }
  // Empty when valid; otherwise describes the first violated property.
  std::string validate() const;
};

GroupAction trivial_action(const GroupPtr& g, const std::shared_ptr<const AbelianGroup>& a);
// Every action of g on a by automorphisms (homomorphisms g -> Aut(a)).
std::vector<GroupAction> all_actions(const GroupPtr& g, const std::shared_ptr<const AbelianGroup>& a);

// e(a, b) = prod zeta_{d_i}^{a_i b_i}, stored as exponents of zeta_E with E the
// exponent of A.
class Pairing {
 public:
  explicit Pairing(std::shared_ptr<const AbelianGroup> a);
  const AbelianGroup& group() const { return *a_; }
  int root_order() const { return a_->exponent(); }
  int exponent(int a, int b) const { return table_[static_cast<size_t>(a) * a_->order() + b]; }
  Scalar value(int a, int b, const Field& field) const;
  bool is_nondegenerate() const;

 private:
  std::shared_ptr<const AbelianGroup> a_;
  std::vector<int> table_;
};

Scalar pairing_value(const Pairing& p, int a, int b, const Field& field);

std::shared_ptr<const AbelianGroup> make_cyclic(int n);
std::shared_ptr<const AbelianGroup> make_abelian(std::vector<int> factors);
std::shared_ptr<const AbelianGroup> dual_group(const AbelianGroup& a);
GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

// The action of G on A* dual to an action on A: <g.b, a> = <b, g^-1 . a>.
GroupAction dual_action(const GroupAction& action, const Pairing& pairing);

// A x| G with (b, g)(b', g') = (b + g.b', g g'); element index = b + |A| g.
struct SemidirectProduct {
  GroupPtr group;
  GroupAction action;
  int element(int b, int g) const { return b + action.target->order() * g; }
  int abelian_part(int h) const { return h % action.target->order(); }
  int acting_part(int h) const { return h / action.target->order(); }
};

SemidirectProduct semidirect_product(const GroupAction& action);

GroupPtr make_dihedral(int n);       // order 2n
GroupPtr make_quaternion();          // Q8
GroupPtr make_symmetric(int n);      // S_n
GroupPtr make_alternating(int n);    // A_n
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& perms, const std::string& name);

ElementSet center(const FiniteGroup& g);
ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
int element_order(const FiniteGroup& g, int a);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& h);
bool is_solvable(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g, const ElementSet& h);
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

// A subgroup as a group in its own right with its embedding.
struct Subgroup {
  GroupPtr group;
  std::vector<int> to_parent;  // sub index -> parent index
  int from_parent(int parent_index) const;
};
Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& elements);

// Small generating set (greedy).
std::vector<int> generators(const FiniteGroup& g);
// All isomorphisms src -> dst as element maps (limit 0 = no limit).
std::vector<std::vector<int>> isomorphisms(const FiniteGroup& src, const FiniteGroup& dst, size_t limit = 0);
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

struct CatalogGroup {
  std::string name;
  GroupPtr group;
};

// Built-in inventory: cyclic and abelian products, dihedral, Q8, S3, S4, A4
// and direct products, pairwise non-isomorphic, up to the given order.
std::vector<CatalogGroup> group_catalog(int max_order);
// Invariant factor lists d1 | d2 | ... of the abelian groups of order n.
std::vector<std::vector<int>> abelian_invariant_factors(int n);
std::optional<CatalogGroup> catalog_group(const std::string& name);

}  // namespace hopftwist
