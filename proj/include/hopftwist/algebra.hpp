#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopftwist/groups.hpp"
#include "hopftwist/linalg.hpp"
#include "hopftwist/scalars.hpp"

namespace hopftwist {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// An element of k[G], k[G]^{x2} or k[G]^{x3}: a sparse map from index tuples
// to nonzero scalars. Tuples are packed as i0 + n*i1 + n^2*i2.
class TensorElement {
 public:
  using Key = std::uint64_t;

  TensorElement() = default;
  TensorElement(GroupPtr group, int rank);
  static TensorElement basis(GroupPtr group, const std::vector<int>& index, const Scalar& c = Scalar::integer(1));
  static TensorElement unit(GroupPtr group, int rank);

  int rank() const { return rank_; }
  const GroupPtr& group() const { return group_; }
  int group_order() const { return group_->order(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Key pack(const std::vector<int>& index) const;
  std::vector<int> unpack(Key key) const;
  int slot(Key key, int s) const;

  Scalar coefficient(const std::vector<int>& index) const;
  void add_term(const std::vector<int>& index, const Scalar& c);
  void add_key(Key key, const Scalar& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator-() const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const Scalar& s, const TensorElement& a);
  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  std::vector<Scalar> coefficient_list() const;
  // Human-readable "c*[g|h] + ..." using group labels.
  std::string to_string() const;

 private:
  void check_compatible(const TensorElement& o) const;
  GroupPtr group_;
  int rank_ = 0;
  std::map<Key, Scalar> terms_;
};

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

// First index (in key order) where a and b differ, with both coefficients.
struct TensorDifference {
  std::vector<int> index;
  Scalar left;
  Scalar right;
};
std::optional<TensorDifference> first_difference(const TensorElement& a, const TensorElement& b);
// "[x|y]: lhs <c> vs rhs <d>" for the first difference, empty when a == b.
std::string describe_difference(const TensorElement& a, const TensorElement& b);

// Hopf structure of a group algebra, extended linearly.
TensorElement hopf_coproduct(const TensorElement& x);        // rank 1 -> 2
Scalar hopf_counit(const TensorElement& x);                  // rank 1 -> scalar
TensorElement hopf_antipode(const TensorElement& x);         // rank 1 -> 1
// Delta applied to the given slot (rank r -> r + 1, the two copies adjacent).
TensorElement coproduct_leg(const TensorElement& x, int slot);
// epsilon applied to the given slot (rank r -> r - 1).
TensorElement counit_leg(const TensorElement& x, int slot);
// S applied to the given slot.
TensorElement antipode_leg(const TensorElement& x, int slot);
// Multiplication map m: rank 2 -> rank 1, a (x) b -> ab.
TensorElement multiply_legs(const TensorElement& x);

// Places the slots of x at the given target positions (0-based) inside a
// rank-target_rank tensor, the identity elsewhere. embed(J, {1, 0}, 2) = J21,
// embed(J, {1, 2}, 3) = J23.
TensorElement embed(const TensorElement& x, const std::vector<int>& positions, int target_rank);
TensorElement swap_legs(const TensorElement& x);
// a (x) b for tensors whose ranks add up to at most 3.
TensorElement outer(const TensorElement& a, const TensorElement& b);

// Two-sided inverse. Works in the subalgebra spanned by the subgroup of G^r
// generated by the support: Fourier inversion when that subgroup is abelian and
// its roots of unity are available, otherwise an exact solve against the
// left-regular representation. Throws NotInvertible.
TensorElement algebra_invert(const TensorElement& a);
// Same, always via the regular-representation solve.
TensorElement algebra_invert_dense(const TensorElement& a);

// Maps the support of x through a group homomorphism-like index map.
TensorElement map_indices(const TensorElement& x, const GroupPtr& target, const std::vector<int>& index_map);
// Applies f to each coefficient (e.g. field coercion).
template <class F>
TensorElement map_coefficients(const TensorElement& x, F f) {
  TensorElement out(x.group(), x.rank());
  for (const auto& [k, c] : x.terms()) out.add_key(k, f(c));
  return out;
}

// Rank of the matrix of coefficients c[(i),(j)] of a rank-2 tensor (left legs
// as rows); equals the dimension of the span of either set of legs.
size_t leg_rank(const TensorElement& r);

// Finite-dimensional algebra by structure constants: Y_i * Y_j = sum_k m_ijk Y_k.
class StructureConstantAlgebra {
 public:
  using Sparse = std::vector<std::pair<int, Scalar>>;

  StructureConstantAlgebra() = default;
  StructureConstantAlgebra(int dim, std::vector<std::string> labels);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Sparse& product(int i, int j) const { return mult_[static_cast<size_t>(i) * dim_ + j]; }
  void set_product(int i, int j, Sparse v);
  Scalar constant(int i, int j, int k) const;
  const Vector& unit() const { return unit_; }
  void set_unit(Vector u) { unit_ = std::move(u); }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_vector(int i) const;
  // Left multiplication by a as a matrix acting on coordinate columns.
  Matrix left_multiplication(const Vector& a) const;

  // Empty when the axiom holds; otherwise names the first failing triple.
  std::string check_associative() const;
  std::string check_unit() const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Sparse> mult_;
  Vector unit_;
};

// A coalgebra on a basis: coproduct(x) = sum c * (i (x) j), counit(x).
struct CoalgebraTable {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::tuple<int, int, Scalar>>> coproduct;
  Vector counit;

  std::string check_coassociative() const;
  std::string check_counit() const;
};

// <Y_i * Y_j, x> = coefficient of (i, j) in coproduct(x); unit = counit.
// Throws AlgebraError on non-coassociative input unless the caller has
// already certified coassociativity and passes verify = false.
StructureConstantAlgebra dualize_coalgebra(const CoalgebraTable& c, bool verify = true);

// The regular-representation algebra (k[G], m) or a twisted group algebra.
size_t center_dimension(const StructureConstantAlgebra& a);
size_t abelianization_dimension(const StructureConstantAlgebra& a);

}  // namespace hopftwist
