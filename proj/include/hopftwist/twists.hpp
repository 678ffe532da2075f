#pragma once

#include <optional>

#include "hopftwist/algebra.hpp"
#include "hopftwist/report.hpp"

namespace hopftwist {

// A rank-2 element J of k[G] (x) k[G] certified to satisfy
// (Delta (x) I)(J) J_12 = (I (x) Delta)(J) J_23, (eps (x) I)(J) = (I (x) eps)(J) = 1,
// together with its inverse.
class Twist {
 public:
  const TensorElement& element() const { return j_; }
  const TensorElement& inverse() const { return jinv_; }
  const GroupPtr& group() const { return j_.group(); }

 private:
  friend Twist verify_twist(const TensorElement& j, const std::optional<TensorElement>& inverse_hint);
  Twist(TensorElement j, TensorElement jinv) : j_(std::move(j)), jinv_(std::move(jinv)) {}
  TensorElement j_;
  TensorElement jinv_;
};

// Checks every twist identity; the report names the first differing
// coefficient of each failed identity. A candidate inverse is checked by
// multiplication and replaces the general inversion when it holds.
Report twist_report(const TensorElement& j, const std::optional<TensorElement>& inverse_hint = std::nullopt);
// Certified twist, or CertificateFailure carrying twist_report(j).
Twist verify_twist(const TensorElement& j, const std::optional<TensorElement>& inverse_hint = std::nullopt);

// J^x = Delta(x) J (x^-1 (x) x^-1) after rescaling x to eps(x) = 1.
// Composition: gauge_transform(gauge_transform(J, x), y) = gauge_transform(J, y x).
Twist gauge_transform(const Twist& j, const TensorElement& x);

// R^J = J_21^-1 R J.
TensorElement r_matrix(const TensorElement& base_r, const Twist& j);
TensorElement r_matrix(const Twist& j);  // base R = 1 (x) 1

// Delta^J(x) = J^-1 Delta(x) J.
TensorElement twisted_coproduct(const Twist& j, const TensorElement& x);

// Q = m(S (x) I)(J).
TensorElement antipode_element(const Twist& j);
// S^J(x) = Q^-1 S(x) Q as a matrix on the group basis (column x holds S^J(x)).
// Both antipode axioms for (k[G], Delta^J) are verified on the basis; a
// failure raises CertificateFailure.
LinearMap twisted_antipode(const Twist& j);
TensorElement apply_linear(const LinearMap& f, const TensorElement& x);

// u = sum S'(b_i) a_i for R = sum a_i (x) b_i.
TensorElement drinfeld_element(const TensorElement& r, const LinearMap& antipode);
// Delta^J(u) = u (x) u, u^2 = 1, u central.
Report drinfeld_report(const TensorElement& u, const Twist& j);

// R_u = (1 (x) 1 + 1 (x) u + u (x) 1 - u (x) u) / 2 for a central u of order <= 2.
TensorElement r_u(const GroupPtr& g, int u);

// The five axioms of a triangular structure on (k[G], Delta^J):
// invertible, R Delta^J(x) = Delta^J,op(x) R, (Delta^J (x) I)R = R_13 R_23,
// (I (x) Delta^J)R = R_13 R_12, R_21 R = 1 (x) 1.
// A candidate inverse may be supplied (it is checked, not trusted).
Report verify_triangular(const Twist& j, const TensorElement& r,
                         const std::optional<TensorElement>& r_inverse = std::nullopt);

// Both leg spans of R have dimension |G|.
bool verify_minimal(const TensorElement& r);

// Trace of left multiplication by x on k[G].
Scalar regular_trace(const TensorElement& x);

}  // namespace hopftwist
