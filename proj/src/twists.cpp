#include "hopftwist/twists.hpp"

namespace hopftwist {

namespace {

void add_equality(Report& r, const std::string& name, const TensorElement& lhs, const TensorElement& rhs) {
  auto diff = describe_difference(lhs, rhs);
  r.add(name, diff.empty(), diff);
}

// Report plus the inverse when one was found.
std::pair<Report, std::optional<TensorElement>> check_twist(const TensorElement& j,
                                                            const std::optional<TensorElement>& hint) {
  Report r("twist");
  if (j.rank() != 2) {
    r.add("rank", false, "expected a rank-2 tensor, got rank " + std::to_string(j.rank()));
    return {r, std::nullopt};
  }
  const auto& g = j.group();
  auto unit1 = TensorElement::unit(g, 1);
  add_equality(r, "counit-left", counit_leg(j, 0), unit1);
  add_equality(r, "counit-right", counit_leg(j, 1), unit1);
  auto lhs = coproduct_leg(j, 0) * embed(j, {0, 1}, 3);
  auto rhs = coproduct_leg(j, 1) * embed(j, {1, 2}, 3);
  add_equality(r, "cocycle", lhs, rhs);
  std::optional<TensorElement> inv;
  auto unit2 = TensorElement::unit(g, 2);
  if (hint && hint->rank() == 2 && hint->group_order() == g->order() && j * *hint == unit2 && *hint * j == unit2) {
    inv = hint;
    r.add("invertible", true, "supplied inverse certified");
  } else {
    try {
      inv = algebra_invert(j);
      r.add("invertible", true);
    } catch (const NotInvertible& e) {
      r.add("invertible", false, e.what());
    }
  }
  r.record("support", static_cast<long>(j.size()));
  return {r, inv};
}

TensorElement column(const LinearMap& f, const GroupPtr& g, int x) {
  TensorElement out(g, 1);
  for (int y = 0; y < g->order(); ++y)
    if (!f(y, x).is_zero()) out.add_term({y}, f(y, x));
  return out;
}

// m((f (x) I)(t)) or m((I (x) f)(t)) for a rank-2 t.
TensorElement multiply_after(const LinearMap& f, const TensorElement& t, int slot) {
  const auto& g = t.group();
  TensorElement out(g, 1);
  for (const auto& [k, c] : t.terms()) {
    auto idx = t.unpack(k);
    auto a = slot == 0 ? column(f, g, idx[0]) : TensorElement::basis(g, {idx[0]});
    auto b = slot == 1 ? column(f, g, idx[1]) : TensorElement::basis(g, {idx[1]});
    out += c * (a * b);
  }
  return out;
}

}  // namespace

Report twist_report(const TensorElement& j, const std::optional<TensorElement>& inverse_hint) {
  return check_twist(j, inverse_hint).first;
}

Twist verify_twist(const TensorElement& j, const std::optional<TensorElement>& inverse_hint) {
  auto [report, inv] = check_twist(j, inverse_hint);
  if (!report.passed()) throw CertificateFailure(report);
  return Twist(j, *inv);
}

Twist gauge_transform(const Twist& j, const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("gauge element must have rank 1");
  Scalar eps = hopf_counit(x);
  if (eps.is_zero()) throw NotInvertible("gauge element has counit 0");
  auto xn = eps.inverse() * x;
  auto xinv = algebra_invert(xn);
  auto out = hopf_coproduct(xn) * j.element() * outer(xinv, xinv);
  return verify_twist(out);
}

TensorElement r_matrix(const TensorElement& base_r, const Twist& j) {
  return swap_legs(j.inverse()) * base_r * j.element();
}

TensorElement r_matrix(const Twist& j) { return swap_legs(j.inverse()) * j.element(); }

TensorElement twisted_coproduct(const Twist& j, const TensorElement& x) {
  return j.inverse() * hopf_coproduct(x) * j.element();
}

TensorElement antipode_element(const Twist& j) { return multiply_legs(antipode_leg(j.element(), 0)); }

LinearMap twisted_antipode(const Twist& j) {
  const auto& g = j.group();
  const int n = g->order();
  auto q = antipode_element(j);
  auto qinv = algebra_invert(q);
  LinearMap s(n, n);
  for (int x = 0; x < n; ++x) {
    auto col = qinv * TensorElement::basis(g, {g->inv(x)}) * q;
    for (const auto& [k, c] : col.terms()) s(static_cast<size_t>(k), x) = c;
  }
  Report r("twisted antipode");
  auto unit1 = TensorElement::unit(g, 1);
  for (int x = 0; x < n; ++x) {
    auto d = twisted_coproduct(j, TensorElement::basis(g, {x}));
    auto left = multiply_after(s, d, 0);
    auto right = multiply_after(s, d, 1);
    if (left != unit1) r.add("left axiom at " + g->label(x), false, describe_difference(left, unit1));
    if (right != unit1) r.add("right axiom at " + g->label(x), false, describe_difference(right, unit1));
  }
  if (!r.passed()) throw CertificateFailure(r);
  return s;
}

TensorElement apply_linear(const LinearMap& f, const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("apply_linear needs a rank-1 element");
  TensorElement out(x.group(), 1);
  for (const auto& [k, c] : x.terms()) out += c * column(f, x.group(), static_cast<int>(k));
  return out;
}

TensorElement drinfeld_element(const TensorElement& r, const LinearMap& antipode) {
  if (r.rank() != 2) throw AlgebraError("drinfeld_element needs a rank-2 R");
  const auto& g = r.group();
  TensorElement u(g, 1);
  for (const auto& [k, c] : r.terms()) {
    auto idx = r.unpack(k);
    u += c * (column(antipode, g, idx[1]) * TensorElement::basis(g, {idx[0]}));
  }
  return u;
}

Report drinfeld_report(const TensorElement& u, const Twist& j) {
  Report r("drinfeld element");
  const auto& g = j.group();
  add_equality(r, "grouplike", twisted_coproduct(j, u), outer(u, u));
  add_equality(r, "square", u * u, TensorElement::unit(g, 1));
  bool central = true;
  std::string witness;
  for (int x = 0; x < g->order() && central; ++x) {
    auto b = TensorElement::basis(g, {x});
    if (u * b != b * u) {
      central = false;
      witness = "does not commute with " + g->label(x);
    }
  }
  r.add("central", central, witness);
  r.record("u", u.to_string());
  return r;
}

TensorElement r_u(const GroupPtr& g, int u) {
  if (u < 0 || u >= g->order()) throw GroupError("element index out of range");
  if (g->mul(u, u) != g->identity()) throw GroupError("u must satisfy u^2 = e");
  for (int x = 0; x < g->order(); ++x)
    if (g->mul(u, x) != g->mul(x, u)) throw GroupError("u must be central");
  const int e = g->identity();
  auto half = Scalar::rational(1, 2);
  TensorElement r(g, 2);
  r.add_term({e, e}, half);
  r.add_term({e, u}, half);
  r.add_term({u, e}, half);
  r.add_term({u, u}, -half);
  return r;
}

Report verify_triangular(const Twist& j, const TensorElement& r, const std::optional<TensorElement>& r_inverse) {
  Report rep("triangular");
  const auto& g = j.group();
  if (r.rank() != 2 || r.group_order() != g->order()) throw AlgebraError("R must be a rank-2 tensor over the twist's group");
  auto unit2 = TensorElement::unit(g, 2);

  const auto r21 = swap_legs(r);
  const auto r21r = r21 * r;
  if (r_inverse) {
    bool ok = r * *r_inverse == unit2 && *r_inverse * r == unit2;
    rep.add("invertible", ok, ok ? "supplied inverse certified" : "supplied inverse is not a two-sided inverse");
  } else if (r21r == unit2 && r * r21 == unit2) {
    rep.add("invertible", true, "R21 is a two-sided inverse");
  } else {
    try {
      algebra_invert(r);
      rep.add("invertible", true);
    } catch (const NotInvertible& e) {
      rep.add("invertible", false, e.what());
    }
  }

  // Both sides are algebra maps of x, so generators suffice on larger groups.
  std::vector<int> xs;
  if (g->order() <= 16) {
    for (int x = 0; x < g->order(); ++x) xs.push_back(x);
  } else {
    xs = generators(*g);
  }
  const auto& jj = j.element();
  const auto& jinv = j.inverse();
  auto j21 = swap_legs(jj);
  auto j21inv = swap_legs(jinv);
  auto rjinv = r * jinv;
  bool ok = true;
  std::string witness;
  for (int x : xs) {
    auto xx = TensorElement::basis(g, {x, x});
    auto lhs = rjinv * xx * jj;
    auto rhs = j21inv * xx * j21 * r;
    if (lhs != rhs) {
      ok = false;
      witness = "x = " + g->label(x) + " " + describe_difference(lhs, rhs);
      break;
    }
  }
  rep.add("quasi-cocommutative", ok, ok ? "checked on " + std::to_string(xs.size()) + " elements" : witness);

  auto r13 = embed(r, {0, 2}, 3);
  auto r23 = embed(r, {1, 2}, 3);
  auto r12 = embed(r, {0, 1}, 3);
  auto j12 = embed(jj, {0, 1}, 3);
  auto j23 = embed(jj, {1, 2}, 3);
  auto j12inv = embed(jinv, {0, 1}, 3);
  auto j23inv = embed(jinv, {1, 2}, 3);
  add_equality(rep, "hexagon-left", j12inv * coproduct_leg(r, 0) * j12, r13 * r23);
  add_equality(rep, "hexagon-right", j23inv * coproduct_leg(r, 1) * j23, r13 * r12);
  add_equality(rep, "unitary", r21r, unit2);
  return rep;
}

bool verify_minimal(const TensorElement& r) {
  if (r.rank() != 2) throw AlgebraError("verify_minimal needs a rank-2 R");
  return leg_rank(r) == static_cast<size_t>(r.group_order()) && leg_rank(swap_legs(r)) == static_cast<size_t>(r.group_order());
}

Scalar regular_trace(const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("regular_trace needs a rank-1 element");
  return Scalar::integer(x.group_order()) * x.coefficient({x.group()->identity()});
}

}  // namespace hopftwist
