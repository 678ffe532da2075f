#include <random>

#include "doctest.h"
#include "hopftwist/twists.hpp"

using namespace hopftwist;

namespace {

GroupPtr klein() { return make_abelian({2, 2})->group(); }

TensorElement e1_tensor(const GroupPtr& v) {
  auto half = Scalar::rational(1, 2);
  TensorElement j(v, 2);
  j.add_term({0, 0}, half);
  j.add_term({0, 2}, half);
  j.add_term({1, 0}, half);
  j.add_term({1, 2}, -half);
  return j;
}

TensorElement random_unit_normalized(const GroupPtr& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  for (;;) {
    TensorElement x(g, 1);
    for (int k = 0; k < g->order(); ++k) x.add_term({k}, Scalar::integer(coef(rng)));
    x.add_term({g->identity()}, Scalar::integer(5));
    if (hopf_counit(x).is_zero()) continue;
    try {
      algebra_invert(x);
      return x;
    } catch (const NotInvertible&) {
    }
  }
}

// (D' (x) I) applied leg by leg, D' a rank-1 -> rank-2 map.
template <class F>
TensorElement on_left_leg(const TensorElement& t, F d) {
  TensorElement out(t.group(), 3);
  for (const auto& [k, c] : t.terms()) {
    auto idx = t.unpack(k);
    out += c * outer(d(TensorElement::basis(t.group(), {idx[0]})), TensorElement::basis(t.group(), {idx[1]}));
  }
  return out;
}
template <class F>
TensorElement on_right_leg(const TensorElement& t, F d) {
  TensorElement out(t.group(), 3);
  for (const auto& [k, c] : t.terms()) {
    auto idx = t.unpack(k);
    out += c * outer(TensorElement::basis(t.group(), {idx[0]}), d(TensorElement::basis(t.group(), {idx[1]})));
  }
  return out;
}

}  // namespace

TEST_CASE("identity and E1 twists verify") {
  auto v = klein();
  CHECK(twist_report(TensorElement::unit(v, 2)).passed());
  auto j = verify_twist(e1_tensor(v));
  CHECK(j.element() * j.inverse() == TensorElement::unit(v, 2));
}

TEST_CASE("a tensor failing the counit identity is rejected with a witness") {
  auto v = klein();
  auto bad = TensorElement::unit(v, 2) + TensorElement::basis(v, {0, 2});
  auto r = twist_report(bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("counit-left"));
  CHECK_FALSE(r.find("counit-left")->passed);
  CHECK(r.find("counit-left")->detail.find("lhs") != std::string::npos);
  CHECK_THROWS_AS(verify_twist(bad), CertificateFailure);
}

TEST_CASE("mutated E1 fails the cocycle identity") {
  auto v = klein();
  auto j = e1_tensor(v);
  j.add_term({3, 3}, Scalar::integer(1));
  j.add_term({3, 0}, Scalar::integer(-1));  // keeps (I (x) eps) J = 1
  j.add_term({0, 3}, Scalar::integer(-1));
  j.add_term({0, 0}, Scalar::integer(1));
  auto r = twist_report(j);
  CHECK(r.find("counit-left")->passed);
  CHECK(r.find("counit-right")->passed);
  CHECK_FALSE(r.find("cocycle")->passed);
}

TEST_CASE("gauge transformations") {
  auto v = klein();
  auto one = verify_twist(TensorElement::unit(v, 2));
  auto j = verify_twist(e1_tensor(v));
  CHECK(gauge_transform(j, TensorElement::unit(v, 1)).element() == j.element());

  std::mt19937 rng(2024);
  for (int t = 0; t < 5; ++t) {
    auto x = random_unit_normalized(v, rng);
    auto xn = hopf_counit(x).inverse() * x;
    auto sym = gauge_transform(one, x);
    CHECK(sym.element() == hopf_coproduct(xn) * outer(algebra_invert(xn), algebra_invert(xn)));
    CHECK(swap_legs(sym.element()) == sym.element());
    CHECK(r_matrix(sym) == TensorElement::unit(v, 2));

    auto y = random_unit_normalized(v, rng);
    // (J^x)^y = J^{yx}
    auto lhs = gauge_transform(gauge_transform(j, x), y);
    auto rhs = gauge_transform(j, y * x);
    CHECK(lhs.element() == rhs.element());
  }
  TensorElement zero_counit(v, 1);
  zero_counit.add_term({0}, Scalar::integer(1));
  zero_counit.add_term({1}, Scalar::integer(-1));
  CHECK_THROWS_AS(gauge_transform(j, zero_counit), NotInvertible);
}

TEST_CASE("gauge closure on a nonabelian group") {
  auto s3 = make_symmetric(3);
  auto one = verify_twist(TensorElement::unit(s3, 2));
  std::mt19937 rng(7);
  auto x = random_unit_normalized(s3, rng);
  auto y = random_unit_normalized(s3, rng);
  auto jx = gauge_transform(one, x);
  CHECK(twist_report(jx.element()).passed());
  CHECK(gauge_transform(jx, y).element() == gauge_transform(one, y * x).element());
  CHECK(verify_triangular(jx, r_matrix(jx)).passed());
}

TEST_CASE("R-matrices") {
  auto v = klein();
  auto one = verify_twist(TensorElement::unit(v, 2));
  CHECK(r_matrix(one) == TensorElement::unit(v, 2));
  auto j = verify_twist(e1_tensor(v));
  auto r = r_matrix(j);
  CHECK(r == swap_legs(algebra_invert(j.element())) * j.element());
  CHECK(r.size() == 16);
  CHECK(swap_legs(r) * r == TensorElement::unit(v, 2));
  CHECK(r_matrix(TensorElement::unit(v, 2), j) == r);
}

TEST_CASE("twisted coproduct") {
  auto v = klein();
  auto one = verify_twist(TensorElement::unit(v, 2));
  auto j = verify_twist(e1_tensor(v));
  for (int x = 0; x < 4; ++x) {
    auto b = TensorElement::basis(v, {x});
    CHECK(twisted_coproduct(one, b) == hopf_coproduct(b));
    auto d = twisted_coproduct(j, b);
    auto dj = [&](const TensorElement& y) { return twisted_coproduct(j, y); };
    CHECK(on_left_leg(d, dj) == on_right_leg(d, dj));
  }
  auto c = Scalar::rational(3, 7) * TensorElement::unit(v, 1);
  CHECK(twisted_coproduct(j, c) == Scalar::rational(3, 7) * TensorElement::unit(v, 2));
  // k[V4] is commutative, so conjugating by J leaves Delta unchanged
  auto g = TensorElement::basis(v, {2});
  CHECK(twisted_coproduct(j, g) == hopf_coproduct(g));
}

TEST_CASE("twisted antipode") {
  auto v = klein();
  auto one = verify_twist(TensorElement::unit(v, 2));
  auto s = twisted_antipode(one);
  for (int x = 0; x < 4; ++x)
    CHECK(apply_linear(s, TensorElement::basis(v, {x})) == hopf_antipode(TensorElement::basis(v, {x})));
  auto j = verify_twist(e1_tensor(v));
  auto sj = twisted_antipode(j);  // throws if either axiom fails
  CHECK(apply_linear(sj, TensorElement::unit(v, 1)) == TensorElement::unit(v, 1));
}

TEST_CASE("twisted antipode on a nonabelian group needs conjugation by Q on the correct side") {
  // E1 placed on a Klein four subgroup {e, b, g, bg} of D4, then gauged
  auto d4 = make_dihedral(4);
  int b = -1, g = -1;
  for (int x = 0; x < 8 && g < 0; ++x)
    for (int y = 0; y < 8 && g < 0; ++y)
      if (x != y && x != d4->identity() && y != d4->identity() && d4->mul(x, x) == d4->identity() &&
          d4->mul(y, y) == d4->identity() && d4->mul(x, y) == d4->mul(y, x)) {
        b = x;
        g = y;
      }
  REQUIRE(g >= 0);
  const int e = d4->identity();
  auto half = Scalar::rational(1, 2);
  TensorElement raw(d4, 2);
  raw.add_term({e, e}, half);
  raw.add_term({e, g}, half);
  raw.add_term({b, e}, half);
  raw.add_term({b, g}, -half);
  std::mt19937 rng(11);
  auto j = gauge_transform(verify_twist(raw), random_unit_normalized(d4, rng));
  auto sj = twisted_antipode(j);
  auto q = antipode_element(j);
  auto qinv = algebra_invert(q);
  bool other_side_differs = false;
  for (int x = 0; x < 8; ++x) {
    auto t = TensorElement::basis(d4, {x});
    CHECK(apply_linear(sj, t) == qinv * hopf_antipode(t) * q);
    if (q * hopf_antipode(t) * qinv != qinv * hopf_antipode(t) * q) other_side_differs = true;
  }
  CHECK(other_side_differs);
}

TEST_CASE("Drinfeld elements") {
  auto v = klein();
  auto one = verify_twist(TensorElement::unit(v, 2));
  CHECK(drinfeld_element(TensorElement::unit(v, 2), twisted_antipode(one)) == TensorElement::unit(v, 1));

  auto j = verify_twist(e1_tensor(v));
  auto u = drinfeld_element(r_matrix(j), twisted_antipode(j));
  CHECK(u == TensorElement::unit(v, 1));
  CHECK(drinfeld_report(u, j).passed());
  CHECK(regular_trace(u) == Scalar::integer(4));

  auto z2 = make_cyclic(2)->group();
  auto t = verify_twist(TensorElement::unit(z2, 2));
  auto uz = drinfeld_element(r_u(z2, 1), twisted_antipode(t));
  CHECK(uz == TensorElement::basis(z2, {1}));
  CHECK(drinfeld_report(uz, t).passed());
}

TEST_CASE("the R_u correction") {
  auto z2 = make_cyclic(2)->group();
  CHECK(r_u(z2, 0) == TensorElement::unit(z2, 2));
  auto r = r_u(z2, 1);
  CHECK(r.size() == 4);
  CHECK(swap_legs(r) == r);
  CHECK(swap_legs(r) * r == TensorElement::unit(z2, 2));
  CHECK(r * r == TensorElement::unit(z2, 2));
  auto s3 = make_symmetric(3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) transposition = x;
  CHECK_THROWS_AS(r_u(s3, transposition), GroupError);
  auto z4 = make_cyclic(4)->group();
  CHECK_THROWS_AS(r_u(z4, 1), GroupError);
}

TEST_CASE("triangularity checks") {
  auto z2 = make_cyclic(2)->group();
  auto t = verify_twist(TensorElement::unit(z2, 2));
  CHECK(verify_triangular(t, TensorElement::unit(z2, 2)).passed());
  CHECK(verify_triangular(t, r_u(z2, 1)).passed());
  CHECK(verify_triangular(t, r_u(z2, 1), r_u(z2, 1)).passed());

  auto bad = verify_triangular(t, TensorElement::basis(z2, {0, 1}));
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.find("hexagon-left")->passed);
  CHECK(bad.find("quasi-cocommutative")->passed);

  auto v = klein();
  auto j = verify_twist(e1_tensor(v));
  auto r = r_matrix(j);
  auto hint = algebra_invert(j.element()) * swap_legs(j.element());
  auto rep = verify_triangular(j, r, hint);
  CHECK(rep.passed());
  CHECK_FALSE(verify_triangular(j, r, TensorElement::unit(v, 2)).passed());
}

TEST_CASE("minimality") {
  auto v = klein();
  CHECK_FALSE(verify_minimal(TensorElement::unit(v, 2)));
  auto j = verify_twist(e1_tensor(v));
  auto r = r_matrix(j);
  CHECK(verify_minimal(r));

  std::mt19937 rng(3);
  for (int t = 0; t < 3; ++t) {
    auto x = random_unit_normalized(v, rng);
    auto xinv = algebra_invert(x);
    CHECK(verify_minimal(outer(x, x) * r * outer(xinv, xinv)) == verify_minimal(r));
  }

  // G = V4 x Z/2 with the E1 twist on the V4 factor and u the Z/2 generator
  auto g = direct_product(*v, *make_cyclic(2)->group());
  std::vector<int> into(4);
  for (int i = 0; i < 4; ++i) into[i] = i;
  auto jg = verify_twist(map_indices(e1_tensor(v), g, into));
  auto rg = r_matrix(jg);
  CHECK_FALSE(verify_minimal(rg));
  auto full = rg * r_u(g, 4);
  CHECK(verify_triangular(jg, full).passed());
  CHECK(verify_minimal(full));
  auto u = drinfeld_element(full, twisted_antipode(jg));
  CHECK(u == TensorElement::basis(g, {4}));
}

TEST_CASE("regular trace") {
  auto s3 = make_symmetric(3);
  for (int x = 0; x < 6; ++x) {
    // oracle: trace of the permutation matrix of left multiplication
    int fixed = 0;
    for (int y = 0; y < 6; ++y) fixed += s3->mul(x, y) == y;
    CHECK(regular_trace(TensorElement::basis(s3, {x})) == Scalar::integer(fixed));
  }
  TensorElement y(s3, 1);
  y.add_term({0}, Scalar::rational(2, 3));
  y.add_term({4}, Scalar::integer(5));
  CHECK(regular_trace(y) == Scalar::integer(4));
}

TEST_CASE("twists built by gauge on S3 stay triangular with Drinfeld element e") {
  auto s3 = make_symmetric(3);
  std::mt19937 rng(19);
  auto j = gauge_transform(verify_twist(TensorElement::unit(s3, 2)), random_unit_normalized(s3, rng));
  auto r = r_matrix(j);
  CHECK(verify_triangular(j, r).passed());
  auto u = drinfeld_element(r, twisted_antipode(j));
  CHECK(u == TensorElement::unit(s3, 1));
  CHECK(drinfeld_report(u, j).passed());
}

TEST_CASE("a supplied inverse is certified, a wrong one is ignored") {
  auto v = klein();
  auto j = e1_tensor(v);
  auto jinv = algebra_invert(j);
  auto good = twist_report(j, jinv);
  CHECK(good.passed());
  CHECK(verify_twist(j, jinv).inverse() == jinv);

  auto wrong = TensorElement::unit(v, 2);
  auto fallback = twist_report(j, wrong);
  CHECK(fallback.passed());
  CHECK(verify_twist(j, wrong).inverse() == jinv);
}
