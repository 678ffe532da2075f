#include "hopftwist/movshev.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hopftwist {

namespace {

std::vector<int> acting_elements(const FiniteGroup& g) {
  if (g.order() > 16) return generators(g);
  std::vector<int> all(g.order());
  for (int x = 0; x < g.order(); ++x) all[x] = x;
  return all;
}

// Unique-up-to-scalar solution u of u * Y_i = Y_{s i} * u for all i.
Vector intertwining_unit(const MovshevAlgebra& m, int s) {
  const auto& a = m.algebra;
  const int n = a.dim();
  Subspace eqs(static_cast<size_t>(n));
  for (int i = 0; i < n && eqs.dimension() + 1 < static_cast<size_t>(n); ++i) {
    const int si = m.group->mul(s, i);
    Matrix block(n, n);  // block(k, t): coefficient of u_t in component k
    for (int t = 0; t < n; ++t) {
      for (const auto& [k, c] : a.product(t, i)) block(k, t) += c;
      for (const auto& [k, c] : a.product(si, t)) block(k, t) -= c;
    }
    for (int k = 0; k < n; ++k) {
      auto row = block.row(k);
      eqs.insert(Vector(row.begin(), row.end()));
    }
  }
  if (eqs.dimension() + 1 != static_cast<size_t>(n))
    throw ConstructionError("action of " + m.group->label(s) + " is not inner with a unique implementing unit");
  Matrix sys(eqs.dimension(), n);
  for (size_t r = 0; r < eqs.dimension(); ++r)
    for (int c = 0; c < n; ++c) sys(r, c) = eqs.basis()[r][c];
  auto ns = nullspace(sys);
  return ns.at(0);
}

// v = ratio * w; false if not proportional or w = 0.
bool proportional(const Vector& v, const Vector& w, Scalar& ratio) {
  size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  if (p == w.size()) return false;
  ratio = v[p] / w[p];
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != ratio * w[i]) return false;
  return true;
}

Report compare_cocycles(const Cocycle2& a, const Cocycle2& b, const std::string& title) {
  Report r(title);
  bool same = is_coboundary(a.divide(b));
  r.add("cocycle class", same, same ? "" : "cocycles are not cohomologous");
  return r;
}

}  // namespace

CoalgebraTable build_BJ_unchecked(const TensorElement& j) {
  const auto& g = *j.group();
  const int n = g.order();
  CoalgebraTable t;
  t.dim = n;
  t.labels = g.labels();
  t.coproduct.resize(n);
  t.counit.assign(n, Scalar::integer(1));
  for (int x = 0; x < n; ++x)
    for (const auto& [k, c] : j.terms()) t.coproduct[x].emplace_back(g.mul(x, j.slot(k, 0)), g.mul(x, j.slot(k, 1)), c);
  return t;
}

CoalgebraTable build_BJ(const Twist& j) {
  auto t = build_BJ_unchecked(j.element());
  Report r("B_J");
  auto co = t.check_coassociative();
  r.add("coassociative", co.empty(), co);
  auto cu = t.check_counit();
  r.add("counit", cu.empty(), cu);
  if (!r.passed()) throw CertificateFailure(r);
  return t;
}

MovshevAlgebra dual_movshev(const Twist& j) {
  const auto& g = *j.group();
  // coassociativity is the twist identity already certified for j
  MovshevAlgebra m{j.group(), dualize_coalgebra(build_BJ_unchecked(j.element()), false)};
  const int n = g.order();
  Report r("H-action on B_J*");
  for (int h : acting_elements(g)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto expect = m.algebra.product(x, y);
        for (auto& [k, c] : expect) k = g.mul(h, k);
        std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto got = m.algebra.product(g.mul(h, x), g.mul(h, y));
        std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (got != expect) {
          r.add("automorphism", false, g.label(h) + " on (" + g.label(x) + "," + g.label(y) + ")");
          throw CertificateFailure(r);
        }
      }
  }
  return m;
}

Report certify_simple(const MovshevAlgebra& m) {
  Report r("simple");
  const long d = m.algebra.dim();
  const long z = static_cast<long>(center_dimension(m.algebra));
  long root = 0;
  while ((root + 1) * (root + 1) <= d) ++root;
  r.record("dimension", d);
  r.record("center dimension", z);
  r.add("center", z == 1, "center dimension " + std::to_string(z));
  r.add("square dimension", root * root == d, "dimension " + std::to_string(d));
  return r;
}

Report certify_regular_action(const MovshevAlgebra& m) {
  Report r("regular action");
  const auto& g = *m.group;
  bool ok = true;
  std::string witness;
  for (int h = 0; h < g.order(); ++h) {
    long trace = 0;
    for (int x = 0; x < g.order(); ++x) trace += g.mul(h, x) == x;
    const long expect = h == g.identity() ? g.order() : 0;
    if (trace != expect && ok) {
      ok = false;
      witness = "trace of " + g.label(h) + " is " + std::to_string(trace);
    }
  }
  r.add("character", ok, witness);
  return r;
}

TensorElement trivialize_symmetric_twist(const Twist& j, std::uint64_t seed) {
  const auto& jj = j.element();
  if (swap_legs(jj) != jj) throw std::invalid_argument("twist is not symmetric");
  const auto& g = j.group();
  const int n = g->order();
  if (n == 1 || jj == TensorElement::unit(g, 2)) return TensorElement::unit(g, 1);
  auto m = dual_movshev(j);
  const auto& a = m.algebra;
  auto field = field_of(jj.coefficient_list());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3 * n, 3 * n);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Vector gen(n);
    for (auto& c : gen) c = field.from_int(coef(rng));
    // minimal polynomial of gen by Krylov iteration
    std::vector<Vector> powers{a.unit()};
    std::optional<Vector> relation;
    for (int k = 1; k <= n && !relation; ++k) {
      auto next = a.multiply(powers.back(), gen);
      Matrix sys(n, k);
      for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) sys(r, c) = powers[c][r];
      relation = solve(sys, next);
      powers.push_back(std::move(next));
    }
    if (!relation || static_cast<int>(relation->size()) < n) continue;  // repeated eigenvalues
    std::vector<Scalar> poly;
    for (const auto& c : *relation) poly.push_back(-c);
    poly.push_back(field.one());
    auto roots = roots_in_field(poly, field);
    if (static_cast<int>(roots.size()) < n)
      throw ConstructionError("characters of B_J* do not split over " + field.describe());

    auto lg = a.left_multiplication(gen);
    std::vector<TensorElement> points;
    for (const auto& lambda : roots) {
      auto shifted = lg;
      for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
      auto ns = nullspace(shifted);
      if (ns.size() != 1) throw ConstructionError("eigenspace is not one-dimensional");
      const Vector& e = ns[0];
      TensorElement y(g, 1);
      for (int i = 0; i < n; ++i) {
        Scalar chi;
        if (!proportional(a.multiply(a.basis_vector(i), e), e, chi))
          throw ConstructionError("idempotent is not a common eigenvector");
        y.add_term({i}, chi);
      }
      points.push_back(std::move(y));
    }
    // G permutes the grouplikes simply transitively
    auto key = [](const TensorElement& t) { return t.to_string(); };
    std::set<std::string> all;
    for (const auto& p : points) all.insert(key(p));
    for (int h = 0; h < n; ++h) {
      auto moved = TensorElement::basis(g, {h}) * points[0];
      if (!all.count(key(moved)) || (h != g->identity() && moved == points[0]))
        throw ConstructionError("group does not permute the characters simply transitively");
    }
    for (const auto& y : points) {
      if (hopf_coproduct(y) * jj != outer(y, y)) continue;
      TensorElement x;
      try {
        x = algebra_invert(y);
      } catch (const NotInvertible&) {
        continue;
      }
      if (hopf_coproduct(x) * outer(y, y) == jj) return x;
    }
    throw ConstructionError("no grouplike of B_J yields a trivializing gauge");
  }
  throw ConstructionError("no separating element found for B_J*");
}

size_t count_grouplikes(const Twist& j) {
  const auto& g = *j.group();
  const int n = g.order();
  CoalgebraTable t;
  t.dim = n;
  t.labels = g.labels();
  t.coproduct.resize(n);
  t.counit.assign(n, Scalar::integer(1));
  for (int x = 0; x < n; ++x) {
    auto d = twisted_coproduct(j, TensorElement::basis(j.group(), {x}));
    for (const auto& [k, c] : d.terms()) t.coproduct[x].emplace_back(d.slot(k, 0), d.slot(k, 1), c);
  }
  // Delta^J is coassociative for a certified twist
  return abelianization_dimension(dualize_coalgebra(t, false));
}

Cocycle2 inner_action_cocycle(const MovshevAlgebra& m) {
  const auto& g = *m.group;
  const auto& a = m.algebra;
  const int n = g.order();
  std::vector<std::optional<Vector>> unit_of(n);
  unit_of[g.identity()] = a.unit();
  std::vector<int> queue{g.identity()};
  std::vector<std::pair<int, Vector>> gens;
  for (int s : generators(g)) gens.emplace_back(s, intertwining_unit(m, s));
  for (size_t q = 0; q < queue.size(); ++q) {
    const int h = queue[q];
    for (const auto& [s, us] : gens) {
      const int sh = g.mul(s, h);
      if (unit_of[sh]) continue;
      unit_of[sh] = a.multiply(us, *unit_of[h]);
      queue.push_back(sh);
    }
  }
  Cocycle2 c = Cocycle2::trivial(m.group);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar ratio;
      if (!proportional(a.multiply(*unit_of[x], *unit_of[y]), *unit_of[g.mul(x, y)], ratio))
        throw ConstructionError("implementing units are not projectively multiplicative");
      c.at(x, y) = ratio;
    }
  auto err = c.validate();
  if (!err.empty()) throw ConstructionError("inner action cocycle invalid: " + err);
  return c;
}

Report match_projective_rep(const Twist& j, const ProjectiveRep& v) {
  const int n = j.group()->order();
  if (v.group->order() != n) throw std::invalid_argument("representation is over a different group");
  if (v.dim * v.dim != n) throw std::invalid_argument("dim(V)^2 = " + std::to_string(v.dim * v.dim) +
                                                      " differs from |H| = " + std::to_string(n));
  auto m = dual_movshev(j);
  Report r("match projective representation");
  auto simple = certify_simple(m);
  r.merge(simple);
  if (!simple.passed()) return r;
  r.merge(compare_cocycles(inner_action_cocycle(m), v.cocycle, ""));
  return r;
}

Report match_movshev(const MovshevAlgebra& a, const MovshevAlgebra& b) {
  if (a.group->order() != b.group->order() || !(*a.group == *b.group))
    throw std::invalid_argument("Movshev algebras over different groups");
  Report r("equivariant isomorphism");
  auto sa = certify_simple(a), sb = certify_simple(b);
  r.merge(sa, "first ");
  r.merge(sb, "second ");
  if (!r.passed()) return r;
  r.merge(compare_cocycles(inner_action_cocycle(a), inner_action_cocycle(b), ""));
  return r;
}

}  // namespace hopftwist
