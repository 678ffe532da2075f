#include "hopftwist/constructions.hpp"

#include <algorithm>
#include <random>

namespace hopftwist {

namespace {

Matrix candidate_functional(int d, std::uint64_t seed, int index, const Field& field) {
  Matrix lambda(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) lambda(i, j) = field.zero();
  if (index < d) {
    lambda(index, index) = field.one();
    return lambda;
  }
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(index));
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) lambda(i, j) = field.from_int(coef(rng));
  return lambda;
}

}  // namespace

RepTwist twist_from_rep(const ProjectiveRep& v, std::uint64_t seed, int first_candidate) {
  const auto& h = v.group;
  const int n = h->order();
  const int d = v.dim;
  if (d * d != n) throw ConstructionError("dim(V)^2 must equal |H|");
  if (!is_nondegenerate(v.cocycle)) throw ConstructionError("the cocycle of V is degenerate");
  std::vector<Matrix> inv(n);
  for (int a = 0; a < n; ++a) {
    auto m = inverse(v.matrices[a]);
    if (!m) throw ConstructionError("representative of " + h->label(a) + " is singular");
    inv[a] = std::move(*m);
  }
  std::vector<Scalar> entries;
  for (const auto& m : v.matrices)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j));
  const Field field = field_of(entries);
  const int max_tries = 100;
  for (int c = first_candidate; c < first_candidate + max_tries; ++c) {
    Matrix lambda = candidate_functional(d, seed, c, field);
    Scalar tr = lambda.trace();
    if (tr.is_zero()) continue;
    lambda = tr.inverse() * lambda;
    // column a holds the coordinates (a . lambda)(e_ij) = (P_a lambda P_a^-1)_ji
    Matrix basis(n, n);
    for (int a = 0; a < n; ++a) {
      Matrix la = v.matrices[a] * lambda * inv[a];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) basis(i * d + j, a) = la(j, i);
    }
    // lambda(X Y) = sum D[(ij),(kl)] X_ij Y_kl with D = delta_jk lambda_li
    Matrix form(n, n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) form(i * d + j, j * d + l) = lambda(l, i);
    auto x = solve_unique(basis, form);  // B^-1 D
    if (!x) continue;                   // orbit is not a basis
    auto gamma_t = solve_unique(basis, x->transpose());  // (B^-1 D B^-T)^T
    TensorElement j(h, 2);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!(*gamma_t)(b, a).is_zero()) j.add_term({a, b}, (*gamma_t)(b, a));
    return RepTwist{verify_twist(j), c, lambda};
  }
  throw ConstructionError("no functional with a basis orbit among " + std::to_string(max_tries) + " candidates");
}

std::string check_bijective_1cocycle_detail(const Bijective1Cocycle& data) {
  const auto& g = *data.action.acting;
  const auto& a = *data.action.target;
  if (g.order() != a.order()) return "|G| != |A|";
  auto err = data.action.validate();
  if (!err.empty()) return "invalid action: " + err;
  if (static_cast<int>(data.pi.size()) != g.order()) return "pi has the wrong length";
  std::vector<bool> hit(a.order(), false);
  for (int x : data.pi) {
    if (x < 0 || x >= a.order()) return "pi takes a value outside A";
    if (hit[x]) return "pi is not injective";
    hit[x] = true;
  }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (data.pi[g.mul(x, y)] != a.add(data.pi[x], data.action.apply(x, data.pi[y])))
        return "cocycle identity fails at (" + g.label(x) + "," + g.label(y) + ")";
  return {};
}

bool check_bijective_1cocycle(const Bijective1Cocycle& data) { return check_bijective_1cocycle_detail(data).empty(); }

std::vector<Bijective1Cocycle> find_bijective_1cocycles(const GroupAction& action) {
  const auto& g = *action.acting;
  const auto& a = *action.target;
  if (g.order() != a.order()) throw std::invalid_argument("bijective 1-cocycles need |G| = |A|");
  if (g.order() > 8) throw std::invalid_argument("the brute-force finder is limited to |G| <= 8");
  auto err = action.validate();
  if (!err.empty()) throw std::invalid_argument("invalid action: " + err);
  const int n = g.order();
  std::vector<Bijective1Cocycle> out;
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (pi[y] < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        int pq = g.mul(p, q);
        if (pi[pq] >= 0 && pi[pq] != a.add(pi[p], action.apply(p, pi[q]))) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back({action, pi});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      pi[x] = v;
      used[v] = true;
      if (consistent(x)) self(self, x + 1);
      used[v] = false;
      pi[x] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

CocycleTwist twist_from_1cocycle(const Bijective1Cocycle& data, const Field& field) {
  auto err = check_bijective_1cocycle_detail(data);
  if (!err.empty()) throw ConstructionError("not a bijective 1-cocycle: " + err);
  const auto& a = data.action.target;
  const auto& g = *data.action.acting;
  if (field.is_prime() && a->order() % static_cast<long>(field.characteristic()) == 0)
    throw ConstructionError("|A| is zero in the field");
  auto pairing = std::make_shared<const Pairing>(a);
  auto h = semidirect_product(dual_action(data.action, *pairing));
  const Scalar inv_order = field.from_int(a->order()).inverse();
  TensorElement j(h.group, 2), jinv(h.group, 2);
  for (int x = 0; x < g.order(); ++x)
    for (int b = 0; b < a->order(); ++b) {
      auto c = inv_order * pairing->value(data.pi[x], b, field);
      j.add_term({h.element(b, g.identity()), h.element(0, x)}, c);
      // J = sum_g P_pi(g) (x) g with orthogonal idempotents P, so the inverse
      // replaces g by g^-1
      jinv.add_term({h.element(b, g.identity()), h.element(0, g.inv(x))}, c);
    }
  return CocycleTwist{h, pairing, verify_twist(j, jinv)};
}

ProjectiveRep heisenberg_rep(const Bijective1Cocycle& data, const Field& field) {
  auto err = check_bijective_1cocycle_detail(data);
  if (!err.empty()) throw ConstructionError("not a bijective 1-cocycle: " + err);
  const auto& a = *data.action.target;
  Pairing pairing(data.action.target);
  auto h = semidirect_product(dual_action(data.action, pairing));
  const int d = a.order();
  std::vector<Matrix> mats;
  for (int x = 0; x < h.group->order(); ++x) {
    const int b = h.abelian_part(x), g = h.acting_part(x);
    Matrix m(d, d);
    for (int s = 0; s < d; ++s) {
      const int t = a.add(data.action.apply(g, s), data.pi[g]);
      m(t, s) = pairing.value(t, b, field).inverse();
    }
    mats.push_back(std::move(m));
  }
  return lift_projective(h.group, std::move(mats));
}

Report verify_eq2345(const Bijective1Cocycle& data, const Field& field) {
  auto ct = twist_from_1cocycle(data, field);
  const auto& a = *data.action.target;
  const auto& g = *data.action.acting;
  const auto& h = ct.h;
  const auto& hg = *h.group;
  const auto& dual = h.action;  // G on A*
  const auto& pairing = *ct.pairing;
  const int na = a.order();
  const int n = hg.order();
  auto e = [&](int x, int b) { return pairing.value(x, b, field); };
  const Scalar inv_order = field.from_int(na).inverse();
  const Scalar order = field.from_int(na);
  Report r("closed forms");
  r.record("|H|", static_cast<long>(n));

  // coproduct of B_J on bg
  {
    bool ok = true;
    std::string witness;
    const auto& jj = ct.twist.element();
    for (int x = 0; x < n && ok; ++x) {
      const int b = h.abelian_part(x), gx = h.acting_part(x);
      auto computed = TensorElement::basis(h.group, {x, x}) * jj;
      TensorElement closed(h.group, 2);
      for (int g2 = 0; g2 < g.order(); ++g2)
        for (int b2 = 0; b2 < na; ++b2)
          closed.add_term({h.element(a.add(b, dual.apply(gx, b2)), gx), h.element(b, g.mul(gx, g2))},
                          inv_order * e(data.pi[g2], b2));
      witness = describe_difference(computed, closed);
      if (!witness.empty()) {
        ok = false;
        witness = "at " + hg.label(x) + " " + witness;
      }
    }
    r.add("coalgebra coproduct", ok, witness);
  }

  auto m = dual_movshev(ct.twist);
  const auto& alg = m.algebra;

  // dual product in the basis Y' = |A| Y
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const int b2 = h.abelian_part(i), g2 = h.acting_part(i);
        const int b1 = h.abelian_part(j), g1 = h.acting_part(j);
        const int k = h.element(b1, g2);
        Scalar expect = e(a.sub(data.pi[g1], data.pi[g2]), a.sub(b2, b1));
        const auto& prod = alg.product(i, j);
        Scalar got = prod.size() == 1 && prod[0].first == k ? order * prod[0].second : Scalar();
        if (prod.size() != 1 || prod[0].first != k || got != expect) {
          ok = false;
          witness = "Y'_" + hg.label(i) + " * Y'_" + hg.label(j) + ": expected " + expect.to_string() + " Y'_" +
                    hg.label(k);
        }
      }
    r.add("dual structure constants", ok, witness);
    r.record("dual basis", "Y' = |A| Y (the dual basis Y carries an extra factor |A|^-1)");
  }

  // z_x with Z_x = z_x Y'_x; constants of Z_i * Z_j from the computed algebra
  std::vector<Scalar> z(n);
  for (int x = 0; x < n; ++x) z[x] = e(data.pi[h.acting_part(x)], h.abelian_part(x));
  auto zconst = [&](int i, int j) {
    std::vector<std::pair<int, Scalar>> out;
    for (const auto& [k, c] : alg.product(i, j)) out.emplace_back(k, z[i] * z[j] * order * c / z[k]);
    return out;
  };

  // same product in the basis Z
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const int b2 = h.abelian_part(i), g2 = h.acting_part(i);
        const int b1 = h.abelian_part(j), g1 = h.acting_part(j);
        auto prod = zconst(i, j);
        Scalar expect = e(data.pi[g1], b2);
        if (prod.size() != 1 || prod[0].first != h.element(b1, g2) || prod[0].second != expect) {
          ok = false;
          witness = "Z_" + hg.label(i) + " * Z_" + hg.label(j);
        }
      }
    r.add("Z structure constants", ok, witness);
  }

  // map onto End(V): Z_bg delta_a = e(a, b) delta_pi(g)
  std::vector<Matrix> rho(n);
  for (int x = 0; x < n; ++x) {
    const int b = h.abelian_part(x), gx = h.acting_part(x);
    Matrix mx(na, na);
    for (int s = 0; s < na; ++s) mx(data.pi[gx], s) = e(s, b);
    rho[x] = std::move(mx);
  }
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        Matrix lhs = rho[i] * rho[j];
        Matrix rhs(na, na);
        for (const auto& [k, c] : zconst(i, j)) rhs = rhs + c * rho[k];
        if (!(lhs == rhs)) {
          ok = false;
          witness = "Z_" + hg.label(i) + " Z_" + hg.label(j);
        }
      }
    r.add("End(V) multiplicative", ok, witness);

    Matrix unit(na, na);
    const auto& u = alg.unit();
    for (int x = 0; x < n; ++x)
      if (!u[x].is_zero()) unit = unit + (u[x] * inv_order / z[x]) * rho[x];
    r.add("End(V) unital", unit == Matrix::identity(na));

    Matrix flat(n, static_cast<size_t>(na) * na);
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < na; ++s)
        for (int t = 0; t < na; ++t) flat(x, s * na + t) = rho[x](s, t);
    r.add("End(V) bijective", rank(flat) == static_cast<size_t>(n));

    auto v = heisenberg_rep(data, field);
    r.add("heisenberg irreducible", commutant_dimension(v) == 1);
    bool equivariant = true;
    std::vector<int> acting;
    if (n <= 16) {
      for (int x = 0; x < n; ++x) acting.push_back(x);
    } else {
      acting = generators(hg);
    }
    for (int y : acting) {
      auto pinv = inverse(v.matrices[y]);
      for (int x = 0; x < n && equivariant; ++x) {
        // y . Z_x = (z_x / z_yx) Z_yx
        const int yx = hg.mul(y, x);
        Matrix lhs = (z[x] / z[yx]) * rho[yx];
        Matrix rhs = v.matrices[y] * rho[x] * *pinv;
        if (!(lhs == rhs)) {
          equivariant = false;
          witness = hg.label(y) + " on Z_" + hg.label(x);
        }
      }
    }
    r.add("End(V) equivariant", equivariant, equivariant ? "" : witness);
  }
  return r;
}

}  // namespace hopftwist
