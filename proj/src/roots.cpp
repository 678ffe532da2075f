// Roots of univariate polynomials inside the scalar field.
//
// Prime fields: exhaustive evaluation. Cyclotomic fields Q(zeta_L): choose a
// prime p = 1 (mod L) so that Q(zeta_L) embeds into Q_p in phi(L) ways, find
// the simple roots of every embedded polynomial mod p, Hensel-lift them, and
// recombine one root per embedding through the inverse Vandermonde matrix of
// the embedded zeta powers. Candidates are rebuilt by rational reconstruction
// and kept only if they are exact roots.
#include "hopftwist/scalars.hpp"

#include <algorithm>

namespace hopftwist {

namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Scalar eval(const Poly& f, const Scalar& x) {
  Scalar acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Scalar());
  Scalar inv_lead = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    Scalar c = r.back() * inv_lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Poly derivative(const Poly& f) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Scalar::integer(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly squarefree_part(const Poly& f) {
  Poly g = gcd(f, derivative(f));
  if (g.size() <= 1) return f;
  Poly q, r;
  divmod(f, g, q, r);
  return q;
}

// --- p-adic helpers on mpz ---

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), mpz_class(mod(a, m)).get_mpz_t(), m.get_mpz_t()) == 0)
    throw ArithmeticError("non-invertible residue in p-adic lift");
  return r;
}

mpz_class rat_mod(const mpq_class& q, const mpz_class& m) {
  return mod(q.get_num() * inv_mod(q.get_den(), m), m);
}

using ZPoly = std::vector<mpz_class>;

mpz_class eval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod(acc * x + *it, m);
  return acc;
}

mpz_class eval_deriv_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (size_t i = f.size(); i-- > 1;) acc = mod(acc * x + f[i] * static_cast<unsigned long>(i), m);
  return acc;
}

// a/b with |a|, |b| <= sqrt(m/2) and a = b u (mod m)
bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = mod(u, m);
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Lifts a root of x^L - 1 (simple mod p) to modulus m = p^k.
mpz_class lift_unity_root(const mpz_class& r, long L, const mpz_class& p, const mpz_class& m) {
  ZPoly f(static_cast<size_t>(L) + 1, 0);
  f[0] = -1;
  f[L] = 1;
  mpz_class x = r;
  mpz_class cur = p;
  while (cur < m) {
    cur = cur * cur;
    if (cur > m) cur = m;
    mpz_class fx = eval_mod(f, x, cur);
    mpz_class dfx = eval_deriv_mod(f, x, cur);
    x = mod(x - fx * inv_mod(dfx, cur), cur);
  }
  return x;
}

std::vector<Scalar> prime_roots(const Poly& f, const Field& field) {
  const std::uint64_t p = field.characteristic();
  if (p > 5000000) throw ArithmeticError("exhaustive root search needs a prime below 5e6");
  std::vector<Scalar> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    Scalar x = field.from_int(static_cast<long>(r));
    if (eval(f, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace

std::vector<Scalar> roots_in_field(const std::vector<Scalar>& poly, const Field& field) {
  Poly f;
  for (const auto& c : poly) f.push_back(field.coerce(c));
  trim(f);
  if (f.size() <= 1) {
    if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
    return {};
  }
  if (field.is_prime()) return prime_roots(f, field);

  f = squarefree_part(f);
  {
    Scalar inv = f.back().inverse();
    for (auto& c : f) c *= inv;
  }
  const size_t deg = f.size() - 1;
  if (deg == 1) return {-f[0]};

  long L = field.root_order();
  for (const auto& c : f) L = lcm_long(L, c.conductor());
  if (L == 2) L = 1;
  const int phi = euler_phi(static_cast<int>(L));

  // coefficient table over Q(zeta_L)
  std::vector<std::vector<mpq_class>> coef;
  mpz_class den_lcm = 1;
  for (const auto& c : f) {
    coef.push_back(c.coefficients_in(static_cast<int>(L)));
    for (const auto& q : coef.back()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }

  std::vector<long> units;
  for (long e = 1; e <= L; ++e)
    if (gcd_long(e, L) == 1) units.push_back(e % L);
  if (L == 1) units = {0};

  const size_t max_tuples = 400000;
  std::uint64_t p = std::max<std::uint64_t>(1009, static_cast<std::uint64_t>(L) + 1);
  for (int attempt = 0; attempt < 40; ++attempt, ++p) {
    while (!(is_prime(p) && (p - 1) % static_cast<std::uint64_t>(L) == 0 &&
             mpz_class(den_lcm % static_cast<unsigned long>(p)) != 0))
      ++p;
    const mpz_class P(static_cast<unsigned long>(p));
    // primitive L-th root mod p
    Field fp = make_field(FieldSpec::prime(p, static_cast<int>(L)));
    mpz_class r(static_cast<unsigned long>(fp.spec().root));

    auto embedded = [&](const mpz_class& node, const mpz_class& m) {
      ZPoly g(coef.size());
      for (size_t k = 0; k < coef.size(); ++k) {
        mpz_class acc = 0, pw = 1;
        for (int i = 0; i < phi; ++i) {
          if (coef[k][i] != 0) acc += rat_mod(coef[k][i], m) * pw;
          pw = mod(pw * node, m);
        }
        g[k] = mod(acc, m);
      }
      return g;
    };
    auto node_power = [&](const mpz_class& root, long e, const mpz_class& m) {
      mpz_class out;
      mpz_powm_ui(out.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
      return out;
    };

    // simple roots mod p for each embedding
    std::vector<std::vector<mpz_class>> base_roots(units.size());
    bool bad_prime = false;
    for (size_t j = 0; j < units.size() && !bad_prime; ++j) {
      ZPoly g = embedded(node_power(r, units[j], P), P);
      for (std::uint64_t x = 0; x < p; ++x) {
        mpz_class X(static_cast<unsigned long>(x));
        if (eval_mod(g, X, P) != 0) continue;
        if (eval_deriv_mod(g, X, P) == 0) {
          bad_prime = true;
          break;
        }
        base_roots[j].push_back(X);
      }
    }
    if (bad_prime) continue;
    size_t tuples = 1;
    for (const auto& br : base_roots) {
      if (br.empty()) return {};
      tuples *= br.size();
      if (tuples > max_tuples) throw ArithmeticError("root recombination exceeds the search bound");
    }

    std::vector<Scalar> found;
    for (unsigned bits = 64; bits <= 16384 && found.size() < deg; bits *= 2) {
      found.clear();
      mpz_class m = 1;
      while (mpz_sizeinbase(m.get_mpz_t(), 2) < bits) m *= P;
      mpz_class R = lift_unity_root(r, L, P, m);

      // lifted roots per embedding
      std::vector<std::vector<mpz_class>> lifted(units.size());
      std::vector<mpz_class> nodes(units.size());
      for (size_t j = 0; j < units.size(); ++j) {
        nodes[j] = node_power(R, units[j], m);
        ZPoly g = embedded(nodes[j], m);
        for (const auto& x0 : base_roots[j]) {
          mpz_class x = x0, cur = P;
          while (cur < m) {
            cur = cur * cur;
            if (cur > m) cur = m;
            x = mod(x - eval_mod(g, x, cur) * inv_mod(eval_deriv_mod(g, x, cur), cur), cur);
          }
          lifted[j].push_back(x);
        }
      }
      // inverse Vandermonde V[j][i] = nodes[j]^i mod m
      const size_t n = units.size();
      std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(2 * n, 0));
      for (size_t j = 0; j < n; ++j) {
        mpz_class pw = 1;
        for (size_t i = 0; i < n; ++i) {
          A[j][i] = pw;
          pw = mod(pw * nodes[j], m);
        }
        A[j][n + j] = 1;
      }
      for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && mpz_class(A[piv][c] % P) == 0) ++piv;
        if (piv == n) throw ArithmeticError("singular Vandermonde system");
        std::swap(A[c], A[piv]);
        mpz_class inv = inv_mod(A[c][c], m);
        for (auto& v : A[c]) v = mod(v * inv, m);
        for (size_t r2 = 0; r2 < n; ++r2) {
          if (r2 == c || A[r2][c] == 0) continue;
          mpz_class fct = A[r2][c];
          for (size_t k = 0; k < 2 * n; ++k) A[r2][k] = mod(A[r2][k] - fct * A[c][k], m);
        }
      }

      std::vector<size_t> idx(n, 0);
      for (size_t t = 0; t < tuples; ++t) {
        size_t rem = t;
        for (size_t j = 0; j < n; ++j) {
          idx[j] = rem % lifted[j].size();
          rem /= lifted[j].size();
        }
        std::vector<mpq_class> q(static_cast<size_t>(phi), 0);
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
          mpz_class acc = 0;
          for (size_t j = 0; j < n; ++j) acc += A[i][n + j] * lifted[j][idx[j]];
          ok = rational_reconstruct(mod(acc, m), m, q[i]);
        }
        if (!ok) continue;
        Scalar cand = L == 1 ? Scalar::rational(q[0]) : Scalar::cyclotomic(static_cast<int>(L), q);
        if (!eval(f, cand).is_zero()) continue;
        if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
      }
    }
    return found;
  }
  throw ArithmeticError("no suitable prime found for root search");
}

}  // namespace hopftwist
