// Multi-modular solving of nonsingular systems over Q(zeta_L): solve in every
// embedding Q(zeta_L) -> F_p for several primes p = 1 (mod L), interpolate the
// power-basis coordinates, combine by CRT, rebuild rationals and accept the
// candidate only after an exact check m x = b.
#include <algorithm>

#include "hopftwist/linalg.hpp"

namespace hopftwist {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod64(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod64(u64 a, u64 p) { return powmod64(a, p - 2, p); }

// Gauss-Jordan mod p on an n x (n+k) augmented matrix; false if singular.
// x receives the n x k solution, row-major.
bool solve_mod(std::vector<u64>& a, size_t n, size_t k, u64 p, std::vector<u64>& x) {
  const size_t w = n + k;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv * w + c] == 0) ++piv;
    if (piv == n) return false;
    if (piv != c)
      for (size_t k = 0; k < w; ++k) std::swap(a[piv * w + k], a[c * w + k]);
    const u64 inv = invmod64(a[c * w + c], p);
    for (size_t k = c; k < w; ++k) a[c * w + k] = mulmod(a[c * w + k], inv, p);
    for (size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const u64 f = a[r * w + c];
      if (f == 0) continue;
      for (size_t k = c; k < w; ++k) {
        const u64 v = a[c * w + k];
        if (v) a[r * w + k] = (a[r * w + k] + p - mulmod(f, v, p)) % p;
      }
    }
  }
  x.resize(n * k);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) x[i * k + j] = a[i * w + n + j];
  return true;
}

u64 rat_residue(const mpq_class& q, u64 p) {
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  return mulmod(num.get_ui(), invmod64(den.get_ui(), p), p);
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out) {
  mpz_class bound, half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
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
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

bool residual_is_zero(const Matrix& m, const Matrix& x, const Matrix& b) {
  for (size_t j = 0; j < b.cols(); ++j)
    for (size_t r = 0; r < m.rows(); ++r) {
      Scalar acc;
      for (size_t c = 0; c < m.cols(); ++c) {
        const Scalar& v = m(r, c);
        if (v.is_zero() || x(c, j).is_zero()) continue;
        acc += v * x(c, j);
      }
      if (acc != b(r, j)) return false;
    }
  return true;
}

std::optional<Matrix> solve_prime_field(const Matrix& m, const Matrix& b, const Scalar& witness) {
  const size_t n = m.rows();
  const size_t k = b.cols();
  const u64 p = witness.modulus();
  auto res = [&](const Scalar& s) -> u64 {
    if (s.is_prime_field()) return s.residue_value();
    if (!s.is_rational()) throw ArithmeticError("cannot mix cyclotomic and prime-field scalars");
    return rat_residue(s.coefficients()[0], p);
  };
  std::vector<u64> a(n * (n + k), 0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero()) a[r * (n + k) + c] = res(m(r, c));
    for (size_t j = 0; j < k; ++j)
      if (!b(r, j).is_zero()) a[r * (n + k) + n + j] = res(b(r, j));
  }
  std::vector<u64> x;
  if (!solve_mod(a, n, k, p, x)) return std::nullopt;
  Matrix out(n, k);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      out(i, j) = Scalar::residue(witness.prime_context(), static_cast<std::int64_t>(x[i * k + j]));
  return out;
}

}  // namespace

std::optional<Vector> solve_unique(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  Matrix bm(b.size(), 1);
  for (size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto x = solve_unique(m, bm);
  if (!x) return std::nullopt;
  Vector out(x->rows());
  for (size_t i = 0; i < out.size(); ++i) out[i] = (*x)(i, 0);
  return out;
}

std::optional<Matrix> solve_unique(const Matrix& m, const Matrix& b) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_unique needs a square matrix");
  if (b.rows() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  const size_t n = m.rows();
  const size_t k = b.cols();
  if (n == 0) return Matrix(0, k);

  long L = 1;
  mpz_class den = 1;
  const Scalar* prime_witness = nullptr;
  auto scan = [&](const Scalar& s) {
    if (s.is_zero()) return;
    if (s.is_prime_field()) {
      prime_witness = &s;
      return;
    }
    L = lcm_long(L, s.conductor());
  };
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) scan(m(r, c));
    for (size_t j = 0; j < k; ++j) scan(b(r, j));
  }
  if (prime_witness) return solve_prime_field(m, b, *prime_witness);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n + k; ++c) {
      const Scalar& s = c < n ? m(r, c) : b(r, c - n);
      if (s.is_zero()) continue;
      for (const auto& q : s.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }

  const int phi = euler_phi(static_cast<int>(L));
  std::vector<long> units;
  for (long e = 1; e <= std::max<long>(L, 1); ++e)
    if (gcd_long(e, L) == 1) units.push_back(e % std::max<long>(L, 1));
  if (static_cast<int>(units.size()) != phi) units.resize(phi);

  // power-basis coordinates of each nonzero entry
  struct Entry {
    size_t r, c;
    std::vector<mpq_class> coeffs;
  };
  std::vector<Entry> entries;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n + k; ++c) {
      const Scalar& s = c < n ? m(r, c) : b(r, c - n);
      if (!s.is_zero()) entries.push_back({r, c, s.coefficients_in(static_cast<int>(L))});
    }

  const size_t nk = n * k;
  std::vector<std::vector<mpz_class>> crt(nk, std::vector<mpz_class>(phi, 0));
  mpz_class modulus = 1;
  int singular = 0;
  u64 p = (1ULL << 31);
  p -= (p - 1) % static_cast<u64>(L);  // p = 1 (mod L)
  const size_t max_primes = 400;
  for (size_t used = 0; used < max_primes;) {
    p -= static_cast<u64>(L);
    if (p < 1000) break;
    if (!is_prime(p) || mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    // a primitive L-th root of unity mod p
    u64 root = 1;
    if (L > 1) {
      std::vector<long> qs;
      for (long q = 2, t = L; q <= t; ++q)
        if (t % q == 0) {
          qs.push_back(q);
          while (t % q == 0) t /= q;
        }
      for (u64 g = 2;; ++g) {
        u64 cand = powmod64(g, (p - 1) / static_cast<u64>(L), p);
        bool ok = true;
        for (long q : qs) ok = ok && powmod64(cand, static_cast<u64>(L / q), p) != 1;
        if (ok) {
          root = cand;
          break;
        }
      }
    }
    std::vector<u64> nodes(phi);
    for (int j = 0; j < phi; ++j) nodes[j] = powmod64(root, static_cast<u64>(units[j]), p);

    // values of the solution in every embedding
    std::vector<std::vector<u64>> values(phi);
    bool sing = false;
    for (int j = 0; j < phi && !sing; ++j) {
      std::vector<u64> a(n * (n + k), 0);
      for (const auto& e : entries) {
        u64 acc = 0, pw = 1;
        for (int i = 0; i < phi; ++i) {
          if (e.coeffs[i] != 0) acc = (acc + mulmod(rat_residue(e.coeffs[i], p), pw, p)) % p;
          pw = mulmod(pw, nodes[j], p);
        }
        a[e.r * (n + k) + e.c] = acc;
      }
      sing = !solve_mod(a, n, k, p, values[j]);
    }
    if (sing) {
      if (++singular >= 3) break;
      continue;
    }
    // inverse Vandermonde: coefficient i = sum_j Vinv[i][j] value_j
    std::vector<u64> vand(static_cast<size_t>(phi) * phi);
    for (int j = 0; j < phi; ++j) {
      u64 pw = 1;
      for (int i = 0; i < phi; ++i) {
        vand[static_cast<size_t>(j) * phi + i] = pw;
        pw = mulmod(pw, nodes[j], p);
      }
    }
    std::vector<std::vector<u64>> coords(nk, std::vector<u64>(phi));
    {
      // Gauss-Jordan on [V | values^T] for all unknowns at once
      const size_t w = static_cast<size_t>(phi) + nk;
      std::vector<u64> aug(static_cast<size_t>(phi) * w);
      for (int j = 0; j < phi; ++j) {
        for (int i = 0; i < phi; ++i) aug[j * w + i] = vand[static_cast<size_t>(j) * phi + i];
        for (size_t t = 0; t < nk; ++t) aug[j * w + phi + t] = values[j][t];
      }
      for (int c = 0; c < phi; ++c) {
        int piv = c;
        while (aug[piv * w + c] == 0) ++piv;
        if (piv != c)
          for (size_t t = 0; t < w; ++t) std::swap(aug[piv * w + t], aug[c * w + t]);
        const u64 inv = invmod64(aug[c * w + c], p);
        for (size_t t = 0; t < w; ++t) aug[c * w + t] = mulmod(aug[c * w + t], inv, p);
        for (int r = 0; r < phi; ++r) {
          if (r == c || aug[r * w + c] == 0) continue;
          const u64 f = aug[r * w + c];
          for (size_t t = 0; t < w; ++t) aug[r * w + t] = (aug[r * w + t] + p - mulmod(f, aug[c * w + t], p)) % p;
        }
      }
      for (size_t t = 0; t < nk; ++t)
        for (int i = 0; i < phi; ++i) coords[t][i] = aug[i * w + phi + t];
    }
    // CRT update
    const mpz_class P(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_class mmod = modulus % P;
    mpz_invert(minv.get_mpz_t(), mmod.get_mpz_t(), P.get_mpz_t());
    for (size_t t = 0; t < nk; ++t)
      for (int i = 0; i < phi; ++i) {
        mpz_class diff = (mpz_class(static_cast<unsigned long>(coords[t][i])) - crt[t][i]) % P;
        if (diff < 0) diff += P;
        mpz_class q = (diff * minv) % P;
        crt[t][i] += modulus * q;
      }
    modulus *= P;
    ++used;

    // attempt reconstruction
    Matrix x(n, k);
    bool ok = true;
    for (size_t t = 0; t < nk && ok; ++t) {
      std::vector<mpq_class> q(phi);
      for (int i = 0; i < phi && ok; ++i) ok = rational_reconstruct(crt[t][i], modulus, q[i]);
      if (ok) x(t / k, t % k) = L == 1 ? Scalar::rational(q[0]) : Scalar::cyclotomic(static_cast<int>(L), q);
    }
    if (ok && residual_is_zero(m, x, b)) return x;
  }
  // singular modulo several primes, or reconstruction did not settle: decide exactly
  if (rank(m) != n) return std::nullopt;
  Matrix out(n, k);
  for (size_t j = 0; j < k; ++j) {
    Vector col(n);
    for (size_t r = 0; r < n; ++r) col[r] = b(r, j);
    auto exact = solve(m, col);
    if (!exact) return std::nullopt;
    for (size_t r = 0; r < n; ++r) out(r, j) = (*exact)[r];
  }
  if (!residual_is_zero(m, out, b)) throw ArithmeticError("exact solve produced a wrong solution");
  return out;
}

}  // namespace hopftwist
