#include "hopftwist/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hopftwist {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

int euler_phi(int n) {
  int result = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> num(static_cast<size_t>(n) + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> den = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long> quot(static_cast<size_t>(dn - dd) + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
      long c = num[k + dd];
      quot[k] = c;
      for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    num = quot;
  }
  return num;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::shared_ptr<const CyclotomicContext>>& registry() {
  static std::map<int, std::shared_ptr<const CyclotomicContext>> r;
  return r;
}

std::shared_ptr<const CyclotomicContext> build_context(int n) {
  auto ctx = std::make_shared<CyclotomicContext>();
  ctx->conductor = n;
  ctx->modulus = cyclotomic_polynomial(n);
  ctx->degree = static_cast<int>(ctx->modulus.size()) - 1;
  const int deg = ctx->degree;
  ctx->powers.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(deg), 0));
  std::vector<long> cur(static_cast<size_t>(deg), 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    ctx->powers[k] = cur;
    // multiply by zeta: shift up, then reduce the overflow with the monic modulus
    long top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < deg; ++i) cur[i] -= top * ctx->modulus[i];
  }
  return ctx;
}

}  // namespace

std::shared_ptr<const CyclotomicContext> cyclotomic_context(int conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(conductor);
  if (it != reg.end()) return it->second;
  auto ctx = build_context(conductor);
  reg.emplace(conductor, ctx);
  return ctx;
}

}  // namespace detail

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t rational_mod(const mpq_class& q, std::uint64_t p) {
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % pm;
  if (num < 0) num += pm;
  mpz_class den = q.get_den() % pm;
  if (den == 0) throw ArithmeticError("rational denominator divisible by the characteristic");
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return mulmod(n, powmod(d, p - 2, p), p);
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = q*b + r over Q
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : coeffs_(1, 0) {}

Scalar Scalar::integer(long v) {
  Scalar s;
  s.coeffs_[0] = v;
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.coeffs_[0] = q;
  s.coeffs_[0].canonicalize();
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::cyclotomic(int conductor, const std::vector<mpq_class>& coeffs) {
  auto ctx = detail::cyclotomic_context(conductor);
  Scalar s;
  s.cyc_ = ctx;
  s.coeffs_.assign(static_cast<size_t>(ctx->degree), 0);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& pw = ctx->powers[k % static_cast<size_t>(conductor)];
    for (int i = 0; i < ctx->degree; ++i)
      if (pw[i] != 0) s.coeffs_[i] += coeffs[k] * pw[i];
  }
  s.normalize();
  return s;
}

Scalar Scalar::zeta(int conductor, long k) {
  if (conductor < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = k % conductor;
  if (e < 0) e += conductor;
  std::vector<mpq_class> c(static_cast<size_t>(e) + 1, 0);
  c[e] = 1;
  return cyclotomic(conductor, c);
}

Scalar Scalar::residue(std::shared_ptr<const detail::PrimeContext> ctx, std::int64_t v) {
  Scalar s;
  std::int64_t p = static_cast<std::int64_t>(ctx->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  s.mod_ = std::move(ctx);
  s.coeffs_.clear();
  s.residue_ = static_cast<std::uint64_t>(r);
  return s;
}

int Scalar::conductor() const {
  if (mod_) return 0;
  return cyc_ ? cyc_->conductor : 1;
}

void Scalar::normalize() {
  if (mod_ || !cyc_) return;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  // lies in Q: drop the conductor
  mpq_class c0 = coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  cyc_.reset();
  coeffs_.assign(1, c0);
}

std::vector<mpq_class> Scalar::coefficients_in(int L) const {
  if (mod_) throw ArithmeticError("prime-field scalar has no power-basis coefficients");
  int n = conductor();
  if (L % n != 0) throw ArithmeticError("conductor does not divide target conductor");
  auto ctx = detail::cyclotomic_context(L);
  std::vector<mpq_class> out(static_cast<size_t>(ctx->degree), 0);
  int step = L / n;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& pw = ctx->powers[(i * static_cast<size_t>(step)) % static_cast<size_t>(L)];
    for (int j = 0; j < ctx->degree; ++j)
      if (pw[j] != 0) out[j] += coeffs_[i] * pw[j];
  }
  return out;
}

Scalar promote_to(const Scalar& x, int L) {
  if (x.conductor() == L) return x;
  Scalar s;
  if (L == 1) return x;
  s.cyc_ = detail::cyclotomic_context(L);
  s.coeffs_ = x.coefficients_in(L);
  return s;
}

namespace {

std::shared_ptr<const detail::PrimeContext> common_prime(const Scalar& a, const Scalar& b) {
  const auto& pa = a.prime_context();
  const auto& pb = b.prime_context();
  if (pa && pb) {
    if (pa->p != pb->p) throw ArithmeticError("scalars from prime fields of different characteristic");
    return pa;
  }
  const Scalar& other = pa ? b : a;
  if (!other.is_rational()) throw ArithmeticError("cannot mix cyclotomic and prime-field scalars");
  return pa ? pa : pb;
}

std::uint64_t as_residue(const Scalar& x, std::uint64_t p) {
  if (x.is_prime_field()) return x.residue_value();
  return rational_mod(x.coefficients()[0], p);
}

}  // namespace

bool Scalar::is_zero() const {
  if (mod_) return residue_ == 0;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (mod_) return residue_ == 1 % mod_->p;
  return !cyc_ && coeffs_[0] == 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (mod_) {
    s.residue_ = residue_ == 0 ? 0 : mod_->p - residue_;
  } else {
    for (auto& c : s.coeffs_) c = -c;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (mod_ || o.mod_) {
    auto ctx = common_prime(*this, o);
    std::uint64_t p = ctx->p;
    std::uint64_t a = as_residue(*this, p);
    std::uint64_t b = as_residue(o, p);
    std::uint64_t r = a + b;
    if (r >= p) r -= p;
    *this = residue(ctx, static_cast<std::int64_t>(r));
    return *this;
  }
  if (!cyc_ && !o.cyc_) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (!o.cyc_) {
    coeffs_[0] += o.coeffs_[0];
    normalize();
    return *this;
  }
  int L = static_cast<int>(lcm_long(conductor(), o.conductor()));
  if (conductor() != L) *this = promote_to(*this, L);
  if (o.conductor() == L) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    auto oc = o.coefficients_in(L);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += oc[i];
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (mod_ || o.mod_) {
    auto ctx = common_prime(*this, o);
    std::uint64_t p = ctx->p;
    *this = residue(ctx, static_cast<std::int64_t>(mulmod(as_residue(*this, p), as_residue(o, p), p)));
    return *this;
  }
  if (!o.cyc_) {
    if (o.coeffs_[0] == 0) {
      *this = Scalar();
      return *this;
    }
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (!cyc_) {
    mpq_class f = coeffs_[0];
    *this = o;
    if (f == 0) {
      *this = Scalar();
      return *this;
    }
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  int L = static_cast<int>(lcm_long(conductor(), o.conductor()));
  Scalar a = conductor() == L ? *this : promote_to(*this, L);
  Scalar b = o.conductor() == L ? o : promote_to(o, L);
  const auto& ctx = *a.cyc_;
  const int deg = ctx.degree;
  std::vector<mpq_class> prod(static_cast<size_t>(2 * deg - 1), 0);
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<mpq_class> out(static_cast<size_t>(deg), 0);
  for (int k = 0; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    if (k < deg) {
      out[k] += prod[k];
      continue;
    }
    const auto& pw = ctx.powers[k % L];
    for (int i = 0; i < deg; ++i)
      if (pw[i] != 0) out[i] += prod[k] * pw[i];
  }
  a.coeffs_ = std::move(out);
  a.normalize();
  *this = std::move(a);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ || b.mod_) {
    if (a.mod_ && b.mod_) return a.mod_->p == b.mod_->p && a.residue_ == b.residue_;
    const Scalar& pr = a.mod_ ? a : b;
    const Scalar& other = a.mod_ ? b : a;
    if (!other.is_rational()) return false;
    return as_residue(other, pr.mod_->p) == pr.residue_;
  }
  int ca = a.conductor();
  int cb = b.conductor();
  if (ca == cb) return a.coeffs_ == b.coeffs_;
  int L = static_cast<int>(lcm_long(ca, cb));
  return a.coefficients_in(L) == b.coefficients_in(L);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (mod_) return residue(mod_, static_cast<std::int64_t>(powmod(residue_, mod_->p - 2, mod_->p)));
  if (!cyc_) {
    Scalar s;
    s.coeffs_[0] = 1 / coeffs_[0];
    return s;
  }
  // extended Euclid of the representing polynomial against Phi_N
  QPoly r0(cyc_->modulus.begin(), cyc_->modulus.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;          // 0
  QPoly s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_N is irreducible
  mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  return cyclotomic(cyc_->conductor, s0);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar::integer(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar Scalar::reduced() const {
  if (mod_) return residue(mod_, static_cast<std::int64_t>(residue_ % mod_->p));
  if (!cyc_) return rational(coeffs_[0]);
  return cyclotomic(cyc_->conductor, coeffs_);
}

std::string Scalar::field_tag() const {
  if (mod_) return "F_" + std::to_string(mod_->p);
  return "Q(z_" + std::to_string(conductor()) + ")";
}

std::string Scalar::to_string() const {
  if (mod_) return to_string(0);
  return to_string(conductor());
}

std::string Scalar::to_string(int L) const {
  if (mod_) return std::to_string(residue_) + " mod " + std::to_string(mod_->p);
  std::vector<mpq_class> c = coefficients_in(L > 0 ? L : conductor());
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (c[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << rational_string(c[k]) << ")";
    if (k == 1) out << "*z";
    else if (k > 1) out << "*z^" << k;
  }
  if (first) return "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// Field

Field::Field() : spec_(FieldSpec::cyclotomic(1)) {}

Field Field::make(const FieldSpec& spec) {
  Field f;
  f.spec_ = spec;
  if (spec.conductor < 1) throw std::invalid_argument("root order N must be positive");
  if (spec.kind == FieldKind::cyclotomic) return f;
  const std::uint64_t p = spec.modulus;
  if (!hopftwist::is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p > (1ULL << 31)) throw std::invalid_argument("modulus must be below 2^31");
  const auto n = static_cast<std::uint64_t>(spec.conductor);
  if ((p - 1) % n != 0)
    throw std::invalid_argument("N = " + std::to_string(n) + " does not divide p - 1 = " + std::to_string(p - 1));
  auto has_order_n = [&](std::uint64_t r) {
    if (powmod(r, n, p) != 1) return false;
    for (std::uint64_t q = 2; q <= n; ++q) {
      if (n % q != 0 || !hopftwist::is_prime(q)) continue;
      if (powmod(r, n / q, p) == 1) return false;
    }
    return true;
  };
  auto ctx = std::make_shared<detail::PrimeContext>();
  ctx->p = p;
  ctx->root_order = spec.conductor;
  if (spec.root != 0) {
    if (!has_order_n(spec.root % p))
      throw std::invalid_argument("designated root does not have multiplicative order N");
    ctx->root = spec.root % p;
  } else {
    for (std::uint64_t r = 1; r < p; ++r) {
      if (has_order_n(r)) {
        ctx->root = r;
        break;
      }
    }
  }
  f.spec_.root = ctx->root;
  f.prime_ = ctx;
  return f;
}

Field field_of(const Scalar& x) {
  if (x.is_prime_field()) {
    const auto& c = *x.prime_context();
    return Field::make(FieldSpec::prime(c.p, c.root_order, c.root));
  }
  return Field::make(FieldSpec::cyclotomic(x.conductor()));
}

Field field_of(const std::vector<Scalar>& xs) {
  long n = 1;
  for (const auto& x : xs) {
    if (x.is_prime_field()) return field_of(x);
    n = lcm_long(n, x.conductor());
  }
  return Field::make(FieldSpec::cyclotomic(static_cast<int>(n)));
}

Field make_field(const FieldSpec& spec) { return Field::make(spec); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (prime_) return Scalar::residue(prime_, v % static_cast<long>(prime_->p));
  return Scalar::integer(v);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (prime_) return Scalar::residue(prime_, static_cast<std::int64_t>(rational_mod(q, prime_->p)));
  return Scalar::rational(q);
}

bool Field::supports_root(int m) const {
  if (m < 1) return false;
  if (!prime_) return true;
  return spec_.conductor % m == 0;
}

Scalar Field::primitive_root(int m) const { return root_power(m, 1); }

Scalar Field::root_power(int m, long k) const {
  if (m < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = k % m;
  if (e < 0) e += m;
  if (!prime_) return Scalar::zeta(m, e);
  if (spec_.conductor % m != 0)
    throw std::invalid_argument("prime field F_" + std::to_string(prime_->p) + " with N = " +
                                std::to_string(spec_.conductor) + " has no primitive " +
                                std::to_string(m) + "-th root designated");
  std::uint64_t base = powmod(prime_->root, static_cast<std::uint64_t>(spec_.conductor / m), prime_->p);
  return Scalar::residue(prime_, static_cast<std::int64_t>(powmod(base, static_cast<std::uint64_t>(e), prime_->p)));
}

Scalar Field::coerce(const Scalar& x) const {
  if (!prime_) {
    if (x.is_prime_field()) throw ArithmeticError("cannot coerce a prime-field scalar into a cyclotomic field");
    return x;
  }
  if (x.is_prime_field()) {
    if (x.modulus() != prime_->p) throw ArithmeticError("scalar from a different prime field");
    return x;
  }
  const int L = x.conductor();
  if (L == 1) return from_rational(x.coefficients()[0]);
  if (spec_.conductor % L != 0)
    throw ArithmeticError("cannot reduce " + x.field_tag() + " into F_" + std::to_string(prime_->p) +
                          " with N = " + std::to_string(spec_.conductor));
  Scalar z = primitive_root(L);
  Scalar acc = zero();
  Scalar pw = one();
  for (const auto& c : x.coefficients()) {
    if (c != 0) acc += from_rational(c) * pw;
    pw *= z;
  }
  return acc;
}

std::string Field::describe() const {
  if (!prime_) return "cyclotomic " + std::to_string(spec_.conductor);
  return "prime " + std::to_string(prime_->p) + " " + std::to_string(spec_.conductor) + " " +
         std::to_string(prime_->root);
}

bool operator==(const Field& a, const Field& b) {
  return a.spec_.kind == b.spec_.kind && a.spec_.conductor == b.spec_.conductor &&
         a.spec_.modulus == b.spec_.modulus && a.spec_.root == b.spec_.root;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + s + "' at offset " + std::to_string(i) + ": " + what);
  }
};

mpq_class parse_rational(Cursor& c) {
  c.skip();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/')) ++c.i;
  std::string tok = c.s.substr(start, c.i - start);
  if (tok.empty() || tok == "-" || tok == "+") c.fail("expected a rational number");
  if (tok[0] == '+') tok.erase(0, 1);
  mpq_class q;
  if (q.set_str(tok, 10) != 0) c.fail("malformed rational '" + tok + "'");
  if (q.get_den() == 0) c.fail("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const Field& field, int conductor) {
  Cursor c{text};
  if (field.is_prime()) {
    mpq_class v = parse_rational(c);
    c.skip();
    if (c.s.compare(c.i, 3, "mod") == 0) {
      c.i += 3;
      mpq_class p = parse_rational(c);
      if (p != static_cast<long>(field.characteristic()))
        c.fail("modulus does not match field characteristic");
    }
    if (!c.done()) c.fail("trailing characters");
    return field.from_rational(v);
  }
  if (conductor < 1) conductor = 1;
  std::vector<mpq_class> coeffs(static_cast<size_t>(conductor), 0);
  if (c.done()) c.fail("empty input");
  bool first = true;
  while (!c.done()) {
    mpq_class sign = 1;
    if (!first) {
      if (c.eat('+')) sign = 1;
      else if (c.eat('-')) sign = -1;
      else c.fail("expected '+' or '-'");
    } else if (c.eat('-')) {
      sign = -1;
    }
    first = false;
    mpq_class coef = 1;
    bool have_coef = false;
    if (c.eat('(')) {
      coef = parse_rational(c);
      if (!c.eat(')')) c.fail("expected ')'");
      have_coef = true;
    } else {
      c.skip();
      if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        coef = parse_rational(c);
        have_coef = true;
      }
    }
    long power = 0;
    if (have_coef && c.eat('*')) {
      if (!c.eat('z')) c.fail("expected 'z' after '*'");
      power = 1;
    } else if (!have_coef) {
      if (!c.eat('z')) c.fail("expected a coefficient or 'z'");
      power = 1;
    }
    if (power == 1 && c.eat('^')) {
      mpq_class e = parse_rational(c);
      if (e.get_den() != 1 || e < 0) c.fail("exponent must be a non-negative integer");
      power = e.get_num().get_si();
    }
    coeffs[static_cast<size_t>(power % conductor)] += sign * coef;
  }
  return Scalar::cyclotomic(conductor, coeffs);
}

}  // namespace hopftwist
