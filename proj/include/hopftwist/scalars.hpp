#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hopftwist {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by zero") {}
};

namespace detail {

// Power-basis data for Q(zeta_N): the N-th cyclotomic polynomial and the
// reduced images of zeta^k for 0 <= k < N.
struct CyclotomicContext {
  int conductor = 1;
  int degree = 1;                               // phi(N)
  std::vector<long> modulus;                    // Phi_N, monic, low degree first
  std::vector<std::vector<long>> powers;        // zeta^k in the power basis
};

struct PrimeContext {
  std::uint64_t p = 2;
  int root_order = 1;
  std::uint64_t root = 1;  // designated primitive root_order-th root of unity
};

std::shared_ptr<const CyclotomicContext> cyclotomic_context(int conductor);
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace detail

int euler_phi(int n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_prime(std::uint64_t n);

// An exact element of a cyclotomic field Q(zeta_N) or of a prime field F_p.
// Rationals are cyclotomic elements of conductor 1. Binary operations on
// cyclotomic elements of different conductors embed both into the lcm
// conductor; rationals also coerce into prime fields.
class Scalar {
 public:
  Scalar();
  static Scalar integer(long v);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  // Element of Q(zeta_N) with the given power-basis coefficients (any length;
  // the vector is reduced modulo Phi_N).
  static Scalar cyclotomic(int conductor, const std::vector<mpq_class>& coeffs);
  static Scalar zeta(int conductor, long k = 1);
  static Scalar residue(std::shared_ptr<const detail::PrimeContext> ctx, std::int64_t v);

  bool is_prime_field() const { return mod_ != nullptr; }
  bool is_rational() const { return !mod_ && !cyc_; }
  int conductor() const;
  std::uint64_t modulus() const { return mod_ ? mod_->p : 0; }
  const std::shared_ptr<const detail::PrimeContext>& prime_context() const { return mod_; }

  // Power-basis coefficients (cyclotomic kind; length phi(conductor)).
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  std::uint64_t residue_value() const { return residue_; }
  // The element re-expressed over Q(zeta_L); requires conductor() | L.
  std::vector<mpq_class> coefficients_in(int L) const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // Re-reduces the stored representation; a no-op on canonical values.
  Scalar reduced() const;

  // "(-1/2)*z^3 + (1/3)" for cyclotomic elements (in the stored conductor
  // unless one is given), "r mod p" for prime-field elements.
  std::string to_string() const;
  std::string to_string(int conductor) const;
  // Conductor tag "Q(z_N)" or "F_p".
  std::string field_tag() const;

 private:
  friend Scalar promote_to(const Scalar& x, int L);
  void normalize();

  std::shared_ptr<const detail::CyclotomicContext> cyc_;  // null for rationals
  std::shared_ptr<const detail::PrimeContext> mod_;       // non-null for F_p
  std::vector<mpq_class> coeffs_;
  std::uint64_t residue_ = 0;
};

enum class FieldKind { cyclotomic, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::cyclotomic;
  int conductor = 1;       // N: root-of-unity order supplied by the field
  std::uint64_t modulus = 0;  // p (prime kind)
  std::uint64_t root = 0;     // optional designated root; 0 = smallest of order N

  static FieldSpec cyclotomic(int n) { return {FieldKind::cyclotomic, n, 0, 0}; }
  static FieldSpec prime(std::uint64_t p, int n, std::uint64_t root = 0) {
    return {FieldKind::prime, n, p, root};
  }
};

// Handle supplying constants and roots of unity for one of the two scalar
// backends. Cheap to copy; immutable.
class Field {
 public:
  Field();  // the rationals
  static Field make(const FieldSpec& spec);

  FieldKind kind() const { return spec_.kind; }
  const FieldSpec& spec() const { return spec_; }
  bool is_prime() const { return spec_.kind == FieldKind::prime; }
  std::uint64_t characteristic() const { return is_prime() ? spec_.modulus : 0; }
  int root_order() const { return spec_.conductor; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  // A primitive M-th root of unity. Cyclotomic fields supply every M (the
  // conductor is promoted); prime fields require M | N.
  Scalar primitive_root(int m) const;
  // primitive_root(m)^k
  Scalar root_power(int m, long k) const;
  bool supports_root(int m) const;
  // Maps a scalar into this field: identity on cyclotomic fields; on prime
  // fields, reduces cyclotomic values with zeta_L -> primitive_root(L).
  Scalar coerce(const Scalar& x) const;

  std::string describe() const;  // "cyclotomic 4" / "prime 13 4 5"

  friend bool operator==(const Field& a, const Field& b);

 private:
  FieldSpec spec_;
  std::shared_ptr<const detail::PrimeContext> prime_;
};

Field make_field(const FieldSpec& spec);

// The field a scalar lives in: its prime field, or Q(zeta_N) for its conductor.
Field field_of(const Scalar& x);
// Common field of a collection (prime if any member is; rationals if empty).
Field field_of(const std::vector<Scalar>& xs);

// Parses the output of Scalar::to_string in the given field.
Scalar parse_scalar(const std::string& text, const Field& field, int conductor);

// Roots lying in the field of a polynomial given by its coefficients (low
// degree first). Only simple roots are guaranteed; the result is sorted by
// discovery order and verified exactly.
std::vector<Scalar> roots_in_field(const std::vector<Scalar>& poly, const Field& field);

}  // namespace hopftwist
