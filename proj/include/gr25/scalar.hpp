#pragma once

// Exact scalars: arbitrary-precision rationals and elements of odd prime
// fields F_p (p >= 5), plus the Eigen glue that lets both serve as matrix
// scalars.

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace gr25 {

using BigInt = mpz_class;
using Rng = std::mt19937_64;

/// Thrown when two scalars from different fields meet in one operation.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integer literals convert implicitly
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional sign; rejects zero denominators.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string to_string() const;

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// Element of F_p. A default-constructed or integer-constructed Fp is an
/// untagged integer constant that adopts the modulus of whatever tagged
/// element it is combined with; this is what lets Eigen's internal Scalar(0)
/// and Scalar(1) work. Two tagged elements with different moduli never mix.
class Fp {
 public:
  Fp() = default;
  Fp(long n) : v_(n) {}  // NOLINT: untagged constant

  static Fp make(std::int64_t value, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool tagged() const { return p_ != 0; }
  /// Residue in [0, p). Requires a tagged element.
  std::uint32_t residue() const;
  bool is_zero() const { return v_ == 0; }
  std::string to_string() const;

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  static std::uint32_t common(const Fp& a, const Fp& b);
  std::uint64_t reduced(std::uint32_t p) const;

  std::int64_t v_ = 0;   // residue in [0,p) when tagged, raw integer otherwise
  std::uint32_t p_ = 0;  // 0 means untagged
};

bool is_prime(std::uint64_t n);

/// The rationals. Stateless; every Rational belongs to it.
struct RationalField {
  using Scalar = Rational;

  Scalar from_int(long n) const { return Rational(n); }
  Scalar from_big(const BigInt& n) const { return Rational(n, 1); }
  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  /// Small random rational: numerator in [-20, 20], denominator in [1, 6].
  Scalar random(Rng& rng) const;
  Scalar random_nonzero(Rng& rng) const;
  std::string name() const { return "rational"; }
  bool owns(const Scalar&) const { return true; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// F_p for an odd prime p >= 5.
class PrimeField {
 public:
  using Scalar = Fp;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Scalar from_int(long n) const { return Fp::make(n, p_); }
  Scalar from_big(const BigInt& n) const;
  Scalar zero() const { return Fp::make(0, p_); }
  Scalar one() const { return Fp::make(1, p_); }
  Scalar random(Rng& rng) const;
  Scalar random_nonzero(Rng& rng) const;
  std::string name() const { return "fp:" + std::to_string(p_); }
  bool owns(const Scalar& x) const { return x.modulus() == p_; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept ExactField = requires(const F& f, long n, Rng& rng) {
  typename F::Scalar;
  { f.from_int(n) } -> std::same_as<typename F::Scalar>;
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.random(rng) } -> std::same_as<typename F::Scalar>;
  { f.name() } -> std::convertible_to<std::string>;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Parses a scalar in the textual form used by matrix files ("n" or "n/d").
Fp parse_fp(std::string_view text, std::uint32_t p);

}  // namespace gr25

namespace Eigen {

template <>
struct NumTraits<gr25::Rational> : GenericNumTraits<gr25::Rational> {
  using Real = gr25::Rational;
  using NonInteger = gr25::Rational;
  using Literal = gr25::Rational;
  using Nested = gr25::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<gr25::Fp> : GenericNumTraits<gr25::Fp> {
  using Real = gr25::Fp;
  using NonInteger = gr25::Fp;
  using Literal = gr25::Fp;
  using Nested = gr25::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
