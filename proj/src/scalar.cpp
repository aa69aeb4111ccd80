#include "gr25/scalar.hpp"

#include <charconv>
#include <ostream>

namespace gr25 {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::pair<BigInt, BigInt> split_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text), BigInt(1)};
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return {num, den};
}

std::uint32_t reduce_big(const BigInt& n, std::uint32_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto [num, den] = split_fraction(text);
  return Rational(num, den);
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

Fp Fp::make(std::int64_t value, std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("Fp: modulus must be nonzero");
  Fp x;
  x.p_ = p;
  const std::int64_t m = static_cast<std::int64_t>(p);
  x.v_ = ((value % m) + m) % m;
  return x;
}

std::uint32_t Fp::residue() const {
  if (!tagged()) throw std::logic_error("Fp: residue of an untagged constant");
  return static_cast<std::uint32_t>(v_);
}

std::string Fp::to_string() const { return std::to_string(v_); }

std::uint32_t Fp::common(const Fp& a, const Fp& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw FieldMismatch("Fp: operands from F_" + std::to_string(a.p_) + " and F_" +
                      std::to_string(b.p_));
}

std::uint64_t Fp::reduced(std::uint32_t p) const {
  if (p_ == p) return static_cast<std::uint64_t>(v_);
  const std::int64_t m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v_ % m) + m) % m);
}

Fp& Fp::operator+=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    v_ += o.v_;
    return *this;
  }
  v_ = static_cast<std::int64_t>((reduced(p) + o.reduced(p)) % p);
  p_ = p;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    v_ -= o.v_;
    return *this;
  }
  v_ = static_cast<std::int64_t>((reduced(p) + p - o.reduced(p)) % p);
  p_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    v_ *= o.v_;
    return *this;
  }
  v_ = static_cast<std::int64_t>((reduced(p) * o.reduced(p)) % p);
  p_ = p;
  return *this;
}

Fp operator-(const Fp& a) {
  Fp r = a;
  if (a.p_ == 0) {
    r.v_ = -a.v_;
  } else if (a.v_ != 0) {
    r.v_ = static_cast<std::int64_t>(a.p_) - a.v_;
  }
  return r;
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.reduced(p) == b.reduced(p);
}

Fp Fp::pow(std::uint64_t e) const {
  if (!tagged()) throw std::logic_error("Fp: pow of an untagged constant");
  Fp result = make(1, p_);
  Fp base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Fp Fp::inverse() const {
  if (!tagged()) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::logic_error("Fp: inverse of an untagged constant");
  }
  if (v_ == 0) throw std::domain_error("Fp: division by zero");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational RationalField::random(Rng& rng) const {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Rational RationalField::random_nonzero(Rng& rng) const {
  for (;;) {
    Rational r = random(rng);
    if (!r.is_zero()) return r;
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime >= 5, got " +
                                std::to_string(p));
  }
}

Fp PrimeField::from_big(const BigInt& n) const { return Fp::make(reduce_big(n, p_), p_); }

Fp PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
  return Fp::make(d(rng), p_);
}

Fp PrimeField::random_nonzero(Rng& rng) const {
  std::uniform_int_distribution<std::uint32_t> d(1, p_ - 1);
  return Fp::make(d(rng), p_);
}

Fp parse_fp(std::string_view text, std::uint32_t p) {
  auto [num, den] = split_fraction(text);
  const std::uint32_t d = reduce_big(den, p);
  if (d == 0) throw std::invalid_argument("denominator divisible by p in '" + std::string(text) + "'");
  return Fp::make(reduce_big(num, p), p) / Fp::make(d, p);
}

}  // namespace gr25
