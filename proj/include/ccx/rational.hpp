#pragma once

// Exact arbitrary-precision rationals. Thin value wrapper over GMP's mpq_class
// that keeps every value canonical (reduced, positive denominator).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ccx {

using BigInt = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : v_(static_cast<long>(n)) {}  // NOLINT implicit
  Rational(const BigInt& n) : v_(n) {}                     // NOLINT implicit
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q" or "p" with optional leading '-'. Canonicalizes.
  static Rational parse(std::string_view text);
  // 2^exponent, exponent may be negative.
  static Rational pow2(std::int64_t exponent);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  // Always "p/q", e.g. "-3/4", "0/1", "2/1".
  std::string str() const;
  // Decimal rendering with `digits` fractional digits, truncated toward zero.
  // Display only.
  std::string decimal(int digits) const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);
Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ccx
