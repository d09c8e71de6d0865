#include "ccx/rational.hpp"

#include <ostream>

namespace ccx {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!is_digits(num_part) || !is_digits(den_part))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt num(std::string(num_part), 10);
  BigInt den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::pow2(std::int64_t exponent) {
  BigInt p = 1;
  auto magnitude = static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  return exponent >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  BigInt n = abs(v_.get_num());
  BigInt d = v_.get_den();
  BigInt whole = n / d;
  BigInt rest = n % d;
  std::string out = (sign() < 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rest *= 10;
      BigInt digit = rest / d;
      rest %= d;
      out += digit.get_str();
    }
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ccx
