#include "kstab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace kstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational \"p/q\": '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::to_decimal(unsigned digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Integer num = abs(value_.get_num()) * scale;
  const Integer den = value_.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  Integer scaled = (2 * num + den) / (2 * den);
  std::string s = scaled.get_str(10);
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(value_) < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Integer binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace kstab
