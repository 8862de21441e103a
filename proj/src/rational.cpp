#include "sdimlab/rational.hpp"

#include <ostream>

#include "sdimlab/error.hpp"

namespace sdim {

namespace {

bool is_decimal_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_decimal_integer(s)) throw Error(ErrorCode::parse_error, "not an integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::invalid_params, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  const mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::invalid_params, "zero denominator");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return from_strings(text, "1");
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::invalid_params, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

}  // namespace sdim
