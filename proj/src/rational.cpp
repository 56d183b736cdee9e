#include "tcurv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tcurv {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  // Grammar: '-'? digit+ ('/' digit+)?
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  auto take_digits = [](std::string_view& s) {
    size_t n = 0;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    std::string_view d = s.substr(0, n);
    s.remove_prefix(n);
    return d;
  };
  std::string_view num = take_digits(rest);
  if (num.empty()) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  std::string_view den;
  if (!rest.empty() && rest.front() == '/') {
    rest.remove_prefix(1);
    den = take_digits(rest);
    if (den.empty()) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  if (!rest.empty()) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("bad rational: zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  r.v_ = std::move(q);
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

}  // namespace tcurv
