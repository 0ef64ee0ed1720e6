#include "cantor/rational.hpp"

#include <ostream>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw Error(Error::Kind::invalid_input,
                "malformed rational '" + std::string(whole) + "'");
  // mpz_set_str accepts leading '+'/whitespace; keep the accepted grammar
  // to an optional '-' followed by decimal digits.
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size())
    throw Error(Error::Kind::invalid_input,
                "malformed rational '" + std::string(whole) + "'");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw Error(Error::Kind::invalid_input,
                  "malformed rational '" + std::string(whole) + "'");
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0)
    throw Error(Error::Kind::invalid_input, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0)
    throw Error(Error::Kind::invalid_input, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(mpq_class(parse_integer(text, text)));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) == 0)
    throw Error(Error::Kind::invalid_input,
                "rational with zero denominator '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw Error(Error::Kind::domain, "division of rational by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero())
      throw Error(Error::Kind::domain, "zero base with negative exponent");
    return pow(Rational(1) / base, -exp);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(),
             static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(),
             static_cast<unsigned long>(exp));
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace cantor
