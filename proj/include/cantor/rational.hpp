#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantor {

/*
 * Arbitrary-precision rational, always kept in lowest terms with a positive
 * denominator. Backed by GMP; the raw() escape hatch is for internal code
 * that assembles values at the mpz level (digit strings, geometric series).
 *
 * Serialized form is "p/q" in lowest terms, with the denominator always
 * written ("0/1", "1/1", "-2/3").
 */
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& num, const mpz_class& den);

  // Parses "p/q" or "p". Throws Error{invalid_input} on malformed text or
  // zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// base^exp; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exp);

Rational abs(const Rational& r);

}  // namespace cantor
