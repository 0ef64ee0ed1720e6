#include "cantor/coding.hpp"

#include <algorithm>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_binary(const Letters& w, const char* what) {
  for (Symbol s : w)
    if (s != 0 && s != 1)
      throw Error(Error::Kind::invalid_input,
                  std::string(what) + " must use symbols 0 and 1");
}

void require_binary(const SequenceDescriptor& x) {
  require_binary(x.preperiod(), "binary point");
  require_binary(x.period(), "binary point");
}

mpz_class from_digits(const std::vector<int>& digits, int base) {
  if (digits.empty()) return 0;
  std::string text;
  text.reserve(digits.size());
  for (int d : digits) text.push_back(static_cast<char>('0' + d));
  return mpz_class(text, base);
}

// Exact value of the expansion 0.d_1 d_2 d_3 ... in the given base, for an
// eventually periodic digit stream:
//
//   sum = A / base^a  +  P / (base^a (base^p - 1))
//
// where A and P read the preperiod and period digit blocks as base-`base`
// integers, a = |pre|, p = |per|. The second term is the geometric series
// for the repeating tail.
Rational expansion_value(const std::vector<int>& pre, const std::vector<int>& per,
                         int base) {
  mpz_class a_val = from_digits(pre, base);
  mpz_class p_val = from_digits(per, base);
  mpz_class base_a, base_p;
  mpz_ui_pow_ui(base_a.get_mpz_t(), static_cast<unsigned long>(base), pre.size());
  mpz_ui_pow_ui(base_p.get_mpz_t(), static_cast<unsigned long>(base), per.size());
  mpz_class den_tail = base_p - 1;
  return Rational(a_val * den_tail + p_val, base_a * den_tail);
}

std::vector<int> digits_of(const SequenceDescriptor& x, bool period, int factor) {
  const Letters& src = period ? x.period() : x.preperiod();
  std::vector<int> out;
  out.reserve(src.size());
  for (Symbol s : src) out.push_back(factor * s);
  return out;
}

struct Expansion {
  std::vector<int> pre;
  std::vector<int> per;  // non-empty
};

/*
 * Long division of q = n/d (lowest terms, 0 <= q < 1) in the given prime
 * base. Digits d_k = floor(base r_{k-1} / d), r_k = base r_{k-1} mod d.
 * After v = v_base(d) steps the remainder sequence is purely periodic, so
 * the preperiod holds exactly v digits and the period closes when the
 * remainder recorded at step v recurs.
 */
Expansion long_division(const mpz_class& n, const mpz_class& d, int base,
                        std::size_t digit_budget) {
  mpz_class reduced = d;
  unsigned long v =
      mpz_remove(reduced.get_mpz_t(), d.get_mpz_t(), mpz_class(base).get_mpz_t());

  Expansion out;
  mpz_class r = n, t, digit;
  auto step = [&]() {
    t = r * base;
    mpz_fdiv_qr(digit.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return static_cast<int>(digit.get_si());
  };

  for (unsigned long k = 0; k < v; ++k) out.pre.push_back(step());
  mpz_class cycle_start = r;
  std::size_t steps = v;
  do {
    out.per.push_back(step());
    if (++steps > digit_budget)
      throw Error(Error::Kind::budget, "expansion period exceeds the digit budget");
  } while (r != cycle_start);
  return out;
}

Expansion expand(const Rational& q, int base, std::size_t digit_budget) {
  if (q.sign() < 0 || q > Rational(1))
    throw Error(Error::Kind::domain, "value outside [0, 1]");
  if (q == Rational(1)) return Expansion{{}, {base - 1}};
  return long_division(q.numerator(), q.denominator(), base, digit_budget);
}

Letters halved(const std::vector<int>& digits) {
  Letters out;
  out.reserve(digits.size());
  for (int d : digits) out.push_back(d / 2);
  return out;
}

bool all_in_02(const std::vector<int>& digits) {
  return std::all_of(digits.begin(), digits.end(),
                     [](int d) { return d == 0 || d == 2; });
}

}  // namespace

std::vector<Interval> stage_intervals(int j, std::size_t budget) {
  if (j < 0)
    throw Error(Error::Kind::invalid_input, "stage index must be nonnegative");
  if (j >= 63 || (std::size_t{1} << j) > budget)
    throw Error(Error::Kind::budget, "stage enumeration exceeds the budget");

  std::vector<Interval> stage{{Rational(0), Rational(1)}};
  Rational third(1, 3);
  for (int step = 0; step < j; ++step) {
    std::vector<Interval> next;
    next.reserve(stage.size() * 2);
    for (const auto& iv : stage) {
      Rational piece = iv.length() * third;
      next.push_back({iv.lo, iv.lo + piece});
      next.push_back({iv.hi - piece, iv.hi});
    }
    stage = std::move(next);
  }
  return stage;
}

Rational tau(const SequenceDescriptor& x) {
  require_binary(x);
  return expansion_value(digits_of(x, false, 2), digits_of(x, true, 2), 3);
}

Rational beta(const SequenceDescriptor& x) {
  require_binary(x);
  return expansion_value(digits_of(x, false, 1), digits_of(x, true, 1), 2);
}

std::optional<SequenceDescriptor> tau_decode(const Rational& q,
                                             std::size_t digit_budget) {
  Expansion e = expand(q, 3, digit_budget);
  if (all_in_02(e.pre) && all_in_02(e.per))
    return SequenceDescriptor(halved(e.pre), halved(e.per));

  // A terminating expansion (period [0]) is the greedy form; the same value
  // is also ...(last nonzero digit - 1) followed by all 2s. At most one of
  // the two forms can avoid the digit 1.
  if (e.per != std::vector<int>{0}) return std::nullopt;
  auto last_nonzero = std::find_if(e.pre.rbegin(), e.pre.rend(),
                                   [](int d) { return d != 0; });
  if (last_nonzero == e.pre.rend()) return std::nullopt;  // q = 0, handled above
  std::vector<int> alt(e.pre.begin(), last_nonzero.base());
  alt.back() -= 1;
  if (!all_in_02(alt)) return std::nullopt;
  return SequenceDescriptor(halved(alt), {1});
}

SequenceDescriptor beta_decode(const Rational& q, std::size_t digit_budget) {
  // Greedy long division already yields the eventually-zero form for dyadic
  // rationals below 1, which is the canonical choice.
  Expansion e = expand(q, 2, digit_budget);
  return SequenceDescriptor(Letters(e.pre.begin(), e.pre.end()),
                            Letters(e.per.begin(), e.per.end()));
}

Interval cylinder_interval(const Letters& prefix) {
  require_binary(prefix, "cylinder prefix");
  return Interval{tau(SequenceDescriptor(prefix, {0})),
                  tau(SequenceDescriptor(prefix, {1}))};
}

}  // namespace cantor
