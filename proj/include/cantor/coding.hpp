#pragma once

#include <optional>
#include <vector>

#include "cantor/core_space.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// Cap on long-division digits when decoding a rational into an expansion.
// The digit stream of p/q repeats within q steps; the cap only guards
// pathologically large denominators.
inline constexpr std::size_t kDefaultDigitBudget = std::size_t{1} << 22;

// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/*
 * The 2^j closed intervals of the j-th middle-thirds stage, in increasing
 * order, each of length 3^-j. Stage j+1 nests inside stage j. Computed by
 * recursion on j (removing middle thirds), deliberately not by enumerating
 * coded cylinder images, so the two routes cross-check each other.
 * Denominators grow as 3^j; the enumeration budget caps 2^j.
 */
std::vector<Interval> stage_intervals(int j, std::size_t budget = kDefaultWordBudget);

// Value of the ternary expansion with digits 2*x_l: sum of 2 x_l / 3^l.
// x must be a binary descriptor (symbols 0/1). Exact; the periodic tail is
// summed as a closed-form geometric series.
Rational tau(const SequenceDescriptor& x);

// Value of the binary expansion: sum of x_l / 2^l. x binary as above.
Rational beta(const SequenceDescriptor& x);

/*
 * Inverse of tau on the Cantor set: ternary long division of q, accepting
 * only digit strings over {0,2}. When q has two ternary expansions the
 * {0,2}-representable one is chosen. Returns nullopt when q is not in the
 * Cantor set; throws Error{domain} when q is outside [0,1].
 */
std::optional<SequenceDescriptor> tau_decode(const Rational& q,
                                             std::size_t digit_budget = kDefaultDigitBudget);

/*
 * Inverse of beta: the canonical binary expansion of q in [0,1] — the
 * eventually-zero one for dyadic q in [0,1), all-ones for q = 1, and the
 * unique expansion otherwise. beta(beta_decode(q)) == q always.
 */
SequenceDescriptor beta_decode(const Rational& q,
                               std::size_t digit_budget = kDefaultDigitBudget);

// Image under tau of the cylinder with this binary prefix: the stage-m
// interval [tau(prefix 000...), tau(prefix 111...)], m = prefix length.
Interval cylinder_interval(const Letters& prefix);

}  // namespace cantor
