#pragma once

#include <functional>
#include <map>

#include "cantor/measure.hpp"
#include "cantor/metric.hpp"

namespace cantor {

/*
 * Locally constant function: a rational value for every depth-m word, i.e.
 * a function on the sequence space constant on every depth-m cylinder.
 */
class StepFunction {
public:
  StepFunction(LevelSystem system, int depth, std::map<Letters, Rational> values,
               std::size_t budget = kDefaultWordBudget);

  const LevelSystem& system() const { return system_; }
  int depth() const { return depth_; }
  const Rational& value(const Letters& word) const;
  const std::map<Letters, Rational>& values() const { return values_; }

private:
  LevelSystem system_;
  int depth_;
  std::map<Letters, Rational> values_;
};

// Pointwise combinations (refined to the common depth). Plumbing for
// linearity checks and for building integrands.
StepFunction scale_step(const Rational& a, const StepFunction& f);
StepFunction add_step(const StepFunction& f, const StepFunction& g,
                      std::size_t budget = kDefaultWordBudget);

// Exact integral of a step function: sum over depth-m words of
// value(w) * cylinder_mass(w). Tree measures must be defined at least to
// f's depth (Error{depth} otherwise).
Rational integrate_step(const StepFunction& f, const Measure& mu);

// The same function presented at a finer depth; integrate_step is
// invariant under refinement.
StepFunction refine_step(const StepFunction& f, int depth,
                         std::size_t budget = kDefaultWordBudget);

// Indicator of a cylinder as a depth-m step function (m >= c.depth()):
// 1 on words extending the prefix, 0 elsewhere.
StepFunction indicator(const LevelSystem& system, const Cylinder& c, int m,
                       std::size_t budget = kDefaultWordBudget);

using StepFunctional = std::function<Rational(const StepFunction&)>;

/*
 * Recovers cylinder masses from a black-box functional by integrating
 * cylinder indicators: mass(w) = I(indicator(w)) for all |w| <= D. The
 * functional's linearity and positivity are verified on the probes —
 * negative indicator integrals, failed child-sum additivity, or a failed
 * scaling probe throw Error{contract}. When I is integration against a
 * depth >= D tree measure, the result is that measure cut to depth D.
 */
TreeMeasure measure_from_functional(const StepFunctional& functional,
                                    const LevelSystem& system, int depth,
                                    std::size_t budget = kDefaultWordBudget);

/*
 * Certified bound shape for approximating continuous integrands: a
 * nonincreasing-in-the-shrinking-radius bound with |g(x) - g(y)| <=
 * omega(d(x, y)). Monotonicity (a smaller radius never gets a larger
 * bound) is enforced across the radii actually queried.
 */
class ModulusFunction {
public:
  explicit ModulusFunction(std::function<Rational(const Rational&)> fn);
  static ModulusFunction identity();  // omega(r) = r

  // Bound at `radius` in (0,1]; validates nonnegativity and monotonicity
  // against every earlier query.
  Rational at(const Rational& radius) const;

private:
  std::function<Rational(const Rational&)> fn_;
  mutable std::map<Rational, Rational> queried_;
};

struct ApproxIntegral {
  Rational value;
  Rational error_bound;
};

/*
 * Riemann-style approximation of a continuous function given only through
 * samples: g(w) must be the function's value at the cylinder's canonical
 * sample point (the prefix extended by symbol 0 forever), and the caller
 * warrants |g(x) - g(y)| <= omega(distance(x, y)). The returned value is
 * sum g(w) * mass(w) over depth-m words; the true integral of any function
 * honoring the warrant lies within error_bound = omega(ratio^m) of it.
 * mu must be a probability measure (depth-m masses summing to 1).
 */
ApproxIntegral approximate_integral(const std::function<Rational(const Letters&)>& g,
                                    const ModulusFunction& omega, const Measure& mu,
                                    int m, const UltrametricParams& params = {},
                                    std::size_t budget = kDefaultWordBudget);

}  // namespace cantor
