#include "cantor/integration.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

StepFunction::StepFunction(LevelSystem system, int depth,
                           std::map<Letters, Rational> values, std::size_t budget)
    : system_(std::move(system)), depth_(depth), values_(std::move(values)) {
  if (depth_ < 0)
    throw Error(Error::Kind::invalid_input, "step function depth must be nonnegative");
  auto expected = count_words_at_depth(system_, depth_, budget);
  if (!expected)
    throw Error(Error::Kind::budget, "step function domain exceeds the word budget");
  if (values_.size() != *expected)
    throw Error(Error::Kind::invalid_input,
                "step function must assign a value to every depth-m word");
  for (const auto& [word, _] : values_) {
    if (static_cast<int>(word.size()) != depth_)
      throw Error(Error::Kind::invalid_input, "step function word of wrong depth");
    validate(system_, Word{1, word});
  }
}

const Rational& StepFunction::value(const Letters& word) const {
  auto it = values_.find(word);
  if (it == values_.end())
    throw Error(Error::Kind::invalid_input, "word outside the step function's domain");
  return it->second;
}

StepFunction scale_step(const Rational& a, const StepFunction& f) {
  std::map<Letters, Rational> scaled;
  for (const auto& [word, v] : f.values()) scaled.emplace(word, a * v);
  return StepFunction(f.system(), f.depth(), std::move(scaled));
}

StepFunction add_step(const StepFunction& f, const StepFunction& g, std::size_t budget) {
  if (!(f.system() == g.system()))
    throw Error(Error::Kind::invalid_input, "step functions over different level systems");
  int depth = std::max(f.depth(), g.depth());
  StepFunction fr = refine_step(f, depth, budget);
  StepFunction gr = refine_step(g, depth, budget);
  std::map<Letters, Rational> sum;
  for (const auto& [word, v] : fr.values()) sum.emplace(word, v + gr.value(word));
  return StepFunction(f.system(), depth, std::move(sum), budget);
}

Rational integrate_step(const StepFunction& f, const Measure& mu) {
  if (!(f.system() == measure_system(mu)))
    throw Error(Error::Kind::invalid_input,
                "step function and measure live on different level systems");
  if (const auto* tree = std::get_if<TreeMeasure>(&mu); tree && tree->depth() < f.depth())
    throw Error(Error::Kind::depth,
                "measure not defined to the step function's depth");
  Rational sum;
  for (const auto& [word, v] : f.values()) sum += v * cylinder_mass(mu, Cylinder{word});
  return sum;
}

StepFunction refine_step(const StepFunction& f, int depth, std::size_t budget) {
  if (depth < f.depth())
    throw Error(Error::Kind::invalid_input, "refinement depth below the function's depth");
  if (depth == f.depth()) return f;
  std::map<Letters, Rational> values;
  for_each_word(f.system(), depth, [&](const Letters& w) {
    Letters head(w.begin(), w.begin() + f.depth());
    values.emplace(w, f.value(head));
  }, budget);
  return StepFunction(f.system(), depth, std::move(values), budget);
}

StepFunction indicator(const LevelSystem& system, const Cylinder& c, int m,
                       std::size_t budget) {
  if (m < c.depth())
    throw Error(Error::Kind::invalid_input, "indicator depth below the cylinder's depth");
  validate(system, c);
  std::map<Letters, Rational> values;
  for_each_word(system, m, [&](const Letters& w) {
    bool inside = std::equal(c.prefix.begin(), c.prefix.end(), w.begin());
    values.emplace(w, Rational(inside ? 1 : 0));
  }, budget);
  return StepFunction(system, m, std::move(values), budget);
}

TreeMeasure measure_from_functional(const StepFunctional& functional,
                                    const LevelSystem& system, int depth,
                                    std::size_t budget) {
  if (depth < 0)
    throw Error(Error::Kind::invalid_input, "depth must be nonnegative");

  TreeMeasure::Masses masses(static_cast<std::size_t>(depth) + 1);
  for (int d = 0; d <= depth; ++d)
    for_each_word(system, d, [&](const Letters& w) {
      Rational mass = functional(indicator(system, Cylinder{w}, d, budget));
      if (mass.sign() < 0)
        throw Error(Error::Kind::contract,
                    "functional is negative on a nonnegative indicator");
      masses[static_cast<std::size_t>(d)].emplace(w, std::move(mass));
    }, budget);

  // Homogeneity probe: I(3 * 1) must be 3 * I(1).
  StepFunction unit = indicator(system, Cylinder{}, 0, budget);
  if (functional(scale_step(Rational(3), unit)) != Rational(3) * masses[0].begin()->second)
    throw Error(Error::Kind::contract, "functional fails the scaling probe");

  TreeMeasure tree(system, std::move(masses));
  // Additivity probe: child indicators sum to the parent indicator, so a
  // linear functional must produce a consistent tree.
  ConsistencyReport report = check_consistency(tree);
  if (!report.ok())
    throw Error(Error::Kind::contract,
                "functional is not additive across cylinder subdivisions");
  return tree;
}

ModulusFunction::ModulusFunction(std::function<Rational(const Rational&)> fn)
    : fn_(std::move(fn)) {
  if (!fn_)
    throw Error(Error::Kind::invalid_input, "modulus function must be callable");
}

ModulusFunction ModulusFunction::identity() {
  return ModulusFunction([](const Rational& r) { return r; });
}

Rational ModulusFunction::at(const Rational& radius) const {
  if (!(Rational(0) < radius && radius <= Rational(1)))
    throw Error(Error::Kind::domain, "modulus radius must lie in (0, 1]");
  Rational bound = fn_(radius);
  if (bound.sign() < 0)
    throw Error(Error::Kind::contract, "modulus bound must be nonnegative");
  auto [it, inserted] = queried_.emplace(radius, bound);
  if (!inserted && it->second != bound)
    throw Error(Error::Kind::contract, "modulus changed its value between queries");
  if (it != queried_.begin() && std::prev(it)->second > bound)
    throw Error(Error::Kind::contract, "modulus grows as the radius shrinks");
  if (auto next = std::next(it); next != queried_.end() && next->second < bound)
    throw Error(Error::Kind::contract, "modulus grows as the radius shrinks");
  return bound;
}

ApproxIntegral approximate_integral(const std::function<Rational(const Letters&)>& g,
                                    const ModulusFunction& omega, const Measure& mu,
                                    int m, const UltrametricParams& params,
                                    std::size_t budget) {
  if (m < 0)
    throw Error(Error::Kind::invalid_input, "approximation depth must be nonnegative");
  Rational value, total;
  for_each_word(measure_system(mu), m, [&](const Letters& w) {
    Rational mass = cylinder_mass(mu, Cylinder{w});
    value += g(w) * mass;
    total += mass;
  }, budget);
  if (total != Rational(1))
    throw Error(Error::Kind::domain, "approximate integral requires a probability measure");
  // Any two points of one depth-m cylinder are within ratio^m of each
  // other, so each sample is within omega(ratio^m) of the integrand there.
  return ApproxIntegral{std::move(value), omega.at(pow(params.ratio, m))};
}

}  // namespace cantor
