#pragma once

#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "cantor/coding.hpp"
#include "cantor/core_space.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct MeasureOptions {
  bool require_probability = false;  // total mass (per level, for products) = 1
  bool require_positive = false;     // strictly positive masses
};

/*
 * Product (Bernoulli) measure: one weight per symbol per level, cycled like
 * a LevelSystem, so a single row gives an i.i.d. measure. The mass of a
 * depth-m cylinder is the product of the weights along its prefix; the
 * depth-0 cylinder has mass 1 (empty product). Per-level totals are
 * recorded at construction; cylinder masses agree with the infinite
 * product measure exactly when every level total is 1.
 */
class ProductMeasure {
public:
  using WeightRows = std::vector<std::vector<Rational>>;

  // Cycle rows repeat from level 1 on; a single row is an i.i.d. measure.
  ProductMeasure(LevelSystem system, WeightRows cycle_rows, MeasureOptions options = {});
  // Rows for levels 1..|pre| first, then cycling rows — mirroring how a
  // staged LevelSystem assigns alphabets.
  ProductMeasure(LevelSystem system, WeightRows pre_rows, WeightRows cycle_rows,
                 MeasureOptions options = {});

  static ProductMeasure uniform(const LevelSystem& system);
  static ProductMeasure iid_binary(Rational weight_of_one);

  const LevelSystem& system() const { return system_; }
  const Rational& weight(int level, Symbol s) const;
  const Rational& level_total(int level) const;
  const MeasureOptions& options() const { return options_; }
  const WeightRows& pre_rows() const { return pre_rows_; }
  const WeightRows& cycle_rows() const { return cycle_rows_; }

private:
  const std::vector<Rational>& row_at(int level) const;

  LevelSystem system_;
  WeightRows pre_rows_;
  WeightRows cycle_rows_;
  std::vector<Rational> pre_totals_;
  std::vector<Rational> cycle_totals_;
  MeasureOptions options_;
};

/*
 * Explicit measure tree: a mass for every word of depth <= D, all depths
 * stored redundantly so Kolmogorov consistency (children sum to parent) is
 * a checkable property of the data rather than an assumption. Construction
 * validates totality and nonnegativity but deliberately not consistency —
 * that is check_consistency's job.
 */
class TreeMeasure {
public:
  using Masses = std::vector<std::map<Letters, Rational>>;  // index = depth

  TreeMeasure(LevelSystem system, Masses masses, MeasureOptions options = {});

  const LevelSystem& system() const { return system_; }
  int depth() const { return static_cast<int>(masses_.size()) - 1; }
  const Rational& mass(const Letters& word) const;  // throws Error{depth} beyond D
  const Rational& total() const { return masses_[0].begin()->second; }
  const std::map<Letters, Rational>& layer(int d) const;
  const MeasureOptions& options() const { return options_; }

  // Copy with one mass replaced; used to study consistency violations.
  TreeMeasure with_mass(const Letters& word, Rational value) const;

private:
  LevelSystem system_;
  Masses masses_;
  MeasureOptions options_;
};

/*
 * Measure on the finite product of the first n alphabets: a nonnegative
 * mass for every n-tuple.
 */
class FinitePointMeasure {
public:
  FinitePointMeasure(LevelSystem system, int length, std::map<Letters, Rational> mass,
                     MeasureOptions options = {});

  const LevelSystem& system() const { return system_; }
  int length() const { return length_; }
  const std::map<Letters, Rational>& masses() const { return mass_; }
  const MeasureOptions& options() const { return options_; }

  // Marginal tree of depth `length`: mass of a shorter word is the sum over
  // its completions. Always passes check_consistency by construction.
  TreeMeasure to_tree() const;

private:
  LevelSystem system_;
  int length_;
  std::map<Letters, Rational> mass_;
  MeasureOptions options_;
};

using Measure = std::variant<ProductMeasure, TreeMeasure, FinitePointMeasure>;

const LevelSystem& measure_system(const Measure& mu);

// Mass of the cylinder: weight product (product measures), table lookup
// (trees, throwing Error{depth} past the defined depth), or marginal sum
// (finite point measures).
Rational cylinder_mass(const ProductMeasure& mu, const Cylinder& c);
Rational cylinder_mass(const TreeMeasure& mu, const Cylinder& c);
Rational cylinder_mass(const FinitePointMeasure& mu, const Cylinder& c);
Rational cylinder_mass(const Measure& mu, const Cylinder& c);

struct ConsistencyReport {
  // Internal words whose children's masses do not sum to the word's mass.
  std::vector<Letters> violations;
  bool ok() const { return violations.empty(); }
};

ConsistencyReport check_consistency(const TreeMeasure& mu);

// Materializes the cylinder masses of a product measure as a depth-D tree.
TreeMeasure product_to_tree(const ProductMeasure& mu, int depth,
                            std::size_t budget = kDefaultWordBudget);

// Mass of a finite union of cylinders: disjointify, then sum. Independent
// of how the union is presented.
Rational clopen_mass(const Measure& mu, const std::vector<Cylinder>& cylinders,
                     std::size_t budget = kDefaultWordBudget);

enum class CodingMapKind { tau, beta };

struct PushforwardCell {
  Letters word;
  Interval interval;
  Rational mass;
};

/*
 * Pushforward of a measure on binary sequences through a coding map, at
 * resolution m: each depth-m word contributes its cylinder's mass, placed
 * on the stage-m Cantor interval (tau) or on the dyadic interval
 * [k/2^m, (k+1)/2^m] where k is the word read as binary (beta). Cells are
 * visited in lexicographic word order.
 */
void for_each_pushforward(const Measure& mu, CodingMapKind map, int m,
                          const std::function<void(const PushforwardCell&)>& fn,
                          std::size_t budget = kDefaultWordBudget);

std::vector<PushforwardCell> pushforward_intervals(const Measure& mu, CodingMapKind map,
                                                   int m,
                                                   std::size_t budget = kDefaultWordBudget);

}  // namespace cantor
