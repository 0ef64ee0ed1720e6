#include "cantor/measure.hpp"

#include <algorithm>
#include <numeric>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void check_mass_value(const Rational& r, const MeasureOptions& options) {
  if (r.sign() < 0)
    throw Error(Error::Kind::invalid_input, "measure masses must be nonnegative");
  if (options.require_positive && r.is_zero())
    throw Error(Error::Kind::invalid_input, "strict positivity requires nonzero masses");
}

void require_binary_levels(const LevelSystem& system, int depth) {
  for (int l = 1; l <= depth; ++l)
    if (system.alphabet_at(l).size() != 2)
      throw Error(Error::Kind::domain, "pushforward requires a binary alphabet");
}

}  // namespace

ProductMeasure::ProductMeasure(LevelSystem system, WeightRows cycle_rows,
                               MeasureOptions options)
    : ProductMeasure(std::move(system), WeightRows{}, std::move(cycle_rows), options) {}

ProductMeasure::ProductMeasure(LevelSystem system, WeightRows pre_rows,
                               WeightRows cycle_rows, MeasureOptions options)
    : system_(std::move(system)), pre_rows_(std::move(pre_rows)),
      cycle_rows_(std::move(cycle_rows)), options_(options) {
  if (cycle_rows_.empty())
    throw Error(Error::Kind::invalid_input, "product measure needs at least one weight row");
  auto note_totals = [&](const WeightRows& rows, std::vector<Rational>& totals) {
    totals.reserve(rows.size());
    for (const auto& row : rows) {
      Rational total;
      for (const auto& w : row) {
        check_mass_value(w, options_);
        total += w;
      }
      if (options_.require_probability && total != Rational(1))
        throw Error(Error::Kind::invalid_input, "probability measure level total must be 1");
      totals.push_back(std::move(total));
    }
  };
  note_totals(pre_rows_, pre_totals_);
  note_totals(cycle_rows_, cycle_totals_);
  // Row sizes must match alphabet sizes at every level; one joint cycle
  // past both preperiods witnesses every (row, alphabet) pairing.
  long long pre = std::max<long long>(static_cast<long long>(pre_rows_.size()),
                                      system_.preperiod_length());
  long long joint = std::lcm(static_cast<long long>(cycle_rows_.size()),
                             static_cast<long long>(system_.cycle_length()));
  for (long long l = 1; l <= pre + joint; ++l) {
    int level = static_cast<int>(l);
    if (static_cast<int>(row_at(level).size()) != system_.alphabet_at(level).size())
      throw Error(Error::Kind::invalid_input,
                  "weight row length must match the level's alphabet size");
  }
}

const std::vector<Rational>& ProductMeasure::row_at(int level) const {
  std::size_t i = static_cast<std::size_t>(level - 1);
  if (i < pre_rows_.size()) return pre_rows_[i];
  return cycle_rows_[(i - pre_rows_.size()) % cycle_rows_.size()];
}

ProductMeasure ProductMeasure::uniform(const LevelSystem& system) {
  auto uniform_row = [](int n) {
    return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n));
  };
  WeightRows pre, cycle;
  for (int l = 1; l <= system.preperiod_length(); ++l)
    pre.push_back(uniform_row(system.alphabet_at(l).size()));
  for (int i = 0; i < system.cycle_length(); ++i)
    cycle.push_back(uniform_row(system.alphabet_at(system.preperiod_length() + 1 + i).size()));
  MeasureOptions options;
  options.require_probability = true;
  return ProductMeasure(system, std::move(pre), std::move(cycle), options);
}

ProductMeasure ProductMeasure::iid_binary(Rational weight_of_one) {
  MeasureOptions options;
  options.require_probability = true;
  return ProductMeasure(LevelSystem::homogeneous(Alphabet::binary()),
                        {{Rational(1) - weight_of_one, std::move(weight_of_one)}}, options);
}

const Rational& ProductMeasure::weight(int level, Symbol s) const {
  if (level < 1)
    throw Error(Error::Kind::invalid_input, "levels are 1-indexed");
  const auto& row = row_at(level);
  if (s < 0 || static_cast<std::size_t>(s) >= row.size())
    throw Error(Error::Kind::invalid_input, "weight lookup outside alphabet");
  return row[static_cast<std::size_t>(s)];
}

const Rational& ProductMeasure::level_total(int level) const {
  if (level < 1)
    throw Error(Error::Kind::invalid_input, "levels are 1-indexed");
  std::size_t i = static_cast<std::size_t>(level - 1);
  if (i < pre_totals_.size()) return pre_totals_[i];
  return cycle_totals_[(i - pre_totals_.size()) % cycle_totals_.size()];
}

TreeMeasure::TreeMeasure(LevelSystem system, Masses masses, MeasureOptions options)
    : system_(std::move(system)), masses_(std::move(masses)), options_(options) {
  if (masses_.empty())
    throw Error(Error::Kind::invalid_input, "tree measure needs at least depth 0");
  for (int d = 0; d < static_cast<int>(masses_.size()); ++d) {
    auto expected = count_words_at_depth(system_, d);
    if (!expected || masses_[static_cast<std::size_t>(d)].size() != *expected)
      throw Error(Error::Kind::invalid_input,
                  "tree measure must assign a mass to every word of each depth");
    for (const auto& [word, r] : masses_[static_cast<std::size_t>(d)]) {
      if (static_cast<int>(word.size()) != d)
        throw Error(Error::Kind::invalid_input, "tree measure word filed at wrong depth");
      validate(system_, Word{1, word});
      check_mass_value(r, options_);
    }
  }
  if (options_.require_probability && total() != Rational(1))
    throw Error(Error::Kind::invalid_input, "probability tree must have total mass 1");
}

const Rational& TreeMeasure::mass(const Letters& word) const {
  if (static_cast<int>(word.size()) > depth())
    throw Error(Error::Kind::depth, "cylinder deeper than the measure's defined depth");
  const auto& layer = masses_[word.size()];
  auto it = layer.find(word);
  if (it == layer.end())
    throw Error(Error::Kind::invalid_input, "word outside the measure's level system");
  return it->second;
}

const std::map<Letters, Rational>& TreeMeasure::layer(int d) const {
  if (d < 0 || d > depth())
    throw Error(Error::Kind::depth, "layer outside the measure's defined depth");
  return masses_[static_cast<std::size_t>(d)];
}

TreeMeasure TreeMeasure::with_mass(const Letters& word, Rational value) const {
  if (static_cast<int>(word.size()) > depth())
    throw Error(Error::Kind::depth, "cylinder deeper than the measure's defined depth");
  Masses copy = masses_;
  auto it = copy[word.size()].find(word);
  if (it == copy[word.size()].end())
    throw Error(Error::Kind::invalid_input, "word outside the measure's level system");
  it->second = std::move(value);
  return TreeMeasure(system_, std::move(copy), MeasureOptions{});
}

FinitePointMeasure::FinitePointMeasure(LevelSystem system, int length,
                                       std::map<Letters, Rational> mass,
                                       MeasureOptions options)
    : system_(std::move(system)), length_(length), mass_(std::move(mass)),
      options_(options) {
  if (length_ < 0)
    throw Error(Error::Kind::invalid_input, "tuple length must be nonnegative");
  auto expected = count_words_at_depth(system_, length_);
  if (!expected || mass_.size() != *expected)
    throw Error(Error::Kind::invalid_input,
                "finite point measure must cover every tuple exactly once");
  Rational total;
  for (const auto& [word, r] : mass_) {
    if (static_cast<int>(word.size()) != length_)
      throw Error(Error::Kind::invalid_input, "tuple of wrong length");
    validate(system_, Word{1, word});
    check_mass_value(r, options_);
    total += r;
  }
  if (options_.require_probability && total != Rational(1))
    throw Error(Error::Kind::invalid_input, "probability measure must have total mass 1");
}

TreeMeasure FinitePointMeasure::to_tree() const {
  TreeMeasure::Masses masses(static_cast<std::size_t>(length_) + 1);
  masses[static_cast<std::size_t>(length_)] = mass_;
  for (int d = length_; d > 0; --d) {
    for (const auto& [word, r] : masses[static_cast<std::size_t>(d)]) {
      Letters parent(word.begin(), word.end() - 1);
      masses[static_cast<std::size_t>(d - 1)][std::move(parent)] += r;
    }
  }
  return TreeMeasure(system_, std::move(masses), options_);
}

const LevelSystem& measure_system(const Measure& mu) {
  return std::visit([](const auto& m) -> const LevelSystem& { return m.system(); }, mu);
}

Rational cylinder_mass(const ProductMeasure& mu, const Cylinder& c) {
  validate(mu.system(), c);
  Rational mass(1);
  for (int l = 1; l <= c.depth(); ++l)
    mass *= mu.weight(l, c.prefix[static_cast<std::size_t>(l - 1)]);
  return mass;
}

Rational cylinder_mass(const TreeMeasure& mu, const Cylinder& c) {
  validate(mu.system(), c);
  return mu.mass(c.prefix);
}

Rational cylinder_mass(const FinitePointMeasure& mu, const Cylinder& c) {
  validate(mu.system(), c);
  if (c.depth() > mu.length())
    throw Error(Error::Kind::depth, "cylinder deeper than the measure's defined depth");
  Rational sum;
  for (const auto& [word, r] : mu.masses())
    if (std::equal(c.prefix.begin(), c.prefix.end(), word.begin())) sum += r;
  return sum;
}

Rational cylinder_mass(const Measure& mu, const Cylinder& c) {
  return std::visit([&](const auto& m) { return cylinder_mass(m, c); }, mu);
}

ConsistencyReport check_consistency(const TreeMeasure& mu) {
  ConsistencyReport report;
  for (int d = 0; d < mu.depth(); ++d) {
    for (const auto& [word, r] : mu.layer(d)) {
      Rational child_sum;
      for (const auto& child : cylinder_children(mu.system(), Cylinder{word}))
        child_sum += mu.mass(child.prefix);
      if (child_sum != r) report.violations.push_back(word);
    }
  }
  return report;
}

TreeMeasure product_to_tree(const ProductMeasure& mu, int depth, std::size_t budget) {
  if (depth < 0)
    throw Error(Error::Kind::invalid_input, "depth must be nonnegative");
  TreeMeasure::Masses masses(static_cast<std::size_t>(depth) + 1);
  for (int d = 0; d <= depth; ++d)
    for_each_word(mu.system(), d, [&](const Letters& w) {
      masses[static_cast<std::size_t>(d)].emplace(w, cylinder_mass(mu, Cylinder{w}));
    }, budget);
  return TreeMeasure(mu.system(), std::move(masses));
}

Rational clopen_mass(const Measure& mu, const std::vector<Cylinder>& cylinders,
                     std::size_t budget) {
  Rational sum;
  for (const auto& c : disjointify(measure_system(mu), cylinders, budget))
    sum += cylinder_mass(mu, c);
  return sum;
}

void for_each_pushforward(const Measure& mu, CodingMapKind map, int m,
                          const std::function<void(const PushforwardCell&)>& fn,
                          std::size_t budget) {
  if (m < 0)
    throw Error(Error::Kind::invalid_input, "pushforward depth must be nonnegative");
  const LevelSystem& system = measure_system(mu);
  require_binary_levels(system, m);
  if (!count_words_at_depth(system, m, budget))
    throw Error(Error::Kind::budget, "pushforward enumeration exceeds the budget");

  Rational dyadic_step = pow(Rational(1, 2), m);
  std::size_t index = 0;
  auto emit = [&](const Letters& word, Rational mass) {
    PushforwardCell cell;
    cell.word = word;
    cell.mass = std::move(mass);
    if (map == CodingMapKind::tau) {
      cell.interval = cylinder_interval(word);
    } else {
      Rational lo = Rational(static_cast<long>(index)) * dyadic_step;
      cell.interval = Interval{lo, lo + dyadic_step};
    }
    ++index;
    fn(cell);
  };

  if (const auto* product = std::get_if<ProductMeasure>(&mu)) {
    // Depth-first with a running weight product: one multiplication per
    // tree node instead of m per leaf.
    Letters word;
    auto rec = [&](auto&& self, const Rational& mass_so_far) -> void {
      if (static_cast<int>(word.size()) == m) {
        emit(word, mass_so_far);
        return;
      }
      int level = static_cast<int>(word.size()) + 1;
      for (Symbol s = 0; s < 2; ++s) {
        word.push_back(s);
        self(self, mass_so_far * product->weight(level, s));
        word.pop_back();
      }
    };
    rec(rec, Rational(1));
    return;
  }

  for_each_word(system, m, [&](const Letters& w) {
    emit(w, cylinder_mass(mu, Cylinder{w}));
  }, budget);
}

std::vector<PushforwardCell> pushforward_intervals(const Measure& mu, CodingMapKind map,
                                                   int m, std::size_t budget) {
  std::vector<PushforwardCell> cells;
  for_each_pushforward(mu, map, m, [&](const PushforwardCell& c) { cells.push_back(c); },
                       budget);
  return cells;
}

}  // namespace cantor
