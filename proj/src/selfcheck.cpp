#include "cantor/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "cantor/algebra.hpp"
#include "cantor/coding.hpp"
#include "cantor/core_space.hpp"
#include "cantor/dynamics.hpp"
#include "cantor/errors.hpp"
#include "cantor/integration.hpp"
#include "cantor/measure.hpp"
#include "cantor/metric.hpp"

namespace cantor::selfcheck {

namespace {

using Rng = std::mt19937;

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Letters random_letters(Rng& rng, int alphabet_size, int len) {
  Letters out(static_cast<std::size_t>(len));
  for (auto& s : out) s = rand_int(rng, 0, alphabet_size - 1);
  return out;
}

SequenceDescriptor random_descriptor(Rng& rng, int alphabet_size, int max_len = 4) {
  return SequenceDescriptor(random_letters(rng, alphabet_size, rand_int(rng, 0, max_len)),
                            random_letters(rng, alphabet_size, rand_int(rng, 1, max_len)));
}

Rational random_rational(Rng& rng, int lo = -5, int hi = 5, int max_den = 6) {
  return Rational(rand_int(rng, lo, hi), rand_int(rng, 1, max_den));
}

// Random consistent probability tree: each parent's mass is split among
// children by random integer proportions.
TreeMeasure random_tree(Rng& rng, const LevelSystem& system, int depth) {
  TreeMeasure::Masses masses(static_cast<std::size_t>(depth) + 1);
  masses[0][{}] = Rational(1);
  for (int d = 0; d < depth; ++d) {
    for (const auto& [word, parent_mass] : masses[static_cast<std::size_t>(d)]) {
      int n = system.alphabet_at(d + 1).size();
      std::vector<int> parts(static_cast<std::size_t>(n));
      int total = 0;
      for (auto& p : parts) total += (p = rand_int(rng, 0, 6));
      if (total == 0) {
        parts[0] = 1;
        total = 1;
      }
      for (Symbol s = 0; s < n; ++s) {
        Letters child = word;
        child.push_back(s);
        masses[static_cast<std::size_t>(d + 1)][std::move(child)] =
            parent_mass * Rational(parts[static_cast<std::size_t>(s)], total);
      }
    }
  }
  return TreeMeasure(system, std::move(masses));
}

struct Runner {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<void()>& body) {
    CheckResult r;
    r.name = name;
    try {
      body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

void expect(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

// ---- core_space ----------------------------------------------------------

void check_children_partition() {
  for (int alphabet_size : {2, 3}) {
    LevelSystem system = LevelSystem::homogeneous(
        Alphabet::from_chars(std::string("0123").substr(0, static_cast<std::size_t>(alphabet_size))));
    for (int depth = 0; depth <= 3; ++depth) {
      for (const Letters& w : words_at_depth(system, depth)) {
        Cylinder c{w};
        auto children = cylinder_children(system, c);
        expect(static_cast<int>(children.size()) == alphabet_size, "child count != |E|");
        // Every depth+1 word lies in exactly one child iff it extends c.
        for (const Letters& ext : words_at_depth(system, depth + 1)) {
          SequenceDescriptor point(ext, {0});
          int hits = 0;
          for (const auto& child : children)
            if (cylinder_contains(child, point)) ++hits;
          expect(hits == (cylinder_contains(c, point) ? 1 : 0), "children do not partition");
        }
      }
    }
  }
}

void check_descriptor_equivalence(Rng& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    SequenceDescriptor x = random_descriptor(rng, 2);
    SequenceDescriptor y = random_descriptor(rng, 2);
    SequenceDescriptor z = random_descriptor(rng, 2);
    expect(descriptor_equal(x, x), "reflexivity");
    expect(descriptor_equal(x, y) == descriptor_equal(y, x), "symmetry");
    if (descriptor_equal(x, y) && descriptor_equal(y, z))
      expect(descriptor_equal(x, z), "transitivity");
  }
  // Engineered equal pair: unrolled period vs doubled period.
  expect(descriptor_equal(SequenceDescriptor({}, {0, 1}),
                          SequenceDescriptor({0}, {1, 0})),
         "unrolled representations should be equal");
}

void check_disjointify(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Cylinder> cover;
    int n = rand_int(rng, 0, 4);
    for (int i = 0; i < n; ++i)
      cover.push_back(Cylinder{random_letters(rng, 2, rand_int(rng, 0, 4))});
    auto flat = disjointify(system, cover);
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t k = i + 1; k < flat.size(); ++k)
        expect(!(flat[i] == flat[k]), "disjointify left duplicates");
    // Membership in the union is preserved.
    for (int probe = 0; probe < 20; ++probe) {
      SequenceDescriptor x = random_descriptor(rng, 2);
      bool in_cover = std::any_of(cover.begin(), cover.end(),
                                  [&](const Cylinder& c) { return cylinder_contains(c, x); });
      bool in_flat = std::any_of(flat.begin(), flat.end(),
                                 [&](const Cylinder& c) { return cylinder_contains(c, x); });
      expect(in_cover == in_flat, "disjointify changed the union");
    }
  }
}

void check_pigeonhole(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int trial = 0; trial < 50; ++trial) {
    int n = rand_int(rng, 1, 40);
    int m = rand_int(rng, 1, 5);
    int d = rand_int(rng, 0, m);
    std::vector<Letters> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) points.push_back(random_letters(rng, 2, m));
    auto cluster = pigeonhole_cluster(points, d);
    std::size_t cells = *count_words_at_depth(system, d);
    std::size_t bound = (static_cast<std::size_t>(n) + cells - 1) / cells;
    expect(cluster.indices.size() >= bound, "pigeonhole bound violated");
    for (std::size_t idx : cluster.indices)
      expect(std::equal(cluster.prefix.symbols.begin(), cluster.prefix.symbols.end(),
                        points[idx].begin()),
             "clustered point does not match the prefix");
  }
}

// ---- coding --------------------------------------------------------------

void check_stage_cylinder_match() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int m = 0; m <= 8; ++m) {
    auto stages = stage_intervals(m);
    auto words = words_at_depth(system, m);
    expect(stages.size() == words.size(), "stage count mismatch");
    for (std::size_t i = 0; i < words.size(); ++i)
      expect(cylinder_interval(words[i]) == stages[i], "cylinder image != stage interval");
  }
}

void check_tau_round_trip() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int pre_len = 0; pre_len <= 3; ++pre_len)
    for (int per_len = 1; per_len <= 3; ++per_len)
      for (const Letters& pre : words_at_depth(system, pre_len))
        for (const Letters& per : words_at_depth(system, per_len)) {
          SequenceDescriptor x(pre, per);
          auto back = tau_decode(tau(x));
          expect(back.has_value(), "tau image must decode");
          expect(descriptor_equal(*back, x), "tau round trip changed the point");
        }
}

void check_beta_round_trip(Rng& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    long den = rand_int(rng, 1, 10000);
    long num = rand_int(rng, 0, static_cast<int>(den));
    Rational q(num, den);
    expect(beta(beta_decode(q)) == q, "beta round trip changed the value");
  }
}

void check_coding_monotone() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  Rational prev_tau(-1), prev_beta(-1);
  for (const Letters& w : words_at_depth(system, 8)) {
    SequenceDescriptor x(w, {0});
    Rational t = tau(x), b = beta(x);
    expect(prev_tau < t, "tau not increasing in lexicographic order");
    expect(prev_beta < b, "beta not increasing in lexicographic order");
    prev_tau = t;
    prev_beta = b;
  }
}

void check_beta_dyadic_duality() {
  for (int m = 1; m <= 8; ++m) {
    for (long k = 1; k < (1L << m); k += 2) {
      Rational q(k, 1L << m);
      SequenceDescriptor canonical = beta_decode(q);
      // The other expansion flips the final 1 to 0 followed by all ones.
      Letters flipped = canonical.prefix(m);
      expect(flipped.back() == 1, "canonical dyadic expansion must end in 1");
      flipped.back() = 0;
      SequenceDescriptor other(flipped, {1});
      expect(beta(canonical) == q && beta(other) == q, "both expansions must hit q");
      expect(!descriptor_equal(canonical, other), "expansions must differ as points");
      expect(descriptor_equal(canonical, SequenceDescriptor(canonical.prefix(m), {0})),
             "canonical expansion must be eventually zero");
    }
  }
}

// ---- metric ----------------------------------------------------------------

void check_ultrametric(Rng& rng) {
  UltrametricParams p;
  for (int trial = 0; trial < 2000; ++trial) {
    SequenceDescriptor x = random_descriptor(rng, 2);
    SequenceDescriptor y = random_descriptor(rng, 2);
    SequenceDescriptor z = random_descriptor(rng, 2);
    Rational xy = distance(x, y, p), yz = distance(y, z, p), xz = distance(x, z, p);
    expect(xz <= std::max(xy, yz), "ultrametric inequality violated");
    expect(xy == distance(y, x, p), "distance not symmetric");
    expect((xy == Rational(0)) == descriptor_equal(x, y), "identity of indiscernibles");
  }
}

void check_ball_cylinder() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  UltrametricParams p;
  auto words = words_at_depth(system, 4);
  for (const Letters& cw : words) {
    SequenceDescriptor center(cw, {0});
    for (int m = 0; m <= 4; ++m) {
      Cylinder ball = ball_to_cylinder(center, m);
      for (const Letters& yw : words) {
        SequenceDescriptor y(yw, {0});
        bool in_ball = distance(center, y, p) <= pow(p.ratio, m);
        expect(in_ball == cylinder_contains(ball, y), "ball != cylinder");
      }
    }
  }
}

void check_ratio_order(Rng& rng) {
  UltrametricParams half = UltrametricParams::with_ratio(Rational(1, 2));
  UltrametricParams third = UltrametricParams::with_ratio(Rational(1, 3));
  for (int trial = 0; trial < 300; ++trial) {
    SequenceDescriptor a = random_descriptor(rng, 2), b = random_descriptor(rng, 2);
    SequenceDescriptor c = random_descriptor(rng, 2), d = random_descriptor(rng, 2);
    bool lt_half = distance(a, b, half) < distance(c, d, half);
    bool lt_third = distance(a, b, third) < distance(c, d, third);
    expect(lt_half == lt_third, "metrics with different ratios disagree on order");
  }
}

// ---- algebra / dynamics ----------------------------------------------------

void check_table_verdicts() {
  auto z2 = validate_op_table(OpTable::xor2());
  expect(z2.associative && z2.has_identity && z2.is_group && z2.identity == Symbol{0},
         "Z/2 verdict wrong");
  auto z3 = validate_op_table(OpTable::cyclic(3));
  expect(z3.associative && z3.is_group, "Z/3 verdict wrong");

  OpTable left_projection(Alphabet::binary(), {{0, 0}, {1, 1}});
  auto lp = validate_op_table(left_projection);
  expect(lp.associative && !lp.has_identity && !lp.is_group, "left projection verdict wrong");

  OpTable broken(Alphabet::binary(), {{0, 1}, {1, 1}});
  auto br = validate_op_table(broken);
  expect(!br.associative && br.failing_triple.has_value(), "broken table verdict wrong");
}

void check_termwise_laws(Rng& rng) {
  TermwiseStructure z3(OpTable::cyclic(3));
  SequenceDescriptor identity = SequenceDescriptor::constant(0);
  for (int trial = 0; trial < 100; ++trial) {
    SequenceDescriptor x = random_descriptor(rng, 3);
    SequenceDescriptor y = random_descriptor(rng, 3);
    SequenceDescriptor z = random_descriptor(rng, 3);
    expect(descriptor_equal(termwise_op(identity, x, z3), x), "identity law");
    expect(descriptor_equal(termwise_op(termwise_op(x, y, z3), z, z3),
                            termwise_op(x, termwise_op(y, z, z3), z3)),
           "associativity lifted termwise");
    expect(descriptor_equal(termwise_op(x, termwise_inverse(x, z3), z3), identity),
           "inverse law");
  }
}

void check_locality() {
  for (int n : {2, 3}) {
    TermwiseStructure s(OpTable::cyclic(n));
    for (int m = 0; m <= 3; ++m)
      expect(locality_check(s, m), "termwise operation not local");
  }
}

void check_shifts(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int trial = 0; trial < 100; ++trial) {
    SequenceDescriptor y = random_descriptor(rng, 2);
    auto pres = shift_preimages(system, y);
    expect(pres.size() == 2, "preimage count != |E|");
    for (const auto& p : pres)
      expect(descriptor_equal(shift_one_sided(system, p), y), "preimage does not shift back");
  }
  for (int trial = 0; trial < 100; ++trial) {
    BiSequenceDescriptor x(random_letters(rng, 2, rand_int(rng, 1, 3)),
                           random_letters(rng, 2, rand_int(rng, 0, 3)),
                           random_letters(rng, 2, rand_int(rng, 1, 3)),
                           rand_int(rng, -3, 3));
    expect(unshift_two_sided(shift_two_sided(x)) == x, "unshift(shift) != id");
    expect(shift_two_sided(unshift_two_sided(x)) == x, "shift(unshift) != id");
  }
}

void check_orbits() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  // Pure periodic points cycle with the primitive period of the word.
  for (int per_len = 1; per_len <= 5; ++per_len) {
    for (const Letters& w : words_at_depth(system, per_len)) {
      int primitive = per_len;
      for (int d = 1; d < per_len; ++d) {
        if (per_len % d != 0) continue;
        bool repeats = true;
        for (int i = 0; i < per_len && repeats; ++i)
          repeats = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i % d)];
        if (repeats) { primitive = d; break; }
      }
      Orbit result = orbit(system, SequenceDescriptor({}, w), 2 * per_len + 2);
      expect(result.cycle.has_value() && *result.cycle == primitive, "orbit cycle length");
      expect(*result.preperiod == 0, "pure period should have no orbit preperiod");
    }
  }
  Orbit tail = orbit(system, SequenceDescriptor({1, 1, 1}, {0}), 10);
  expect(tail.preperiod == 3 && tail.cycle == 1, "orbit preperiod detection");
}

// ---- measure ---------------------------------------------------------------

void check_product_tree_consistency() {
  for (int n : {2, 3}) {
    LevelSystem system = LevelSystem::homogeneous(
        Alphabet::from_chars(std::string("0123").substr(0, static_cast<std::size_t>(n))));
    expect(check_consistency(product_to_tree(ProductMeasure::uniform(system), 4)).ok(),
           "uniform product tree inconsistent");
  }
  expect(check_consistency(product_to_tree(ProductMeasure::iid_binary(Rational(1, 3)), 5)).ok(),
         "Bernoulli(1/3) tree inconsistent");
}

void check_perturbation_detected() {
  TreeMeasure tree = product_to_tree(ProductMeasure::iid_binary(Rational(1, 2)), 4);
  Letters node{0, 1, 0};
  TreeMeasure broken = tree.with_mass(node, tree.mass(node) + Rational(1, 1000));
  auto report = check_consistency(broken);
  // Exactly the perturbed node's parent fails, plus the node itself (its
  // own children no longer sum to the new mass).
  expect(report.violations.size() == 2, "wrong violation count");
  expect(report.violations[0] == Letters({0, 1}), "parent of perturbed node not reported");
  expect(report.violations[1] == node, "perturbed node not reported");
}

void check_clopen_invariance(Rng& rng) {
  Measure mu = ProductMeasure::iid_binary(Rational(1, 3));
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Cylinder> cover;
    int n = rand_int(rng, 1, 4);
    for (int i = 0; i < n; ++i)
      cover.push_back(Cylinder{random_letters(rng, 2, rand_int(rng, 0, 4))});
    // A redundant presentation: duplicate entries and split one cylinder
    // into its children.
    std::vector<Cylinder> redundant = cover;
    redundant.push_back(cover.front());
    for (const auto& child :
         cylinder_children(measure_system(mu), cover.back()))
      redundant.push_back(child);
    expect(clopen_mass(mu, cover) == clopen_mass(mu, redundant),
           "clopen mass depends on the presentation");
  }
}

void check_shift_invariance() {
  Measure mu = ProductMeasure::iid_binary(Rational(1, 3));
  const LevelSystem& system = measure_system(mu);
  for (int depth = 0; depth <= 4; ++depth) {
    for (const Letters& w : words_at_depth(system, depth)) {
      Rational direct = cylinder_mass(mu, Cylinder{w});
      Rational pulled;
      for (Symbol s = 0; s < 2; ++s) {
        Letters prepended;
        prepended.push_back(s);
        prepended.insert(prepended.end(), w.begin(), w.end());
        pulled += cylinder_mass(mu, Cylinder{prepended});
      }
      expect(pulled == direct, "i.i.d. measure not shift invariant");
    }
  }
}

void check_pushforward_uniform() {
  Measure mu = ProductMeasure::iid_binary(Rational(1, 2));
  for (int m = 0; m <= 8; ++m) {
    Rational expected = pow(Rational(1, 2), m);
    Rational lo(0);
    for (const auto& cell : pushforward_intervals(mu, CodingMapKind::beta, m)) {
      expect(cell.mass == expected, "beta pushforward mass != 2^-m");
      expect(cell.interval.lo == lo && cell.interval.length() == expected,
             "beta pushforward interval misplaced");
      lo = cell.interval.hi;
    }
  }
  for (int j = 0; j <= 6; ++j) {
    auto stages = stage_intervals(j);
    auto cells = pushforward_intervals(mu, CodingMapKind::tau, j);
    expect(cells.size() == stages.size(), "tau pushforward cell count");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      expect(cells[i].mass == pow(Rational(1, 2), j), "tau pushforward mass != 2^-j");
      expect(cells[i].interval == stages[i], "tau pushforward interval != stage interval");
    }
  }
}

// ---- integration -----------------------------------------------------------

StepFunction random_step(Rng& rng, const LevelSystem& system, int depth) {
  std::map<Letters, Rational> values;
  for (const Letters& w : words_at_depth(system, depth))
    values.emplace(w, random_rational(rng));
  return StepFunction(system, depth, std::move(values));
}

void check_integration_linearity(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  Measure mu = ProductMeasure::iid_binary(Rational(1, 3));
  for (int trial = 0; trial < 40; ++trial) {
    StepFunction f = random_step(rng, system, rand_int(rng, 0, 4));
    StepFunction g = random_step(rng, system, rand_int(rng, 0, 4));
    Rational a = random_rational(rng), b = random_rational(rng);
    Rational lhs = integrate_step(add_step(scale_step(a, f), scale_step(b, g)), mu);
    Rational rhs = a * integrate_step(f, mu) + b * integrate_step(g, mu);
    expect(lhs == rhs, "integral not linear");
  }
}

void check_partition_of_unity() {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  Measure mu = ProductMeasure::iid_binary(Rational(2, 5));
  for (int m = 0; m <= 5; ++m) {
    Rational sum;
    for (const Letters& w : words_at_depth(system, m))
      sum += integrate_step(indicator(system, Cylinder{w}, m), mu);
    expect(sum == Rational(1), "indicators do not sum to the total mass");
  }
}

void check_refinement_invariance(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  Measure mu = ProductMeasure::iid_binary(Rational(1, 4));
  for (int trial = 0; trial < 30; ++trial) {
    StepFunction f = random_step(rng, system, rand_int(rng, 0, 3));
    int d = f.depth() + rand_int(rng, 0, 3);
    expect(integrate_step(refine_step(f, d), mu) == integrate_step(f, mu),
           "integral changed under refinement");
  }
}

void check_functional_round_trip(Rng& rng) {
  LevelSystem system = LevelSystem::homogeneous(Alphabet::binary());
  for (int trial = 0; trial < 15; ++trial) {
    TreeMeasure mu = random_tree(rng, system, 3);
    Measure wrapped = mu;
    auto functional = [&](const StepFunction& f) { return integrate_step(f, wrapped); };
    TreeMeasure rebuilt = measure_from_functional(functional, system, 3);
    for (int d = 0; d <= 3; ++d)
      for (const auto& [word, mass] : mu.layer(d))
        expect(rebuilt.mass(word) == mass, "functional round trip changed a mass");
  }
}

void check_approx_beta() {
  Measure mu = ProductMeasure::iid_binary(Rational(1, 2));
  ModulusFunction omega = ModulusFunction::identity();
  for (int m = 1; m <= 6; ++m) {
    auto g = [](const Letters& w) { return beta(SequenceDescriptor(w, {0})); };
    ApproxIntegral approx = approximate_integral(g, omega, mu, m);
    Rational expected = Rational(1, 2) - pow(Rational(1, 2), m + 1);
    expect(approx.value == expected, "approximate beta mean wrong");
    expect(approx.error_bound == pow(Rational(1, 2), m), "approximation bound wrong");
    expect(abs(approx.value - Rational(1, 2)) <= approx.error_bound,
           "bound does not cover the exact mean");
  }
}

}  // namespace

std::vector<CheckResult> run_all(unsigned seed) {
  Rng rng(seed);
  Runner runner;

  runner.run("core.children_partition", [] { check_children_partition(); });
  runner.run("core.descriptor_equal_equivalence", [&] { check_descriptor_equivalence(rng); });
  runner.run("core.disjointify_union", [&] { check_disjointify(rng); });
  runner.run("core.pigeonhole_bound", [&] { check_pigeonhole(rng); });
  runner.run("coding.stage_cylinder_match", [] { check_stage_cylinder_match(); });
  runner.run("coding.tau_round_trip", [] { check_tau_round_trip(); });
  runner.run("coding.beta_round_trip", [&] { check_beta_round_trip(rng); });
  runner.run("coding.monotone", [] { check_coding_monotone(); });
  runner.run("coding.beta_dyadic_duality", [] { check_beta_dyadic_duality(); });
  runner.run("metric.ultrametric_inequality", [&] { check_ultrametric(rng); });
  runner.run("metric.ball_cylinder_equivalence", [] { check_ball_cylinder(); });
  runner.run("metric.ratio_order_equivalence", [&] { check_ratio_order(rng); });
  runner.run("algebra.table_verdicts", [] { check_table_verdicts(); });
  runner.run("algebra.termwise_laws", [&] { check_termwise_laws(rng); });
  runner.run("algebra.locality", [] { check_locality(); });
  runner.run("dynamics.shifts", [&] { check_shifts(rng); });
  runner.run("dynamics.orbit_cycles", [] { check_orbits(); });
  runner.run("measure.product_tree_consistency", [] { check_product_tree_consistency(); });
  runner.run("measure.perturbation_detected", [] { check_perturbation_detected(); });
  runner.run("measure.clopen_presentation_invariance", [&] { check_clopen_invariance(rng); });
  runner.run("measure.shift_invariance", [] { check_shift_invariance(); });
  runner.run("measure.pushforward_uniform", [] { check_pushforward_uniform(); });
  runner.run("integration.linearity", [&] { check_integration_linearity(rng); });
  runner.run("integration.partition_of_unity", [] { check_partition_of_unity(); });
  runner.run("integration.refinement_invariance", [&] { check_refinement_invariance(rng); });
  runner.run("integration.functional_round_trip", [&] { check_functional_round_trip(rng); });
  runner.run("integration.approximation_soundness", [] { check_approx_beta(); });

  return runner.results;
}

}  // namespace cantor::selfcheck
