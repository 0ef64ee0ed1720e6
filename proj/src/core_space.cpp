#include "cantor/core_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

long long lcm_ll(std::size_t a, std::size_t b) {
  return std::lcm(static_cast<long long>(a), static_cast<long long>(b));
}

}  // namespace

SequenceDescriptor::SequenceDescriptor(Letters preperiod, Letters period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty())
    throw Error(Error::Kind::invalid_input, "descriptor period must be non-empty");
}

SequenceDescriptor::SequenceDescriptor(const LevelSystem& system, Letters preperiod,
                                       Letters period)
    : SequenceDescriptor(std::move(preperiod), std::move(period)) {
  validate(system, *this);
}

Symbol SequenceDescriptor::symbol_at(int level) const {
  if (level < 1)
    throw Error(Error::Kind::invalid_input, "levels are 1-indexed");
  std::size_t i = static_cast<std::size_t>(level - 1);
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Letters SequenceDescriptor::prefix(int depth) const {
  if (depth < 0)
    throw Error(Error::Kind::invalid_input, "prefix depth must be nonnegative");
  Letters out;
  out.reserve(static_cast<std::size_t>(depth));
  for (int l = 1; l <= depth; ++l) out.push_back(symbol_at(l));
  return out;
}

bool descriptor_equal(const SequenceDescriptor& x, const SequenceDescriptor& y) {
  // Two eventually periodic sequences agree everywhere iff they agree up to
  // both preperiods plus one joint period.
  long long bound = static_cast<long long>(x.preperiod().size()) +
                    static_cast<long long>(y.preperiod().size()) +
                    lcm_ll(x.period().size(), y.period().size());
  for (long long l = 1; l <= bound; ++l)
    if (x.symbol_at(static_cast<int>(l)) != y.symbol_at(static_cast<int>(l)))
      return false;
  return true;
}

bool operator==(const SequenceDescriptor& x, const SequenceDescriptor& y) {
  return descriptor_equal(x, y);
}

BiSequenceDescriptor::BiSequenceDescriptor(Letters left_period, Letters center,
                                           Letters right_period, int center_start)
    : left_period_(std::move(left_period)),
      center_(std::move(center)),
      right_period_(std::move(right_period)),
      center_start_(center_start) {
  if (left_period_.empty() || right_period_.empty())
    throw Error(Error::Kind::invalid_input,
                "two-sided descriptor periods must be non-empty");
}

Symbol BiSequenceDescriptor::symbol_at(int level) const {
  if (level < center_start_) {
    // Tile the left period so its last symbol sits just left of the center.
    long long k = static_cast<long long>(center_start_) - 1 - level;  // k >= 0
    std::size_t p = left_period_.size();
    return left_period_[p - 1 - static_cast<std::size_t>(k % static_cast<long long>(p))];
  }
  std::size_t i = static_cast<std::size_t>(level - center_start_);
  if (i < center_.size()) return center_[i];
  return right_period_[(i - center_.size()) % right_period_.size()];
}

bool operator==(const BiSequenceDescriptor& x, const BiSequenceDescriptor& y) {
  int lo = std::min(x.center_start(), y.center_start());
  int hi = std::max(x.center_end(), y.center_end());
  long long left = lcm_ll(x.left_period().size(), y.left_period().size());
  long long right = lcm_ll(x.right_period().size(), y.right_period().size());
  for (long long l = lo - left; l <= hi + right; ++l)
    if (x.symbol_at(static_cast<int>(l)) != y.symbol_at(static_cast<int>(l)))
      return false;
  return true;
}

void validate(const LevelSystem& system, const Word& w) {
  if (w.start_level < 1)
    throw Error(Error::Kind::invalid_input, "word start level must be >= 1");
  for (int i = 0; i < w.length(); ++i)
    if (!system.alphabet_at(w.start_level + i).contains(w.symbols[static_cast<std::size_t>(i)]))
      throw Error(Error::Kind::invalid_input, "word symbol outside its level's alphabet");
}

void validate(const LevelSystem& system, const Cylinder& c) {
  validate(system, Word{1, c.prefix});
}

void validate(const LevelSystem& system, const SequenceDescriptor& x) {
  // The symbol stream and the alphabet stream are both eventually periodic;
  // checking through one joint cycle beyond both preperiods covers every
  // (period position, cycle position) pair that ever occurs.
  long long pre = std::max<long long>(static_cast<long long>(x.preperiod().size()),
                                      system.preperiod_length());
  long long joint = lcm_ll(x.period().size(), static_cast<std::size_t>(system.cycle_length()));
  for (long long l = 1; l <= pre + joint; ++l)
    if (!system.alphabet_at(static_cast<int>(l)).contains(x.symbol_at(static_cast<int>(l))))
      throw Error(Error::Kind::invalid_input,
                  "descriptor symbol outside its level's alphabet");
}

void validate(const Alphabet& alphabet, const BiSequenceDescriptor& x) {
  auto check = [&](const Letters& w) {
    for (Symbol s : w)
      if (!alphabet.contains(s))
        throw Error(Error::Kind::invalid_input,
                    "two-sided descriptor symbol outside the alphabet");
  };
  check(x.left_period());
  check(x.center());
  check(x.right_period());
}

bool cylinder_contains(const Cylinder& c, const SequenceDescriptor& x) {
  for (int l = 1; l <= c.depth(); ++l)
    if (x.symbol_at(l) != c.prefix[static_cast<std::size_t>(l - 1)]) return false;
  return true;
}

std::vector<Cylinder> cylinder_children(const LevelSystem& system, const Cylinder& c) {
  const Alphabet& next = system.alphabet_at(c.depth() + 1);
  std::vector<Cylinder> children;
  children.reserve(static_cast<std::size_t>(next.size()));
  for (Symbol s = 0; s < next.size(); ++s) {
    Cylinder child = c;
    child.prefix.push_back(s);
    children.push_back(std::move(child));
  }
  return children;
}

std::vector<Cylinder> disjointify(const LevelSystem& system,
                                  const std::vector<Cylinder>& cylinders,
                                  std::size_t budget) {
  if (cylinders.empty()) return {};
  int max_depth = 0;
  for (const auto& c : cylinders) max_depth = std::max(max_depth, c.depth());

  std::vector<Cylinder> refined;
  for (const auto& c : cylinders) {
    std::vector<Cylinder> frontier{c};
    while (frontier.front().depth() < max_depth) {
      std::vector<Cylinder> next;
      for (const auto& f : frontier) {
        auto children = cylinder_children(system, f);
        next.insert(next.end(), children.begin(), children.end());
        if (next.size() + refined.size() > budget)
          throw Error(Error::Kind::budget, "disjointify exceeds the word budget");
      }
      frontier = std::move(next);
    }
    refined.insert(refined.end(), frontier.begin(), frontier.end());
  }
  std::sort(refined.begin(), refined.end());
  refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
  return refined;
}

PigeonholeCluster pigeonhole_cluster(const std::vector<Letters>& points,
                                     int target_depth) {
  if (points.empty())
    throw Error(Error::Kind::domain, "pigeonhole needs at least one point");
  std::size_t depth = points.front().size();
  for (const auto& p : points)
    if (p.size() != depth)
      throw Error(Error::Kind::invalid_input, "pigeonhole points must share one depth");
  if (target_depth < 0 || static_cast<std::size_t>(target_depth) > depth)
    throw Error(Error::Kind::domain, "target depth exceeds the points' depth");

  std::map<Letters, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Letters prefix(points[i].begin(), points[i].begin() + target_depth);
    groups[std::move(prefix)].push_back(i);
  }
  auto best = groups.begin();
  for (auto it = groups.begin(); it != groups.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  return PigeonholeCluster{Word{1, best->first}, best->second};
}

std::optional<std::size_t> count_words_at_depth(const LevelSystem& system, int depth,
                                                std::size_t budget) {
  if (depth < 0)
    throw Error(Error::Kind::invalid_input, "depth must be nonnegative");
  std::size_t count = 1;
  for (int l = 1; l <= depth; ++l) {
    std::size_t size = static_cast<std::size_t>(system.alphabet_at(l).size());
    if (count > budget / size) return std::nullopt;
    count *= size;
  }
  return count;
}

void for_each_word(const LevelSystem& system, int depth,
                   const std::function<void(const Letters&)>& fn,
                   std::size_t budget) {
  if (!count_words_at_depth(system, depth, budget))
    throw Error(Error::Kind::budget, "word enumeration exceeds the budget");
  Letters word(static_cast<std::size_t>(depth), 0);
  // Odometer over per-level alphabet sizes, least significant digit last,
  // which yields lexicographic order.
  while (true) {
    fn(word);
    int l = depth;
    while (l >= 1) {
      Symbol& s = word[static_cast<std::size_t>(l - 1)];
      if (++s < system.alphabet_at(l).size()) break;
      s = 0;
      --l;
    }
    if (l == 0) return;
  }
}

std::vector<Letters> words_at_depth(const LevelSystem& system, int depth,
                                    std::size_t budget) {
  std::vector<Letters> out;
  for_each_word(system, depth, [&](const Letters& w) { out.push_back(w); }, budget);
  return out;
}

}  // namespace cantor
