#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cantor/alphabet.hpp"

namespace cantor {

// Default cap on the number of words any single enumeration may touch.
// Exceeding it throws Error{budget}; it is never truncated silently.
inline constexpr std::size_t kDefaultWordBudget = std::size_t{1} << 20;

using Letters = std::vector<Symbol>;

// A finite block of symbols, entry i living at level start_level + i.
struct Word {
  int start_level = 1;
  Letters symbols;

  int length() const { return static_cast<int>(symbols.size()); }
  friend bool operator==(const Word&, const Word&) = default;
};

// Depth-m standard neighborhood: all sequences extending `prefix` (levels
// 1..m). Depth 0 is the whole space.
struct Cylinder {
  Letters prefix;

  int depth() const { return static_cast<int>(prefix.size()); }
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

/*
 * Eventually periodic point of the sequence space: the preperiod word at
 * levels 1..|pre|, then the period word cycled forever. The period must be
 * non-empty. Descriptors are immutable values; equality as points is
 * decidable (see descriptor_equal).
 */
class SequenceDescriptor {
public:
  SequenceDescriptor(Letters preperiod, Letters period);
  // Also validates every symbol against its level's alphabet, including
  // period recurrences in inhomogeneous systems.
  SequenceDescriptor(const LevelSystem& system, Letters preperiod, Letters period);

  static SequenceDescriptor constant(Symbol s) { return {{}, {s}}; }

  Symbol symbol_at(int level) const;  // level >= 1
  const Letters& preperiod() const { return preperiod_; }
  const Letters& period() const { return period_; }

  Letters prefix(int depth) const;  // first `depth` symbols

  // Equality as points of the space (termwise agreement at every level).
  friend bool operator==(const SequenceDescriptor& x, const SequenceDescriptor& y);

private:
  Letters preperiod_;
  Letters period_;
};

bool descriptor_equal(const SequenceDescriptor& x, const SequenceDescriptor& y);

/*
 * Finitely described doubly-infinite sequence over a single alphabet:
 * left_period tiled toward -inf, the center block starting at level
 * center_start, then right_period tiled toward +inf. The center may be
 * empty, in which case left and right tails meet at center_start.
 */
class BiSequenceDescriptor {
public:
  BiSequenceDescriptor(Letters left_period, Letters center, Letters right_period,
                       int center_start);

  Symbol symbol_at(int level) const;  // any integer level
  const Letters& left_period() const { return left_period_; }
  const Letters& center() const { return center_; }
  const Letters& right_period() const { return right_period_; }
  int center_start() const { return center_start_; }
  int center_end() const { return center_start_ + static_cast<int>(center_.size()) - 1; }

  // Equality as points, decided on a window covering both centers plus one
  // joint period on each side.
  friend bool operator==(const BiSequenceDescriptor& x, const BiSequenceDescriptor& y);

private:
  Letters left_period_;
  Letters center_;
  Letters right_period_;
  int center_start_;
};

// Validation against a level system; all throw Error{invalid_input}.
void validate(const LevelSystem& system, const Word& w);
void validate(const LevelSystem& system, const Cylinder& c);
void validate(const LevelSystem& system, const SequenceDescriptor& x);
void validate(const Alphabet& alphabet, const BiSequenceDescriptor& x);

// True iff x agrees with c's prefix on levels 1..depth.
bool cylinder_contains(const Cylinder& c, const SequenceDescriptor& x);

// One child per symbol of the level-(depth+1) alphabet, in symbol order.
std::vector<Cylinder> cylinder_children(const LevelSystem& system, const Cylinder& c);

// Pairwise-disjoint cylinders at the maximum input depth with the same
// union, obtained by refining every input and deduplicating.
std::vector<Cylinder> disjointify(const LevelSystem& system,
                                  const std::vector<Cylinder>& cylinders,
                                  std::size_t budget = kDefaultWordBudget);

struct PigeonholeCluster {
  Word prefix;                       // depth-d, start_level 1
  std::vector<std::size_t> indices;  // inputs sharing that prefix
};

/*
 * Finite-depth pigeonhole step of the diagonal subsequence argument: among
 * N depth-m words there is a depth-d prefix shared by at least
 * ceil(N / #(depth-d words)) of them. Returns the most common prefix
 * (ties broken lexicographically) with the indices holding it.
 */
PigeonholeCluster pigeonhole_cluster(const std::vector<Letters>& points,
                                     int target_depth);

// Number of depth-`depth` words, or nullopt when it exceeds `budget`.
std::optional<std::size_t> count_words_at_depth(const LevelSystem& system, int depth,
                                                std::size_t budget = kDefaultWordBudget);

// Visits every depth-`depth` word in lexicographic (symbol-index) order.
void for_each_word(const LevelSystem& system, int depth,
                   const std::function<void(const Letters&)>& fn,
                   std::size_t budget = kDefaultWordBudget);

std::vector<Letters> words_at_depth(const LevelSystem& system, int depth,
                                    std::size_t budget = kDefaultWordBudget);

}  // namespace cantor
