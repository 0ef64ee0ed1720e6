#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

// Index of a symbol within its level's alphabet. All words, prefixes and
// descriptors store indices; labels live on the Alphabet.
using Symbol = int;

class Alphabet {
public:
  // Labels must be non-empty, duplicate-free; basepoint indexes into them.
  explicit Alphabet(std::vector<std::string> labels,
                    std::optional<Symbol> basepoint = std::nullopt);

  static Alphabet binary() { return from_chars("01"); }
  // One single-character label per char of `chars`.
  static Alphabet from_chars(std::string_view chars,
                             std::optional<Symbol> basepoint = std::nullopt);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Symbol s) const;
  std::optional<Symbol> index_of(std::string_view label) const;
  std::optional<Symbol> basepoint() const { return basepoint_; }
  bool contains(Symbol s) const { return s >= 0 && s < size(); }
  // True when every label is a single character (enables compact word strings).
  bool single_char_labels() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_ && a.basepoint_ == b.basepoint_;
  }

private:
  std::vector<std::string> labels_;
  std::optional<Symbol> basepoint_;
};

/*
 * Assignment of an alphabet to every level l >= 1. Levels are 1-indexed
 * throughout the public API. The assignment is finitely described as a
 * preperiod list followed by a repeating cycle, so inhomogeneous systems
 * stay compatible with eventually periodic sequences.
 */
class LevelSystem {
public:
  static LevelSystem homogeneous(Alphabet a);
  // Level l gets cycle[(l-1) mod cycle.size()].
  static LevelSystem cycling(std::vector<Alphabet> cycle);
  static LevelSystem staged(std::vector<Alphabet> preperiod,
                            std::vector<Alphabet> cycle);

  const Alphabet& alphabet_at(int level) const;  // level >= 1
  bool is_homogeneous() const { return homogeneous_; }
  int preperiod_length() const { return static_cast<int>(preperiod_.size()); }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }

  friend bool operator==(const LevelSystem& a, const LevelSystem& b);

private:
  LevelSystem(std::vector<Alphabet> pre, std::vector<Alphabet> cycle);

  std::vector<Alphabet> preperiod_;
  std::vector<Alphabet> cycle_;  // non-empty
  bool homogeneous_;
};

}  // namespace cantor
