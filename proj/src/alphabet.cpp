#include "cantor/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cantor/errors.hpp"

namespace cantor {

Alphabet::Alphabet(std::vector<std::string> labels, std::optional<Symbol> basepoint)
    : labels_(std::move(labels)), basepoint_(basepoint) {
  if (labels_.empty())
    throw Error(Error::Kind::invalid_input, "alphabet must be non-empty");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty())
      throw Error(Error::Kind::invalid_input, "alphabet label must be non-empty");
    if (!seen.insert(l).second)
      throw Error(Error::Kind::invalid_input, "duplicate alphabet label '" + l + "'");
  }
  if (basepoint_ && !contains(*basepoint_))
    throw Error(Error::Kind::invalid_input, "basepoint index out of range");
}

Alphabet Alphabet::from_chars(std::string_view chars, std::optional<Symbol> basepoint) {
  std::vector<std::string> labels;
  labels.reserve(chars.size());
  for (char c : chars) labels.emplace_back(1, c);
  return Alphabet(std::move(labels), basepoint);
}

const std::string& Alphabet::label(Symbol s) const {
  if (!contains(s))
    throw Error(Error::Kind::invalid_input, "symbol index out of range");
  return labels_[static_cast<std::size_t>(s)];
}

std::optional<Symbol> Alphabet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Symbol>(it - labels_.begin());
}

bool Alphabet::single_char_labels() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

LevelSystem::LevelSystem(std::vector<Alphabet> pre, std::vector<Alphabet> cycle)
    : preperiod_(std::move(pre)), cycle_(std::move(cycle)) {
  if (cycle_.empty())
    throw Error(Error::Kind::invalid_input, "level system needs a non-empty cycle");
  homogeneous_ = true;
  for (const auto& a : preperiod_)
    if (!(a == cycle_.front())) homogeneous_ = false;
  for (const auto& a : cycle_)
    if (!(a == cycle_.front())) homogeneous_ = false;
}

LevelSystem LevelSystem::homogeneous(Alphabet a) {
  return LevelSystem({}, {std::move(a)});
}

LevelSystem LevelSystem::cycling(std::vector<Alphabet> cycle) {
  return LevelSystem({}, std::move(cycle));
}

LevelSystem LevelSystem::staged(std::vector<Alphabet> preperiod,
                                std::vector<Alphabet> cycle) {
  return LevelSystem(std::move(preperiod), std::move(cycle));
}

const Alphabet& LevelSystem::alphabet_at(int level) const {
  if (level < 1)
    throw Error(Error::Kind::invalid_input, "levels are 1-indexed");
  std::size_t i = static_cast<std::size_t>(level - 1);
  if (i < preperiod_.size()) return preperiod_[i];
  return cycle_[(i - preperiod_.size()) % cycle_.size()];
}

bool operator==(const LevelSystem& a, const LevelSystem& b) {
  // Equality of the assignments, not of their representations: two systems
  // agree everywhere iff they agree past both preperiods for one full joint
  // cycle.
  int pre = std::max(a.preperiod_length(), b.preperiod_length());
  int joint = static_cast<int>(std::lcm(a.cycle_.size(), b.cycle_.size()));
  for (int l = 1; l <= pre + joint; ++l)
    if (!(a.alphabet_at(l) == b.alphabet_at(l))) return false;
  return true;
}

}  // namespace cantor
