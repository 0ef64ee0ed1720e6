#include "cantor/dynamics.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void require_homogeneous(const LevelSystem& system) {
  if (!system.is_homogeneous())
    throw Error(Error::Kind::domain, "shift requires a homogeneous level system");
}

}  // namespace

SequenceDescriptor shift_one_sided(const LevelSystem& system, const SequenceDescriptor& x) {
  require_homogeneous(system);
  validate(system, x);
  if (!x.preperiod().empty())
    return SequenceDescriptor(Letters(x.preperiod().begin() + 1, x.preperiod().end()),
                              x.period());
  Letters rotated(x.period().begin() + 1, x.period().end());
  rotated.push_back(x.period().front());
  return SequenceDescriptor({}, std::move(rotated));
}

std::vector<SequenceDescriptor> shift_preimages(const LevelSystem& system,
                                                const SequenceDescriptor& y) {
  require_homogeneous(system);
  validate(system, y);
  const Alphabet& e = system.alphabet_at(1);
  std::vector<SequenceDescriptor> out;
  out.reserve(static_cast<std::size_t>(e.size()));
  for (Symbol s = 0; s < e.size(); ++s) {
    Letters pre;
    pre.reserve(y.preperiod().size() + 1);
    pre.push_back(s);
    pre.insert(pre.end(), y.preperiod().begin(), y.preperiod().end());
    out.emplace_back(std::move(pre), y.period());
  }
  return out;
}

BiSequenceDescriptor shift_two_sided(const BiSequenceDescriptor& x) {
  return BiSequenceDescriptor(x.left_period(), x.center(), x.right_period(),
                              x.center_start() - 1);
}

BiSequenceDescriptor unshift_two_sided(const BiSequenceDescriptor& x) {
  return BiSequenceDescriptor(x.left_period(), x.center(), x.right_period(),
                              x.center_start() + 1);
}

Orbit orbit(const LevelSystem& system, const SequenceDescriptor& x, int max_steps) {
  require_homogeneous(system);
  if (max_steps < 0)
    throw Error(Error::Kind::invalid_input, "orbit step count must be nonnegative");
  Orbit result;
  result.points.push_back(x);
  for (int step = 1; step <= max_steps; ++step) {
    SequenceDescriptor next = shift_one_sided(system, result.points.back());
    for (std::size_t j = 0; j < result.points.size(); ++j) {
      if (descriptor_equal(result.points[j], next)) {
        result.preperiod = static_cast<int>(j);
        result.cycle = static_cast<int>(result.points.size() - j);
        return result;
      }
    }
    result.points.push_back(std::move(next));
  }
  return result;
}

std::optional<int> in_e_star(const Alphabet& alphabet, const BiSequenceDescriptor& x) {
  validate(alphabet, x);
  auto basepoint = alphabet.basepoint();
  if (!basepoint)
    throw Error(Error::Kind::domain, "alphabet declares no basepoint");
  Symbol b = *basepoint;

  if (!std::all_of(x.left_period().begin(), x.left_period().end(),
                   [&](Symbol s) { return s == b; }))
    return std::nullopt;

  // First non-basepoint level, if any, lies in the center or within one
  // right period of it.
  int scan_end = x.center_end() + static_cast<int>(x.right_period().size());
  for (int l = x.center_start(); l <= scan_end; ++l)
    if (x.symbol_at(l) != b) return l - 1;
  // Entirely basepoint: no largest L exists; report the center's left edge.
  return x.center_start();
}

}  // namespace cantor
