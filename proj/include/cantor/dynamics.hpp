#pragma once

#include <optional>
#include <vector>

#include "cantor/core_space.hpp"

namespace cantor {

/*
 * Shift maps. One-sided shifts drop the first term and are restricted to
 * homogeneous level systems so the shifted sequence lives in the same
 * space; the two-sided shift is a pure index relabeling and is invertible
 * by construction.
 */

// {x_l} -> {x_{l+1}}: drops the first preperiod symbol, or rotates the
// period when the preperiod is empty. Throws Error{domain} on
// inhomogeneous systems.
SequenceDescriptor shift_one_sided(const LevelSystem& system, const SequenceDescriptor& x);

// The |E| preimages of y under the one-sided shift, one per prepended
// symbol, in symbol order.
std::vector<SequenceDescriptor> shift_preimages(const LevelSystem& system,
                                                const SequenceDescriptor& y);

BiSequenceDescriptor shift_two_sided(const BiSequenceDescriptor& x);
BiSequenceDescriptor unshift_two_sided(const BiSequenceDescriptor& x);

struct Orbit {
  // x, shift(x), shift^2(x), ... — stops after the first point that closes
  // a cycle, or after max_steps shifts, whichever comes first.
  std::vector<SequenceDescriptor> points;
  // Set when the cycle was found within max_steps: points[preperiod ..
  // preperiod+cycle-1] repeat forever.
  std::optional<int> preperiod;
  std::optional<int> cycle;
};

// Iterates the one-sided shift, detecting the eventual cycle by exact
// point equality. A cycle always closes within |pre| + |per| steps.
Orbit orbit(const LevelSystem& system, const SequenceDescriptor& x, int max_steps);

/*
 * Membership of a doubly-infinite sequence in the basepoint-stabilized
 * space: returns the largest L with x_l = basepoint for all l <= L, which
 * requires the left period to be the basepoint itself. For the entirely
 * basepoint sequence (no largest L exists) the center's left edge is
 * reported. nullopt when the left tail is not basepoint-constant; throws
 * Error{domain} when the alphabet declares no basepoint.
 */
std::optional<int> in_e_star(const Alphabet& alphabet, const BiSequenceDescriptor& x);

}  // namespace cantor
