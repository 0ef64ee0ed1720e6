#pragma once

#include <optional>

#include "cantor/core_space.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/*
 * Parameters of the ultrametric d(x,y) = ratio^(agreement depth), the
 * standard family for which the closed balls of radius ratio^m are exactly
 * the depth-m cylinders. Any ratio in (0,1) induces the same topology and
 * the same distance ordering.
 */
struct UltrametricParams {
  Rational ratio{1, 2};

  static UltrametricParams with_ratio(Rational r);
};

// Largest m such that x and y agree on all levels <= m; nullopt when the
// points are equal (agreement at every level). Decided by unrolling both
// descriptors through one joint period.
std::optional<int> agreement_depth(const SequenceDescriptor& x,
                                   const SequenceDescriptor& y);

// 0 when the points are equal, else ratio^(agreement depth). Satisfies
// d(x,z) <= max(d(x,y), d(y,z)) exactly, and d(x,y) <= ratio^m iff y lies
// in the depth-m cylinder around x.
Rational distance(const SequenceDescriptor& x, const SequenceDescriptor& y,
                  const UltrametricParams& p = {});

// The depth-m cylinder around `center`: the closed ball of radius ratio^m.
Cylinder ball_to_cylinder(const SequenceDescriptor& center, int m);

/*
 * Two-sided variant. With M the largest m >= -1 such that x and y agree on
 * all |l| <= m (M = -1 when they differ at level 0), the distance is
 * ratio^(1+M), so radius 1 means no constraint and balls of radius
 * ratio^(1+m) are the two-sided depth-m neighborhoods. 0 when equal.
 */
Rational two_sided_distance(const BiSequenceDescriptor& x, const BiSequenceDescriptor& y,
                            const UltrametricParams& p = {});

}  // namespace cantor
