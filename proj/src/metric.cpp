#include "cantor/metric.hpp"

#include <algorithm>
#include <numeric>

#include "cantor/errors.hpp"

namespace cantor {

UltrametricParams UltrametricParams::with_ratio(Rational r) {
  if (!(Rational(0) < r && r < Rational(1)))
    throw Error(Error::Kind::invalid_input, "ultrametric ratio must lie in (0, 1)");
  return UltrametricParams{std::move(r)};
}

std::optional<int> agreement_depth(const SequenceDescriptor& x,
                                   const SequenceDescriptor& y) {
  long long bound = static_cast<long long>(x.preperiod().size()) +
                    static_cast<long long>(y.preperiod().size()) +
                    std::lcm(static_cast<long long>(x.period().size()),
                             static_cast<long long>(y.period().size()));
  for (long long l = 1; l <= bound; ++l)
    if (x.symbol_at(static_cast<int>(l)) != y.symbol_at(static_cast<int>(l)))
      return static_cast<int>(l - 1);
  return std::nullopt;  // equal as points
}

Rational distance(const SequenceDescriptor& x, const SequenceDescriptor& y,
                  const UltrametricParams& p) {
  auto depth = agreement_depth(x, y);
  if (!depth) return Rational(0);
  return pow(p.ratio, *depth);
}

Cylinder ball_to_cylinder(const SequenceDescriptor& center, int m) {
  if (m < 0)
    throw Error(Error::Kind::invalid_input, "ball depth must be nonnegative");
  return Cylinder{center.prefix(m)};
}

Rational two_sided_distance(const BiSequenceDescriptor& x, const BiSequenceDescriptor& y,
                            const UltrametricParams& p) {
  // Beyond this window both sequences run inside pure periodic tails, so
  // agreement on the whole window implies agreement everywhere.
  long long lo = std::min(x.center_start(), y.center_start());
  long long hi = std::max(x.center_end(), y.center_end());
  lo -= std::lcm(static_cast<long long>(x.left_period().size()),
                 static_cast<long long>(y.left_period().size()));
  hi += std::lcm(static_cast<long long>(x.right_period().size()),
                 static_cast<long long>(y.right_period().size()));
  long long radius = std::max(std::abs(lo), std::abs(hi));
  for (long long m = 0; m <= radius; ++m) {
    if (x.symbol_at(static_cast<int>(m)) != y.symbol_at(static_cast<int>(m)) ||
        x.symbol_at(static_cast<int>(-m)) != y.symbol_at(static_cast<int>(-m)))
      return pow(p.ratio, m);
  }
  return Rational(0);
}

}  // namespace cantor
