#pragma once

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

#include <stdexcept>

namespace skein {

/// Unlink factor -(l + l^{-1}) m^{-1}: P of a c-component unlink is
/// delta_h^{c-1}.
LaurentPoly2 homfly_delta();

class homfly_cap_error : public std::runtime_error {
 public:
  explicit homfly_cap_error(const std::string& w) : std::runtime_error(w) {}
};

/// HOMFLY-PT polynomial of an oriented link diagram via skein-tree resolution
/// with the descending-diagram base case.  Satisfies
///   l P(L+) + l^{-1} P(L-) + m P(L0) = 0,   P(unknot) = 1.
LaurentPoly2 homfly(const OrientedDiagram& od, int crossing_cap = 40);

/// Jones polynomial from a HOMFLY value: l -> i q^{-1}, m -> i(q^{-1/2} - q^{1/2}).
LaurentPoly jones(const LaurentPoly2& p);

/// Alexander-Conway polynomial: l -> i, m -> i(t^{1/2} - t^{-1/2}).
LaurentPoly alexander(const LaurentPoly2& p);

/// Switches over/under at one crossing.
OrientedDiagram switch_crossing(const OrientedDiagram& od, int index);

/// Oriented smoothing at one crossing (the L0 of the skein triple).
OrientedDiagram smooth_crossing(const OrientedDiagram& od, int index);

}  // namespace skein
