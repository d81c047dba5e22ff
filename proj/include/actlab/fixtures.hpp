#pragma once

#include "actlab/monoid.hpp"

namespace actlab {
namespace fixtures {

/// Trivial monoid {1}.
MonoidPtr t1();
/// Cyclic group of order 2.
MonoidPtr c2();
/// Two-element chain semilattice {1, 0}.
MonoidPtr n2();
/// Two left zeros with an identity adjoined: x·y = x on {a, b}.
MonoidPtr lz3();
/// Two right zeros with an identity adjoined: x·y = y on {a, b}.
MonoidPtr rz3();
/// Monogenic monoid on x with x^3 = x^2.
MonoidPtr m3();

/// Monogenic monoid {1, x, ..., x^(index+period-1)} with
/// x^(index+period) = x^index. Order is index + period.
MonoidPtr monogenic(int index, int period);

}  // namespace fixtures
}  // namespace actlab
