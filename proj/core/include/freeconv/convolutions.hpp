#pragma once

#include "freeconv/measure.hpp"

namespace freeconv {

// Classical additive convolution: grid result, cross-summed atoms plus a
// trapezoid-sampled density convolution refined until the CDF is stable to
// 1e-7.  Inputs must carry atom/density data (not transform-defined).
Measure conv_classical_add(const Measure& mu, const Measure& nu);

// Classical multiplicative convolution: the additive engine applied to the
// log-pushforwards of the strictly positive parts, mapped back by exp;
// (mu x nu)({0}) = 1 - (1 - mu({0}))(1 - nu({0})).
Measure conv_classical_mul(const Measure& mu, const Measure& nu);

// Classical max-convolution: F = F_mu F_nu.
Measure conv_classical_max(const Measure& mu, const Measure& nu);

// Free additive convolution: lazy, R = R_mu + R_nu; the validity interval and
// the atom at 0 are recovered from the range of the sum.
Measure conv_free_add(const Measure& mu, const Measure& nu);

// Free multiplicative convolution: lazy, S = S_mu S_nu on
// (-1 + max{mu({0}), nu({0})}, 0); the atom at 0 is the max of the inputs'.
// delta_0 inputs are rejected.
Measure conv_free_mul(const Measure& mu, const Measure& nu);

// Boolean additive convolution: lazy, eta = eta_mu + eta_nu on (-inf, 0).
Measure conv_boolean_add(const Measure& mu, const Measure& nu);

// Free max-convolution: F = max{F_mu + F_nu - 1, 0}.
Measure conv_free_max(const Measure& mu, const Measure& nu);

// Boolean max-convolution: 1/F = 1/F_mu + 1/F_nu - 1, with F = 0 wherever
// either factor vanishes.
Measure conv_boolean_max(const Measure& mu, const Measure& nu);

// Partial semigroup powers.
Measure power_free_add(const Measure& mu, double t);    // R -> tR, t >= 1
Measure power_boolean_add(const Measure& mu, double t); // eta -> t eta, t >= 0
Measure power_free_mul(const Measure& mu, double t);    // S -> S^t, t >= 1
Measure power_free_max(const Measure& mu, double t);    // F -> max{tF-(t-1),0}, t >= 1
Measure power_boolean_max(const Measure& mu, double t); // F -> F/(t-(t-1)F), t > 0

} // namespace freeconv
