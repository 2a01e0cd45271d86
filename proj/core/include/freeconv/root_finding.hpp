#pragma once

#include <functional>
#include <utility>

namespace freeconv {

// Solve f(x) = target for monotone f on [lo, hi].  Alternates secant and
// bisection steps, so it terminates (roughly doubling bisection cost in the
// worst case) and converges superlinearly on smooth data.  Throws BracketError
// when [f(lo), f(hi)] does not straddle the target or a midpoint probe shows
// the data is not monotone.
double invert_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi,
                       double x_tol = 1e-13, double f_tol = 0.0);

// Locate a sign change of f(t) - target on the negative axis by scanning
// t = -2^k, k = k_min .. k_max (k may be negative: the scan covers
// -2^-40 .. -2^40 by default).  Returns (a, b), a < b < 0, straddling.
std::pair<double, double> bracket_scan_negative(const std::function<double(double)>& f,
                                                double target,
                                                int k_min = -40, int k_max = 40);

} // namespace freeconv
