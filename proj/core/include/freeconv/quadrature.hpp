#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace freeconv {

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.  Subdivides until the
// local error estimate meets rel_tol against the running total (abs_tol floor).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-14);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b,
                                       double rel_tol = 1e-10, double abs_tol = 1e-14);

// Integral over [a, +inf): geometric panels until two consecutive panels are
// negligible against the running total.  Handles both light and power tails.
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double rel_tol = 1e-10, double abs_tol = 1e-14);

// Gauss-Laguerre rule for the weight e^{-x} on [0, inf).  Nodes and weights
// are found by Newton iteration on the e^{-x/2}-scaled recurrence (the raw
// recurrence overflows for n around 190) and cached per order.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const LaguerreRule& laguerre_rule(int n);

// sum_i w_i g(x_i)  ~  int_0^inf g(x) e^{-x} dx
double gauss_laguerre(const std::function<double(double)>& g, int n = 96);

// Error-controlled version of the same integral: accepts the n=96 value when
// n=96 and n=192 agree, otherwise falls back to adaptive Gauss-Kronrod with
// panels graded toward 0 (cumulants of heavy-tailed laws have a power
// singularity there that defeats plain Gauss-Laguerre).
double exp_weighted_integral(const std::function<double(double)>& g, double tol = 1e-11);

} // namespace freeconv
