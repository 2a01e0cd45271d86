#pragma once

#include "freeconv/measure.hpp"

#include <complex>
#include <functional>

namespace freeconv {

// Stieltjes transform int (s - x)^{-1} dmu.  Real overload: s < 0; complex
// overload: Im z > 0 (used by the subordination solver).
double cauchy_G(const Measure& mu, double s);
std::complex<double> cauchy_G_complex(const Measure& mu, std::complex<double> z);

// A = int x^{-1} dmu in (0, inf]; +inf whenever mu({0}) > 0.
double neg_moment_A(const Measure& mu);

double psi_transform(const Measure& mu, double t); // t < 0
double eta_transform(const Measure& mu, double t); // t < 0
double r_transform(const Measure& mu, double t);   // -A < t < 0
double s_transform(const Measure& mu, double u);   // -1 + mu({0}) < u < 0

// log int e^{tx} dmu; finite for t < 0 always, and for t >= 0 only when the
// relevant tail integral converges.
double cumulant_transform(const Measure& mu, double t);

// int x^t dmu; infinite when t < 0 and mu({0}) > 0.
double mellin_transform(const Measure& mu, double t);

double r_domain_left(const Measure& mu); // = -A
double s_domain_left(const Measure& mu); // = -1 + mu({0})

// Dispatch by kind (CLI surface).
double transform_value(const Measure& mu, TransformKind k, double t);

// int f dmu for measures carrying atoms/density data (catalog or grid).
double integrate_measure(const Measure& mu, const std::function<double(double)>& f,
                         double rel_tol = 1e-11);

// Range metadata for a transform formula obtained by combining measures: the
// formula is valid on a provisional interval, but the represented measure's
// own interval and atom at 0 must be recovered from the values.
struct RangeInfo {
    double neg_moment; // A of the represented measure
    double atom0;
};

// R given on (provisional_left, 0): find where it exits (-1, 0), or read the
// atom from its limit.
RangeInfo detect_range_from_R(const std::function<double(double)>& r, double provisional_left);

// eta given on (-inf, 0): eta -> -inf iff no atom at 0; a finite limit l
// identifies mu({0}) = 1/(1 - l).
double detect_atom0_from_eta(const std::function<double(double)>& eta);
double detect_A_from_eta(const std::function<double(double)>& eta, double atom0);

// S given on (-1 + atom0, 0): A = -lim u S(u) at the left endpoint.
double detect_A_from_S(const std::function<double(double)>& s, double atom0);

} // namespace freeconv
