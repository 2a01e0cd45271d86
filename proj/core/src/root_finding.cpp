#include "freeconv/root_finding.hpp"
#include "freeconv/errors.hpp"

#include <cmath>
#include <string>

namespace freeconv {

double invert_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double x_tol, double f_tol) {
    if (!(lo < hi)) throw BracketError("invert_monotone: requires lo < hi");
    double fa = f(lo) - target;
    double fb = f(hi) - target;
    if (fa == 0.0) return lo;
    if (fb == 0.0) return hi;
    if (std::isnan(fa) || std::isnan(fb))
        throw BracketError("invert_monotone: NaN at bracket endpoint");
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("invert_monotone: no sign change over bracket [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    // One interior probe: with monotone data the midpoint value must lie on
    // the segment's sign path (between fa and fb once reordered).
    {
        double fm = f(0.5 * (lo + hi)) - target;
        double mn = std::min(fa, fb), mx = std::max(fa, fb);
        double slack = 0.1 * (mx - mn) + 1e-12;
        if (!std::isnan(fm) && (fm < mn - slack || fm > mx + slack))
            throw BracketError("invert_monotone: interior probe violates monotonicity");
    }
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
        double width = b - a;
        if (width <= x_tol * std::max({1.0, std::abs(a), std::abs(b)})) break;
        double x;
        if (it % 2 == 0 && fb != fa) {
            // secant through the bracket endpoints, clipped inside
            x = a - fa * (b - a) / (fb - fa);
            double margin = 0.01 * width;
            if (!(x > a + margin && x < b - margin)) x = 0.5 * (a + b);
        } else {
            x = 0.5 * (a + b);
        }
        double fx = f(x) - target;
        if (fx == 0.0 || std::abs(fx) <= f_tol) return x;
        if (std::isnan(fx)) {
            // retreat to plain bisection against the NaN side
            x = 0.5 * (a + b);
            fx = f(x) - target;
            if (std::isnan(fx)) throw BracketError("invert_monotone: NaN inside bracket");
        }
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    // return the endpoint with the smaller residual
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

std::pair<double, double> bracket_scan_negative(const std::function<double(double)>& f,
                                                double target, int k_min, int k_max) {
    double prev_t = 0.0;
    double prev_v = 0.0;
    bool have_prev = false;
    for (int k = k_min; k <= k_max; ++k) {
        double t = -std::ldexp(1.0, k);
        double v = f(t) - target;
        if (std::isnan(v)) {
            have_prev = false;
            continue;
        }
        if (v == 0.0) {
            double pad = std::abs(t) * 1e-6 + 1e-300;
            return {t - pad, t + pad};
        }
        if (have_prev && (v > 0.0) != (prev_v > 0.0)) {
            // scan runs toward more negative t: prev_t > t
            return {t, prev_t};
        }
        prev_t = t;
        prev_v = v;
        have_prev = true;
    }
    throw BracketError("bracket_scan_negative: no sign change on -2^" +
                       std::to_string(k_min) + " .. -2^" + std::to_string(k_max));
}

} // namespace freeconv
