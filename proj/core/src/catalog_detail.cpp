#include "catalog_detail.hpp"

#include "freeconv/errors.hpp"
#include "freeconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freeconv::detail {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Levy density for the alpha = 1/2 one-sided stable (Laplace e^{-sqrt(s)}).
double levy_density(double x) {
    if (x <= 0.0) return 0.0;
    return 0.5 / std::sqrt(kPi) * std::pow(x, -1.5) * std::exp(-0.25 / x);
}

double levy_cdf(double x) {
    if (x <= 0.0) return 0.0;
    return std::erfc(0.5 / std::sqrt(x));
}

// log of Zolotarev's kernel A(phi) = sin(a phi)^{a/(1-a)} sin((1-a) phi) / sin(phi)^{1/(1-a)}
double log_zolotarev_A(double alpha, double phi) {
    double r = alpha / (1.0 - alpha);
    return r * std::log(std::sin(alpha * phi)) + std::log(std::sin((1.0 - alpha) * phi)) -
           (1.0 + r) * std::log(std::sin(phi));
}

double poisson_pmf(double lambda, int k) {
    return std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

} // namespace

double stable_cdf(double alpha, double x) {
    if (x <= 0.0) return 0.0;
    if (alpha == 0.5) return levy_cdf(x);
    double log_xe = -alpha / (1.0 - alpha) * std::log(x);
    auto f = [&](double phi) {
        double lt = log_zolotarev_A(alpha, phi) + log_xe;
        if (lt > 690.0) return 0.0;
        return std::exp(-std::exp(lt));
    };
    // A(phi) grows monotonically to +inf at phi = pi; the integrand is smooth
    // in the interior and flat 0 near pi, so a split quadrature suffices.
    double v = integrate(f, 0.0, 0.5 * kPi, 1e-12, 1e-300) +
               integrate(f, 0.5 * kPi, kPi * (1.0 - 1e-12), 1e-12, 1e-300);
    return std::min(1.0, v / kPi);
}

double stable_density(double alpha, double x) {
    if (x <= 0.0) return 0.0;
    if (alpha == 0.5) return levy_density(x);
    double r = alpha / (1.0 - alpha);
    double log_xe = -r * std::log(x);
    auto f = [&](double phi) {
        double la = log_zolotarev_A(alpha, phi);
        double lt = la + log_xe;
        if (lt > 690.0) return 0.0;
        return std::exp(la - std::exp(lt));
    };
    double v = integrate(f, 0.0, 0.5 * kPi, 1e-12, 1e-300) +
               integrate(f, 0.5 * kPi, kPi * (1.0 - 1e-12), 1e-12, 1e-300);
    return r / x * std::pow(x, -r) * v / kPi;
}

bool has_density(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
        case Family::Poisson:
        case Family::FreeStable:
            return false;
        default:
            return true;
    }
}

double density(const CatalogRep& c, double x) {
    switch (c.family) {
        case Family::Uniform01:
            return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
        case Family::Exponential:
            return x >= 0.0 ? std::exp(-x) : 0.0;
        case Family::MarchenkoPastur: {
            double lam = c.p1;
            double a = (1.0 - std::sqrt(lam)) * (1.0 - std::sqrt(lam));
            double b = (1.0 + std::sqrt(lam)) * (1.0 + std::sqrt(lam));
            if (x <= a || x >= b) return 0.0;
            return std::sqrt((x - a) * (b - x)) / (2.0 * kPi * x);
        }
        case Family::Semicircle: {
            double m = c.p1, v = c.p2;
            double d = 4.0 * v - (x - m) * (x - m);
            if (d <= 0.0) return 0.0;
            return std::sqrt(d) / (2.0 * kPi * v);
        }
        case Family::BooleanStable: {
            double a = c.p1;
            if (x <= 0.0) return 0.0;
            double xa = std::pow(x, a);
            double den = xa * xa + 2.0 * xa * std::cos(kPi * a) + 1.0;
            return std::sin(kPi * a) / kPi * std::pow(x, a - 1.0) / den;
        }
        case Family::ClassicalStable:
            return stable_density(c.p1, x);
        case Family::Pareto: {
            double a = c.p1;
            return x > 1.0 ? a * std::pow(x, -a - 1.0) : 0.0;
        }
        case Family::Dagum: {
            double a = c.p1;
            if (x <= 0.0) return 0.0;
            double xa = std::pow(x, a);
            return a * std::pow(x, a - 1.0) / ((1.0 + xa) * (1.0 + xa));
        }
        case Family::Frechet: {
            double a = c.p1;
            if (x <= 0.0) return 0.0;
            return a * std::pow(x, -a - 1.0) * std::exp(-std::pow(x, -a));
        }
        default:
            throw UnsupportedError(std::string("density unavailable for ") + family_name(c.family));
    }
}

bool has_cdf(const CatalogRep& c) { return c.family != Family::FreeStable; }

double cdf(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            return t >= c.p1 ? 1.0 : 0.0;
        case Family::Uniform01:
            return std::clamp(t, 0.0, 1.0);
        case Family::Exponential:
            return t >= 0.0 ? -std::expm1(-t) : 0.0;
        case Family::Poisson: {
            double f = 0.0;
            int kmax = static_cast<int>(std::min(t, 1e6));
            for (int k = 0; k <= kmax; ++k) {
                f += poisson_pmf(c.p1, k);
                if (1.0 - f < 1e-17) return 1.0;
            }
            return std::min(f, 1.0);
        }
        case Family::MarchenkoPastur: {
            double a0 = atom0(c);
            Interval s = density_support(c);
            if (t <= s.lo) return a0;
            double hi = std::min(t, s.hi);
            return std::min(1.0, a0 + integrate([&](double x) { return density(c, x); }, s.lo, hi, 1e-11, 1e-15));
        }
        case Family::Semicircle: {
            Interval s = density_support(c);
            if (t <= s.lo) return 0.0;
            double hi = std::min(t, s.hi);
            return std::min(1.0, integrate([&](double x) { return density(c, x); }, s.lo, hi, 1e-11, 1e-15));
        }
        case Family::BooleanStable: {
            double a = c.p1;
            if (t <= 0.0) return 0.0;
            double u = (std::pow(t, a) + std::cos(kPi * a)) / std::sin(kPi * a);
            double arccot = 0.5 * kPi - std::atan(u);
            return 1.0 - arccot / (kPi * a);
        }
        case Family::ClassicalStable:
            return stable_cdf(c.p1, t);
        case Family::Pareto:
            return t > 1.0 ? 1.0 - std::pow(t, -c.p1) : 0.0;
        case Family::Dagum: {
            if (t <= 0.0) return 0.0;
            double ta = std::pow(t, c.p1);
            return ta / (1.0 + ta);
        }
        case Family::Frechet:
            return t > 0.0 ? std::exp(-std::pow(t, -c.p1)) : 0.0;
        default:
            throw UnsupportedError(std::string("cdf unavailable for ") + family_name(c.family));
    }
}

bool has_quantile(const CatalogRep& c) { return c.family != Family::FreeStable; }

double quantile(const CatalogRep& c, double p) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1;
        case Family::Uniform01:
            return p;
        case Family::Exponential:
            return -std::log1p(-p);
        case Family::Poisson: {
            double acc = 0.0;
            for (int k = 0; k < 100000; ++k) {
                acc += poisson_pmf(c.p1, k);
                if (acc >= p) return k;
            }
            return 100000.0;
        }
        case Family::BooleanStable: {
            // closed inverse of the arccot antiderivative
            double a = c.p1;
            double num = std::sin(kPi * a * p);
            double den = std::sin(kPi * a * (1.0 - p));
            return std::pow(num / den, 1.0 / a);
        }
        case Family::Pareto:
            return std::pow(1.0 - p, -1.0 / c.p1);
        case Family::Dagum:
            return std::pow(p / (1.0 - p), 1.0 / c.p1);
        case Family::Frechet:
            return std::pow(-std::log(p), -1.0 / c.p1);
        case Family::MarchenkoPastur:
        case Family::Semicircle:
        case Family::ClassicalStable: {
            // bracketed bisection on the CDF
            double a0 = atom0(c);
            if (p <= a0) return 0.0;
            Interval s = density_support(c);
            double lo = s.lo;
            double hi = std::isfinite(s.hi) ? s.hi : 1.0;
            if (!std::isfinite(s.hi)) {
                while (cdf(c, hi) < p && hi < 1e300) hi *= 4.0;
            }
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (cdf(c, mid) >= p) hi = mid;
                else lo = mid;
                if (hi - lo <= 1e-13 * std::max(1.0, std::abs(hi))) break;
            }
            return hi;
        }
        default:
            throw UnsupportedError(std::string("quantile unavailable for ") + family_name(c.family));
    }
}

Interval density_support(const CatalogRep& c) {
    switch (c.family) {
        case Family::Uniform01:
            return {0.0, 1.0};
        case Family::Exponential:
            return {0.0, kInf};
        case Family::MarchenkoPastur: {
            double r = std::sqrt(c.p1);
            return {(1.0 - r) * (1.0 - r), (1.0 + r) * (1.0 + r)};
        }
        case Family::Semicircle:
            return {c.p1 - 2.0 * std::sqrt(c.p2), c.p1 + 2.0 * std::sqrt(c.p2)};
        case Family::Pareto:
            return {1.0, kInf};
        case Family::BooleanStable:
        case Family::ClassicalStable:
        case Family::Dagum:
        case Family::Frechet:
            return {0.0, kInf};
        default:
            return {0.0, 0.0};
    }
}

double atom0(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 == 0.0 ? 1.0 : 0.0;
        case Family::Poisson:
            return std::exp(-c.p1);
        case Family::MarchenkoPastur:
            return std::max(0.0, 1.0 - c.p1);
        default:
            return 0.0;
    }
}

std::vector<std::pair<double, double>> atoms(const CatalogRep& c) {
    std::vector<std::pair<double, double>> out;
    if (c.family == Family::Dirac && c.p1 > 0.0) out.emplace_back(c.p1, 1.0);
    if (c.family == Family::Poisson) {
        double tail = 1.0 - std::exp(-c.p1);
        for (int k = 1; k < 100000; ++k) {
            double m = poisson_pmf(c.p1, k);
            tail -= m;
            out.emplace_back(static_cast<double>(k), m);
            if (tail < 1e-16) break;
        }
    }
    return out;
}

bool default_id_star(Family f) {
    return f == Family::Exponential || f == Family::Poisson || f == Family::ClassicalStable;
}

std::optional<double> closed_R(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 * t;
        case Family::MarchenkoPastur:
            return c.p1 * t / (1.0 - t);
        case Family::Semicircle:
            return c.p1 * t + c.p2 * t * t;
        case Family::FreeStable:
            return -std::pow(-t, c.p1);
        default:
            return std::nullopt;
    }
}

std::optional<double> r_extension_left(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
        case Family::MarchenkoPastur:
        case Family::FreeStable:
            return -kInf;
        case Family::Semicircle:
            return -c.p1 / (2.0 * c.p2);
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_S(const CatalogRep& c, double u) {
    switch (c.family) {
        case Family::Dirac:
            if (c.p1 <= 0.0) return std::nullopt;
            return 1.0 / c.p1;
        case Family::MarchenkoPastur:
            return 1.0 / (c.p1 + u);
        case Family::FreeStable: {
            double a = c.p1;
            return std::pow(-u, (1.0 - a) / a);
        }
        case Family::BooleanStable: {
            double a = c.p1;
            return std::pow(-u / (1.0 + u), (1.0 - a) / a);
        }
        default:
            return std::nullopt;
    }
}

std::optional<double> s_domain_left(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 > 0.0 ? std::optional<double>(-kInf) : std::nullopt;
        case Family::MarchenkoPastur:
            return -c.p1;
        case Family::FreeStable:
            return -kInf;
        case Family::BooleanStable:
            return -1.0;
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_eta(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 * t;
        case Family::BooleanStable:
            return -std::pow(-t, c.p1);
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_psi(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 * t / (1.0 - c.p1 * t);
        case Family::BooleanStable: {
            double e = -std::pow(-t, c.p1);
            return e / (1.0 - e);
        }
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_cumulant(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 * t;
        case Family::Poisson:
            return c.p1 * std::expm1(t);
        case Family::Exponential:
            if (t >= 1.0) return std::nullopt;
            return -std::log1p(-t);
        case Family::ClassicalStable:
            if (t > 0.0) return std::nullopt;
            return -std::pow(-t, c.p1);
        case Family::Uniform01:
            if (t == 0.0) return 0.0;
            return std::log(std::expm1(t) / t);
        default:
            return std::nullopt;
    }
}

double cumulant_sup_t(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
        case Family::Poisson:
        case Family::Uniform01:
            return kInf;
        case Family::Exponential:
            return 1.0;
        default:
            return 0.0; // t <= 0 only
    }
}

std::optional<double> closed_mellin(const CatalogRep& c, double t) {
    switch (c.family) {
        case Family::Dirac:
            if (c.p1 > 0.0) return std::pow(c.p1, t);
            return t > 0.0 ? std::optional<double>(0.0) : std::nullopt;
        case Family::Uniform01:
            if (t <= -1.0) return std::nullopt;
            return 1.0 / (1.0 + t);
        case Family::Exponential:
            if (t <= -1.0) return std::nullopt;
            return std::tgamma(1.0 + t);
        case Family::ClassicalStable:
            if (t >= c.p1) return std::nullopt;
            return std::tgamma(1.0 - t / c.p1) / std::tgamma(1.0 - t);
        case Family::Pareto:
            if (t >= c.p1) return std::nullopt;
            return c.p1 / (c.p1 - t);
        case Family::Frechet:
            if (t >= c.p1) return std::nullopt;
            return std::tgamma(1.0 - t / c.p1);
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_neg_moment(const CatalogRep& c) {
    switch (c.family) {
        case Family::Dirac:
            return c.p1 > 0.0 ? 1.0 / c.p1 : kInf;
        case Family::Uniform01:
        case Family::Exponential:
        case Family::Poisson:
        case Family::BooleanStable:
            return kInf;
        case Family::MarchenkoPastur:
            return c.p1 > 1.0 ? 1.0 / (c.p1 - 1.0) : kInf;
        case Family::Semicircle: {
            double m = c.p1, v = c.p2;
            return (m - std::sqrt(m * m - 4.0 * v)) / (2.0 * v);
        }
        case Family::FreeStable:
            return 1.0;
        case Family::ClassicalStable:
            return std::tgamma(1.0 + 1.0 / c.p1);
        case Family::Pareto:
            return c.p1 / (c.p1 + 1.0);
        case Family::Dagum: {
            double a = c.p1;
            if (a <= 1.0) return kInf;
            return kPi / (a * std::sin(kPi / a));
        }
        case Family::Frechet:
            return std::tgamma(1.0 + 1.0 / c.p1);
        default:
            return std::nullopt;
    }
}

std::optional<double> closed_G_real(const CatalogRep& c, double s) {
    switch (c.family) {
        case Family::Dirac:
            return 1.0 / (s - c.p1);
        case Family::Uniform01:
            // log(s / (s - 1)) arranged to stay accurate as s -> -inf
            return -std::log1p(-1.0 / s);
        case Family::MarchenkoPastur: {
            double lam = c.p1;
            double rt = std::sqrt((s - 1.0 - lam) * (s - 1.0 - lam) - 4.0 * lam);
            return (s + 1.0 - lam + rt) / (2.0 * s);
        }
        case Family::Semicircle: {
            // rationalized branch: immune to cancellation as s -> -inf
            double m = c.p1, v = c.p2;
            double rt = std::sqrt((s - m) * (s - m) - 4.0 * v);
            return 2.0 / (s - m - rt);
        }
        case Family::BooleanStable: {
            double a = c.p1;
            return 1.0 / (s - std::pow(-s, 1.0 - a));
        }
        default:
            return std::nullopt;
    }
}

std::optional<std::complex<double>> closed_G_complex(const CatalogRep& c, std::complex<double> z) {
    using C = std::complex<double>;
    switch (c.family) {
        case Family::Dirac:
            return 1.0 / (z - c.p1);
        case Family::Uniform01:
            return std::log(z / (z - 1.0));
        case Family::MarchenkoPastur: {
            double lam = c.p1;
            double r = std::sqrt(lam);
            double a = (1.0 - r) * (1.0 - r);
            double b = (1.0 + r) * (1.0 + r);
            // branch fixed by the product of principal square roots: ~ z at infinity
            C rt = std::sqrt(z - b) * std::sqrt(z - a);
            return (z + 1.0 - lam - rt) / (2.0 * z);
        }
        case Family::Semicircle: {
            double m = c.p1, v = c.p2;
            double h = 2.0 * std::sqrt(v);
            C rt = std::sqrt(z - m - h) * std::sqrt(z - m + h);
            return (z - m - rt) / (2.0 * v);
        }
        default:
            return std::nullopt;
    }
}

} // namespace freeconv::detail
