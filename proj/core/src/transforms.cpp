#include "freeconv/transforms.hpp"

#include "catalog_detail.hpp"
#include "freeconv/errors.hpp"
#include "freeconv/quadrature.hpp"
#include "freeconv/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace freeconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- generic monotone inversion on an open interval ---------------------
// f is monotone on (lo, hi) with hi <= 0 and may blow up toward either edge.
// Probes march geometrically from the midpoint toward both ends until a sign
// bracket for f(x) = target appears.
double solve_on_open_interval(const std::function<double(double)>& f, double target,
                              double lo, double hi) {
    auto side = [&](double x) -> int {
        double v = f(x);
        if (std::isnan(v)) return 0;
        if (v == target) return 2; // exact hit marker
        return v < target ? -1 : 1;
    };
    std::vector<double> xs;
    if (std::isfinite(lo)) {
        double span = hi - lo;
        for (int j = 60; j >= 1; --j) xs.push_back(lo + span * std::pow(0.5, j)); // toward lo
        for (int j = 2; j <= 60; ++j) xs.push_back(hi - span * std::pow(0.5, j)); // toward hi
    } else {
        double scale = std::max(1.0, std::abs(hi));
        for (int j = 60; j >= 0; --j) xs.push_back(hi - scale * std::pow(2.0, j));
        for (int j = 1; j <= 60; ++j) {
            double x = hi - scale * std::pow(0.5, j);
            if (x < hi) xs.push_back(x);
        }
    }
    double prev_x = 0.0;
    int prev_s = 0;
    bool have = false;
    for (double x : xs) {
        if (!(x > lo && x < hi)) continue;
        int s = side(x);
        if (s == 2) return x;
        if (s == 0) continue;
        if (have && s != prev_s)
            return invert_monotone(f, target, std::min(prev_x, x), std::max(prev_x, x));
        prev_x = x;
        prev_s = s;
        have = true;
    }
    throw BracketError("no sign change found on the inversion interval");
}

// ---- integrals of f against the measure's density part -----------------

double catalog_density_integral(const CatalogRep& c, const std::function<double(double)>& f,
                                double rel_tol) {
    detail::Interval sp = detail::density_support(c);
    auto g = [&](double x) { return f(x) * detail::density(c, x); };
    if (std::isfinite(sp.hi)) return integrate(g, sp.lo, sp.hi, rel_tol);
    double split = sp.lo + std::max(1.0, std::abs(sp.lo));
    return integrate(g, sp.lo, split, rel_tol) + integrate_to_inf(g, split, rel_tol);
}

// ---- CDF-only routes (integration by parts) ----------------------------
// G(s)      = -int_0^inf F(x) (s-x)^{-2} dx                (s < 0)
// psi(t)    = -1 - t int_0^inf F(u) (1-tu)^{-2} du         (t < 0)
// int e^{tu} dF = -t int_0^inf F(u) e^{tu} du              (t < 0)
// int x^t dF    = -t int_0^inf x^{t-1} F(x) dx             (t < 0)
//               =  t int_0^inf x^{t-1} (1-F(x)) dx         (t > 0)

// Truncation point where 1 - F has become negligible; the (s-x)^{-2}-type
// kernels then admit an exact F = 1 tail.
double far_quantile(const Measure& mu) {
    double X = 1.0;
    for (int i = 0; i < 200 && X < 1e15; ++i) {
        if (1.0 - mu.cdf(X) < 1e-13) return X;
        X *= 2.0;
    }
    return X;
}

double cdf_route_G(const Measure& mu, double s) {
    double X = far_quantile(mu);
    auto g = [&](double x) {
        double d = s - x;
        return mu.cdf(x) / (d * d);
    };
    double body = integrate(g, 0.0, std::min(1.0, X), 1e-12);
    if (X > 1.0) {
        double a = 1.0;
        while (a < X) {
            double b = std::min(a * 4.0, X);
            body += integrate(g, a, b, 1e-12);
            a = b;
        }
    }
    return -(body + 1.0 / (X - s));
}

double cdf_route_psi(const Measure& mu, double t) {
    // psi(t) = (1/t) G(1/t) - 1 reuses the G kernel; direct form is better
    // conditioned for small |t|.
    double X = far_quantile(mu);
    auto g = [&](double u) {
        double d = 1.0 - t * u;
        return mu.cdf(u) / (d * d);
    };
    double body = integrate(g, 0.0, std::min(1.0, X), 1e-12);
    double a = 1.0;
    while (a < X) {
        double b = std::min(a * 4.0, X);
        body += integrate(g, a, b, 1e-12);
        a = b;
    }
    // tail with F = 1: int_X^inf (1-tu)^{-2} du = 1 / (-t (1 - tX))
    double tail = 1.0 / (-t * (1.0 - t * X));
    return -1.0 - t * (body + tail);
}

double cdf_route_mgf(const Measure& mu, double t) {
    // int e^{tu} dF for t < 0; integrand decays like e^{tu}.
    auto g = [&](double u) { return mu.cdf(u) * std::exp(t * u); };
    double body = integrate_to_inf(g, 0.0, 1e-12);
    return -t * body;
}

double cdf_route_mellin_neg(const Measure& mu, double t) {
    // -t int_0^inf x^{t-1} F(x) dx, t < 0.  Diverges iff the CDF rises too
    // fast at 0; geometric panels toward 0 detect that.
    double X = far_quantile(mu);
    auto g = [&](double x) { return std::pow(x, t - 1.0) * mu.cdf(x); };
    double total = 0.0;
    double hi = std::min(1.0, X);
    for (int k = 0; k < 1200; ++k) {
        double lo = hi * 0.5;
        double piece = integrate(g, lo, hi, 1e-12);
        total += piece;
        if (mu.cdf(lo) == 0.0) break;
        if (k > 4 && std::abs(piece) > 1e12) return kInf;
        if (k > 8 && std::abs(piece) < 1e-14 * std::abs(total)) break;
        hi = lo;
    }
    double a = 1.0;
    while (a < X) {
        double b = std::min(a * 4.0, X);
        total += integrate(g, a, b, 1e-12);
        a = b;
    }
    // tail with F = 1: int_X^inf x^{t-1} dx = -X^t / t
    total += -std::pow(X, t) / t;
    return -t * total;
}

double cdf_route_mellin_pos(const Measure& mu, double t) {
    // t int_0^inf x^{t-1} (1 - F(x)) dx, t > 0.
    auto g = [&](double x) { return std::pow(x, t - 1.0) * (1.0 - mu.cdf(x)); };
    double body = integrate(g, 0.0, 1.0, 1e-12) + integrate_to_inf(g, 1.0, 1e-12);
    return t * body;
}

// ---- forward declarations (mutual recursion between transform routes) ---
double G_real(const Measure& mu, double s);
double psi_any(const Measure& mu, double t);

// Inverse Stieltjes transform: the s < 0 with G(s) = t, for t in (-A, 0).
double G_inverse(const Measure& mu, double t) {
    if (mu.kind() == Measure::Kind::Transform &&
        mu.transform_rep().which == TransformKind::R) {
        const TransformRep& r = mu.transform_rep();
        // G^{-1}(t) = (R(t) + 1)/t directly
        return (r.eval(t) + 1.0) / t;
    }
    auto [a, b] = bracket_scan_negative([&](double s) { return G_real(mu, s); }, t);
    return invert_monotone([&](double s) { return G_real(mu, s); }, t, a, b);
}

// psi inverse: the t < 0 with psi(t) = u, for u in (-1 + mu({0}), 0).
double psi_inverse(const Measure& mu, double u) {
    if (mu.kind() == Measure::Kind::Transform) {
        const TransformRep& r = mu.transform_rep();
        if (r.which == TransformKind::S) {
            double w = u; // psi^{-1}(u) = u S(u) / (1 + u)
            return w * r.eval(w) / (1.0 + w);
        }
        if (r.which == TransformKind::Eta) {
            // psi = u  <=>  eta = u / (1 + u)
            return solve_on_open_interval(r.eval, u / (1.0 + u), r.domain_left, 0.0);
        }
    }
    auto [a, b] = bracket_scan_negative([&](double t) { return psi_any(mu, t); }, u);
    return invert_monotone([&](double t) { return psi_any(mu, t); }, u, a, b);
}

double G_real(const Measure& mu, double s) {
    if (!(s < 0.0)) throw DomainError("cauchy_G: s must be < 0");
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            if (auto v = detail::closed_G_real(c, s)) return *v;
            if (auto p = detail::closed_psi(c, 1.0 / s)) return (1.0 + *p) / s;
            if (detail::has_density(c) || !detail::atoms(c).empty())
                return mu.memoized(1, s, [&](double v) {
                    return integrate_measure(mu, [&](double x) { return 1.0 / (v - x); });
                });
            if (detail::closed_R(c, -0.5)) {
                // R-only family: solve (R(w)+1)/w = s over the R domain
                double left = detail::r_extension_left(c).value_or(-kInf);
                auto K = [&](double w) { return (detail::closed_R(c, w).value() + 1.0) / w; };
                double w = solve_on_open_interval(K, s, left, 0.0);
                return w;
            }
            break;
        }
        case Measure::Kind::Grid:
            return mu.memoized(1, s, [&](double v) {
                return grid_integrate(mu.grid_rep(), [&](double x) { return 1.0 / (v - x); });
            });
        case Measure::Kind::Cdf:
            return mu.memoized(1, s, [&](double v) { return cdf_route_G(mu, v); });
        case Measure::Kind::Transform: {
            const TransformRep& r = mu.transform_rep();
            switch (r.which) {
                case TransformKind::R: {
                    auto K = [&](double w) { return (r.eval(w) + 1.0) / w; };
                    return solve_on_open_interval(K, s, r.domain_left, 0.0);
                }
                case TransformKind::Psi:
                    return (1.0 + r.eval(1.0 / s)) / s;
                case TransformKind::Eta: {
                    double e = r.eval(1.0 / s);
                    return (1.0 + e / (1.0 - e)) / s;
                }
                case TransformKind::S: {
                    double u = psi_any(mu, 1.0 / s);
                    return (1.0 + u) / s;
                }
                case TransformKind::CumulantC:
                    throw UnsupportedError("Cauchy transform undefined from a cumulant-only representation");
            }
            break;
        }
    }
    throw UnsupportedError("cauchy_G: no route for " + mu.describe());
}

double psi_any(const Measure& mu, double t) {
    if (!(t < 0.0)) throw DomainError("psi: t must be < 0");
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            if (auto v = detail::closed_psi(c, t)) return *v;
            if (auto e = detail::closed_eta(c, t)) return *e / (1.0 - *e);
            if (detail::has_density(c) || !detail::atoms(c).empty())
                return mu.memoized(2, t, [&](double tv) {
                    return integrate_measure(mu,
                                             [&](double x) { return tv * x / (1.0 - tv * x); });
                });
            return (1.0 / t) * G_real(mu, 1.0 / t) - 1.0;
        }
        case Measure::Kind::Grid:
            return mu.memoized(2, t, [&](double tv) {
                return grid_integrate(mu.grid_rep(),
                                      [&](double x) { return tv * x / (1.0 - tv * x); });
            });
        case Measure::Kind::Cdf:
            return mu.memoized(2, t, [&](double tv) { return cdf_route_psi(mu, tv); });
        case Measure::Kind::Transform: {
            const TransformRep& r = mu.transform_rep();
            switch (r.which) {
                case TransformKind::Psi:
                    return r.eval(t);
                case TransformKind::Eta: {
                    double e = r.eval(t);
                    return e / (1.0 - e);
                }
                case TransformKind::R:
                    return (1.0 / t) * G_real(mu, 1.0 / t) - 1.0;
                case TransformKind::S: {
                    // solve psi^{-1}(u) = t over u in (-1 + atom0, 0)
                    return mu.memoized(2, t, [&](double tv) {
                        auto pinv = [&](double u) { return u * r.eval(u) / (1.0 + u); };
                        return solve_on_open_interval(pinv, tv, r.domain_left, 0.0);
                    });
                }
                case TransformKind::CumulantC:
                    throw UnsupportedError("psi undefined from a cumulant-only representation");
            }
            break;
        }
    }
    throw UnsupportedError("psi: no route for " + mu.describe());
}

} // namespace

double cauchy_G(const Measure& mu, double s) { return G_real(mu, s); }

double psi_transform(const Measure& mu, double t) { return psi_any(mu, t); }

double eta_transform(const Measure& mu, double t) {
    if (!(t < 0.0)) throw DomainError("eta: t must be < 0");
    if (mu.kind() == Measure::Kind::Catalog)
        if (auto v = detail::closed_eta(mu.catalog_rep(), t)) return *v;
    if (mu.kind() == Measure::Kind::Transform &&
        mu.transform_rep().which == TransformKind::Eta)
        return mu.transform_rep().eval(t);
    double p = psi_any(mu, t);
    return p / (1.0 + p);
}

double r_transform(const Measure& mu, double t) {
    if (!(t < 0.0)) throw DomainError("R: t must be < 0");
    if (mu.kind() == Measure::Kind::Catalog) {
        if (auto v = detail::closed_R(mu.catalog_rep(), t)) {
            double left = detail::r_extension_left(mu.catalog_rep()).value_or(-kInf);
            if (!(t > left)) throw DomainError("R: t outside (-B, 0)");
            return *v;
        }
    }
    if (mu.kind() == Measure::Kind::Transform) {
        const TransformRep& r = mu.transform_rep();
        if (r.which == TransformKind::R) {
            if (!(t > r.domain_left)) throw DomainError("R: t outside the validity interval");
            return r.eval(t);
        }
        if (r.which == TransformKind::S) {
            // R(t) is the u solving u S(u) = t
            auto f = [&](double u) { return u * r.eval(u); };
            return solve_on_open_interval(f, t, r.domain_left, 0.0);
        }
    }
    double A = neg_moment_A(mu);
    if (!(t > -A)) throw DomainError("R: t outside (-A, 0)");
    return mu.memoized(3, t, [&](double tv) { return tv * G_inverse(mu, tv) - 1.0; });
}

double s_transform(const Measure& mu, double u) {
    if (!(u < 0.0)) throw DomainError("S: u must be < 0");
    if (!(u > -1.0 + mu.atom0())) throw DomainError("S: u outside (-1 + mu({0}), 0)");
    if (mu.kind() == Measure::Kind::Catalog)
        if (auto v = detail::closed_S(mu.catalog_rep(), u)) return *v;
    if (mu.kind() == Measure::Kind::Transform) {
        const TransformRep& r = mu.transform_rep();
        if (r.which == TransformKind::S) return r.eval(u);
        if (r.which == TransformKind::R) {
            // S(u) = R^{-1}(u)/u
            double t = solve_on_open_interval(r.eval, u, r.domain_left, 0.0);
            return t / u;
        }
    }
    return mu.memoized(4, u, [&](double uv) {
        double t = psi_inverse(mu, uv);
        return (1.0 + uv) / uv * t;
    });
}

double cumulant_transform(const Measure& mu, double t) {
    if (t == 0.0) return 0.0;
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            if (t > 0.0 && !(t < detail::cumulant_sup_t(c)))
                throw DomainError("cumulant: t beyond the convergence range");
            if (auto v = detail::closed_cumulant(c, t)) return *v;
            return std::log(integrate_measure(mu, [&](double x) { return std::exp(t * x); }));
        }
        case Measure::Kind::Grid: {
            const GridMeasure& g = mu.grid_rep();
            // factor out the largest exponent so compact grids stay finite
            double m = 0.0;
            if (t > 0.0) {
                double xmax = g.grid.empty() ? 0.0 : g.grid.back();
                for (const auto& a : g.atoms) xmax = std::max(xmax, a.first);
                m = t * xmax;
            }
            double I = grid_integrate(g, [&](double x) { return std::exp(t * x - m); });
            return m + std::log(I);
        }
        case Measure::Kind::Cdf: {
            if (t > 0.0) {
                auto g = [&](double u) { return (1.0 - mu.cdf(u)) * std::exp(t * u); };
                double body = integrate_to_inf(g, 0.0, 1e-12);
                if (!std::isfinite(body)) throw DomainError("cumulant: divergent for t > 0");
                return std::log1p(t * body);
            }
            return std::log(cdf_route_mgf(mu, t));
        }
        case Measure::Kind::Transform: {
            const TransformRep& r = mu.transform_rep();
            if (r.which == TransformKind::CumulantC) {
                if (!(t > r.domain_left) || t > 0.0)
                    throw DomainError("cumulant: t outside the validity interval");
                return r.eval(t);
            }
            throw UnsupportedError("cumulant unavailable for " + mu.describe());
        }
    }
    throw UnsupportedError("cumulant: no route for " + mu.describe());
}

namespace {

// Exact power-moment of a piecewise-linear density: per-panel antiderivative,
// avoiding one quadrature per panel on large grids.
double mellin_grid(const GridMeasure& g, double t) {
    double s = 0.0;
    for (const auto& a : g.atoms) s += a.second * std::pow(a.first, t);
    auto P = [&](double p, double a, double b) {
        if (std::abs(p) < 1e-12) return std::log(b / a);
        return (std::pow(b, p) - std::pow(a, p)) / p;
    };
    for (std::size_t i = 1; i < g.grid.size(); ++i) {
        double a = g.grid[i - 1], b = g.grid[i];
        double d0 = g.density[i - 1], d1 = g.density[i];
        if (d0 == 0.0 && d1 == 0.0) continue;
        double p1 = P(t + 1.0, a, b), p2 = P(t + 2.0, a, b);
        s += (d0 * (b * p1 - p2) + d1 * (p2 - a * p1)) / (b - a);
    }
    return s;
}

} // namespace

double mellin_transform(const Measure& mu, double t) {
    if (t == 0.0) return 1.0;
    if (t < 0.0 && mu.atom0() > 0.0) return kInf;
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            if (auto v = detail::closed_mellin(mu.catalog_rep(), t)) return *v;
            return integrate_measure(mu, [&](double x) { return x == 0.0 ? 0.0 : std::pow(x, t); });
        }
        case Measure::Kind::Grid:
            return mellin_grid(mu.grid_rep(), t);
        case Measure::Kind::Cdf:
            return t < 0.0 ? cdf_route_mellin_neg(mu, t) : cdf_route_mellin_pos(mu, t);
        case Measure::Kind::Transform:
            throw UnsupportedError("Mellin transform unavailable for " + mu.describe());
    }
    throw UnsupportedError("mellin: no route for " + mu.describe());
}

double neg_moment_A(const Measure& mu) {
    if (mu.atom0() > 0.0) return kInf;
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            if (auto v = detail::closed_neg_moment(c)) return *v;
            double val = integrate_measure(mu, [](double x) { return x == 0.0 ? 0.0 : 1.0 / x; });
            return std::isfinite(val) && val < 1e12 ? val : kInf;
        }
        case Measure::Kind::Grid: {
            const GridMeasure& g = mu.grid_rep();
            if (!g.grid.empty() && g.grid.front() == 0.0 && g.density.front() > 0.0) return kInf;
            double val = grid_integrate(g, [](double x) { return x == 0.0 ? 0.0 : 1.0 / x; });
            return std::isfinite(val) && val < 1e14 ? val : kInf;
        }
        case Measure::Kind::Cdf: {
            double v = cdf_route_mellin_neg(mu, -1.0);
            return std::isfinite(v) && v < 1e12 ? v : kInf;
        }
        case Measure::Kind::Transform:
            return mu.transform_rep().neg_moment;
    }
    return kInf;
}

double r_domain_left(const Measure& mu) {
    double A = neg_moment_A(mu);
    return std::isfinite(A) ? -A : -kInf;
}

double s_domain_left(const Measure& mu) { return -1.0 + mu.atom0(); }

double transform_value(const Measure& mu, TransformKind k, double t) {
    switch (k) {
        case TransformKind::R: return r_transform(mu, t);
        case TransformKind::S: return s_transform(mu, t);
        case TransformKind::Psi: return psi_transform(mu, t);
        case TransformKind::Eta: return eta_transform(mu, t);
        case TransformKind::CumulantC: return cumulant_transform(mu, t);
    }
    throw DomainError("unknown transform kind");
}

double integrate_measure(const Measure& mu, const std::function<double(double)>& f,
                         double rel_tol) {
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            double total = detail::atom0(c) * f(0.0);
            for (const auto& a : detail::atoms(c)) total += a.second * f(a.first);
            if (detail::has_density(c)) total += catalog_density_integral(c, f, rel_tol);
            return total;
        }
        case Measure::Kind::Grid:
            return grid_integrate(mu.grid_rep(), f, rel_tol);
        default:
            throw UnsupportedError("integrate_measure needs atom/density data: " + mu.describe());
    }
}

// ---- complex Stieltjes transform ---------------------------------------

std::complex<double> cauchy_G_complex(const Measure& mu, std::complex<double> z) {
    using C = std::complex<double>;
    if (!(z.imag() > 0.0)) throw DomainError("cauchy_G_complex: Im z must be > 0");
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = mu.catalog_rep();
            if (auto v = detail::closed_G_complex(c, z)) return *v;
            C total = detail::atom0(c) / z;
            for (const auto& a : detail::atoms(c)) total += a.second / (z - a.first);
            if (detail::has_density(c)) {
                detail::Interval sp = detail::density_support(c);
                auto g = [&](double x) { return detail::density(c, x) / (z - x); };
                double hi = sp.hi;
                if (!std::isfinite(hi)) {
                    // geometric panels with a relative stopping rule
                    double a = sp.lo + std::max(1.0, std::abs(sp.lo));
                    total += integrate_complex(g, sp.lo, a, 1e-12);
                    int quiet = 0;
                    for (int k = 0; k < 400 && quiet < 2; ++k) {
                        double b = a * 4.0;
                        C piece = integrate_complex(g, a, b, 1e-12);
                        total += piece;
                        if (std::abs(piece) < 1e-13 * std::abs(total)) ++quiet;
                        else quiet = 0;
                        a = b;
                    }
                } else {
                    total += integrate_complex(g, sp.lo, hi, 1e-12);
                }
            }
            return total;
        }
        case Measure::Kind::Grid: {
            const GridMeasure& g = mu.grid_rep();
            C total = g.atom0 / z;
            for (const auto& a : g.atoms) total += a.second / (z - a.first);
            for (std::size_t i = 0; i + 1 < g.grid.size(); ++i) {
                double x0 = g.grid[i], x1 = g.grid[i + 1];
                double d0 = g.density[i], d1 = g.density[i + 1];
                if (d0 == 0.0 && d1 == 0.0) continue;
                auto seg = [&](double x) {
                    double lam = (x - x0) / (x1 - x0);
                    return (d0 + lam * (d1 - d0)) / (z - x);
                };
                total += integrate_complex(seg, x0, x1, 1e-12);
            }
            return total;
        }
        case Measure::Kind::Cdf: {
            double X = far_quantile(mu);
            auto g = [&](double x) {
                C d = z - x;
                return C(mu.cdf(x)) / (d * d);
            };
            C body = integrate_complex(g, 0.0, std::min(1.0, X), 1e-12);
            double a = 1.0;
            while (a < X) {
                double b = std::min(a * 4.0, X);
                body += integrate_complex(g, a, b, 1e-12);
                a = b;
            }
            return -(body + 1.0 / (X - z));
        }
        case Measure::Kind::Transform:
            throw UnsupportedError("complex Cauchy transform unavailable for " + mu.describe());
    }
    throw UnsupportedError("cauchy_G_complex: no route for " + mu.describe());
}

// ---- range detection for combined transform formulas --------------------

RangeInfo detect_range_from_R(const std::function<double(double)>& r, double provisional_left) {
    double D = std::isfinite(provisional_left) ? -provisional_left : kInf;
    auto probe_at = [&](int k) -> double {
        if (std::isfinite(D)) return -D + D * std::pow(0.5, k); // approaches -D
        return -std::pow(2.0, k);
    };
    int k_lo = std::isfinite(D) ? 1 : 0;
    int k_hi = std::isfinite(D) ? 52 : 60;
    double prev_t = 0.0, prev_v = 0.0;
    bool have = false;
    for (int k = k_lo; k <= k_hi; ++k) {
        double t = probe_at(k);
        if (!(t < 0.0) || !(t > -D)) continue;
        double v = r(t);
        if (std::isnan(v)) break;
        if (v <= -1.0) {
            // R exits (-1, 0): the measure's own interval ends where R = -1
            double a = t, b = have ? prev_t : t * 0.5;
            if (!have) {
                while (r(b) <= -1.0) b *= 0.5;
            }
            double t_star = invert_monotone(r, -1.0, std::min(a, b), std::max(a, b));
            return RangeInfo{-t_star, 0.0};
        }
        prev_t = t;
        prev_v = v;
        have = true;
    }
    if (!have) throw BracketError("R range detection: no usable probe");
    // No crossing: the formula's own interval is the measure's interval and
    // the limit value L > -1 carries the atom, atom0 = 1 + L.
    double L = prev_v;
    double a0 = std::max(0.0, 1.0 + L);
    if (a0 < 1e-12) a0 = 0.0;
    return RangeInfo{D, a0};
}

double detect_atom0_from_eta(const std::function<double(double)>& eta) {
    // eta(t) -> 1 - 1/mu({0}) (finite) or -inf as t -> -inf
    double prev = 0.0;
    bool have = false;
    for (int k = 8; k <= 56; k += 4) {
        double v = eta(-std::pow(2.0, k));
        if (std::isnan(v)) break;
        if (v < -1e10) return 0.0;
        if (have && std::abs(v - prev) < 1e-9 * (1.0 + std::abs(v)))
            return 1.0 / (1.0 - v);
        prev = v;
        have = true;
    }
    // Never stabilized: a bounded tail still pins the atom; a drifting one
    // means divergence (no atom).
    if (have && prev > -64.0) return 1.0 / (1.0 - prev);
    return 0.0;
}

double detect_A_from_eta(const std::function<double(double)>& eta, double atom0) {
    if (atom0 > 0.0) return kInf;
    // A = -lim_{t -> -inf} t (1 + psi(t)) = -lim t eta(t) / ((1 - eta(t)) ... )
    // With psi = eta/(1-eta): t(1 + psi) = t/(1 - eta).
    double prev = 0.0;
    bool have = false;
    for (int k = 16; k <= 52; k += 4) {
        double t = -std::pow(2.0, k);
        double e;
        try {
            e = eta(t);
        } catch (const BracketError&) {
            break; // probe left the numerically reachable range
        }
        double v = -t / (1.0 - e);
        if (!std::isfinite(v)) return kInf;
        if (have) {
            if (v > 1e13) return kInf;
            if (std::abs(v - prev) < 1e-6 * (1.0 + std::abs(v))) return v;
        }
        prev = v;
        have = true;
    }
    // never stabilized: slow divergence (e.g. logarithmic), so A = inf
    return kInf;
}

double detect_A_from_S(const std::function<double(double)>& s, double atom0) {
    double edge = -1.0 + atom0;
    double gap = -edge;
    double prev = 0.0;
    bool have = false;
    // Probes near the edge can require very deep numerical inversions when S
    // itself is computed from psi, so bail out of divergent trends early: any
    // value beyond 1e8 is indistinguishable from an infinite negative moment
    // for domain purposes.
    for (int k = 8; k <= 40; k += 4) {
        double u = edge + gap * std::pow(0.5, k);
        double v;
        try {
            v = -u * s(u);
        } catch (const BracketError&) {
            break; // probe left the numerically reachable range
        }
        if (!std::isfinite(v) || v > 1e8) return kInf;
        if (have && std::abs(v - prev) < 1e-6 * (1.0 + std::abs(v))) return v;
        prev = v;
        have = true;
    }
    // never stabilized: slow divergence (e.g. logarithmic), so A = inf
    return kInf;
}

} // namespace freeconv
