#include "freeconv/grid_measure.hpp"
#include "freeconv/errors.hpp"
#include "freeconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace freeconv {

namespace {

// trapezoid mass of the piecewise-linear density
double trapezoid_mass(const std::vector<double>& x, const std::vector<double>& d) {
    double m = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        m += 0.5 * (d[i] + d[i - 1]) * (x[i] - x[i - 1]);
    return m;
}

} // namespace

double GridMeasure::density_mass() const { return trapezoid_mass(grid, density); }

double GridMeasure::total_mass() const {
    double m = atom0 + density_mass();
    for (const auto& a : atoms) m += a.second;
    return m;
}

GridMeasure make_grid_measure(GridMeasure raw, double renormalize_tol) {
    if (raw.grid.size() != raw.density.size())
        throw DomainError("grid measure: grid and density lengths differ");
    if (raw.grid.size() == 1)
        throw DomainError("grid measure: density grid needs at least two nodes");
    if (raw.atom0 < 0.0) throw DomainError("grid measure: atom0 must be >= 0");
    for (std::size_t i = 1; i < raw.grid.size(); ++i)
        if (!(raw.grid[i] > raw.grid[i - 1]))
            throw DomainError("grid measure: abscissae must be strictly increasing");
    if (!raw.grid.empty() && raw.grid.front() < 0.0)
        throw DomainError("grid measure: support must lie in [0, inf)");
    for (double d : raw.density) {
        if (std::isnan(d)) throw DomainError("grid measure: NaN density sample");
        if (d < -1e-12) throw DomainError("grid measure: negative density sample");
    }
    for (double& d : raw.density) d = std::max(d, 0.0);
    std::sort(raw.atoms.begin(), raw.atoms.end());
    for (const auto& a : raw.atoms) {
        if (!(a.first > 0.0)) throw DomainError("grid measure: atom locations must be > 0 (use atom0)");
        if (a.second < 0.0) throw DomainError("grid measure: negative atom mass");
    }
    double mass = raw.total_mass();
    double defect = std::abs(mass - 1.0);
    if (defect > renormalize_tol)
        throw DomainError("grid measure: total mass " + std::to_string(mass) +
                          " deviates from 1 beyond tolerance " + std::to_string(renormalize_tol));
    if (defect > 0.0 && !raw.density.empty()) {
        double dm = raw.density_mass();
        if (dm > 0.0) {
            double target = dm - (mass - 1.0);
            if (target < 0.0)
                throw DomainError("grid measure: renormalization would need negative density mass");
            double scale = target / dm;
            for (double& d : raw.density) d *= scale;
        }
    }
    return raw;
}

double grid_cdf(const GridMeasure& g, double t) {
    if (t < 0.0) throw DomainError("cdf: argument must be >= 0");
    double f = g.atom0;
    for (const auto& a : g.atoms) {
        if (a.first <= t) f += a.second;
        else break;
    }
    const auto& x = g.grid;
    const auto& d = g.density;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (t >= x[i]) {
            f += 0.5 * (d[i] + d[i - 1]) * (x[i] - x[i - 1]);
        } else {
            if (t > x[i - 1]) {
                double h = t - x[i - 1];
                double w = x[i] - x[i - 1];
                double dt = d[i - 1] + (d[i] - d[i - 1]) * h / w;
                f += 0.5 * (d[i - 1] + dt) * h;
            }
            break;
        }
    }
    return std::min(f, 1.0);
}

double grid_quantile(const GridMeasure& g, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p must be in [0,1]");
    if (p <= g.atom0) return 0.0;
    double edge = g.grid.empty() ? 0.0 : g.grid.back();
    if (!g.atoms.empty()) edge = std::max(edge, g.atoms.back().first);
    if (p >= grid_cdf(g, edge)) return edge;
    // generalized inverse inf{t : F(t) >= p} by bisection; F right-continuous,
    // so keep the upper endpoint once F(hi) >= p
    double lo = 0.0, hi = edge;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (grid_cdf(g, mid) >= p) hi = mid;
        else lo = mid;
    }
    return hi;
}

double grid_density_at(const GridMeasure& g, double x) {
    const auto& xs = g.grid;
    if (xs.size() < 2 || x < xs.front() || x > xs.back()) return 0.0;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = it == xs.end() ? xs.size() - 1 : static_cast<std::size_t>(it - xs.begin());
    if (i == 0) i = 1;
    double w = xs[i] - xs[i - 1];
    double lam = (x - xs[i - 1]) / w;
    return g.density[i - 1] * (1.0 - lam) + g.density[i] * lam;
}

double grid_integrate(const GridMeasure& g, const std::function<double(double)>& f,
                      double rel_tol) {
    double s = 0.0;
    if (g.atom0 > 0.0) s += g.atom0 * f(0.0);
    for (const auto& a : g.atoms) s += a.second * f(a.first);
    const auto& x = g.grid;
    const auto& d = g.density;
    for (std::size_t i = 1; i < x.size(); ++i) {
        double a0 = x[i - 1], a1 = x[i];
        double d0 = d[i - 1], d1 = d[i];
        if (d0 == 0.0 && d1 == 0.0) continue;
        auto integrand = [&](double t) {
            double lam = (t - a0) / (a1 - a0);
            return (d0 * (1.0 - lam) + d1 * lam) * f(t);
        };
        s += integrate(integrand, a0, a1, rel_tol, 1e-300);
    }
    return s;
}

} // namespace freeconv
