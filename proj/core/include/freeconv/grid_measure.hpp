#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace freeconv {

// Discretized measure on [0, inf): a mass at 0, isolated atoms, and a density
// sampled on a strictly increasing grid (interpreted piecewise-linearly).
struct GridMeasure {
    double atom0 = 0.0;
    std::vector<std::pair<double, double>> atoms; // (location > 0, mass), sorted
    std::vector<double> grid;                     // strictly increasing abscissae
    std::vector<double> density;                  // same length as grid

    double total_mass() const;
    double density_mass() const;
};

// Validating factory: checks shapes, non-negativity and total mass.  A mass
// defect below `renormalize_tol` (default 1e-4) is folded into the density
// part; a larger defect is rejected with DomainError.
GridMeasure make_grid_measure(GridMeasure raw, double renormalize_tol = 1e-4);

// Right-continuous CDF of the grid measure.
double grid_cdf(const GridMeasure& g, double t);

// Generalized inverse inf{t : F(t) >= p}.
double grid_quantile(const GridMeasure& g, double p);

// Piecewise-linear density value (0 outside the grid); atoms excluded.
double grid_density_at(const GridMeasure& g, double x);

// a0 f(0) + sum_i w_i f(x_i) + int f(x) rho(x) dx over the density panels.
double grid_integrate(const GridMeasure& g, const std::function<double(double)>& f,
                      double rel_tol = 1e-11);

} // namespace freeconv
