#pragma once

#include "freeconv/grid_measure.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace freeconv {

enum class Family {
    Dirac,
    Uniform01,
    Exponential,
    Poisson,
    MarchenkoPastur,
    Semicircle,
    FreeStable,
    BooleanStable,
    ClassicalStable,
    Pareto,
    Dagum,
    Frechet,
};

const char* family_name(Family f);

// Which transform defines a lazily represented measure.
enum class TransformKind { R, S, Psi, Eta, CumulantC };

const char* transform_kind_name(TransformKind k);

// A measure known only through one transform on an interval (d_left, 0).
struct TransformRep {
    TransformKind which = TransformKind::R;
    std::function<double(double)> eval;
    double domain_left = 0.0; // left end of the validity interval; -inf allowed
    double atom0 = 0.0;
    double neg_moment = 0.0;  // A in (0, inf]
    std::string label;
};

// A measure known through an explicit CDF (plus whatever extras the
// construction could supply).
struct CdfRep {
    std::function<double(double)> cdf; // right-continuous on [0, inf)
    double atom0 = 0.0;
    std::function<double(double)> density;  // optional
    std::function<double(double)> quantile; // optional
    std::vector<double> jump_hints;         // candidate discontinuities, for KS grids
    std::string label;
};

struct CatalogRep {
    Family family;
    double p1 = 0.0; // a / lambda / alpha / m
    double p2 = 0.0; // v (semicircle only)
};

class Measure {
public:
    enum class Kind { Catalog, Grid, Transform, Cdf };

    static Measure from_catalog(CatalogRep rep, bool id_star);
    static Measure from_grid(GridMeasure g, bool id_star = false);
    static Measure from_transform(TransformRep rep);
    static Measure from_cdf(CdfRep rep, bool id_star = false);

    Kind kind() const;
    const CatalogRep& catalog_rep() const;    // kind() == Catalog
    const GridMeasure& grid_rep() const;      // kind() == Grid
    const TransformRep& transform_rep() const;// kind() == Transform
    const CdfRep& cdf_rep() const;            // kind() == Cdf

    double atom0() const;
    bool id_star() const; // known member of the classical convolution semigroup

    // Distribution function access; throws UnsupportedError for transform-defined
    // measures (densification goes through the subordination oracle instead).
    double cdf(double t) const;
    double quantile(double p) const;
    double density(double x) const;

    // Deterministic sampling: draw i depends only on (seed, i).
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    bool has_cdf() const;
    bool has_density() const;

    // Locations where the CDF may jump (atoms); best effort for derived kinds.
    std::vector<double> jump_locations() const;

    std::string describe() const;

    // Memoized scalar evaluation shared by every copy of this measure.
    // Quadrature-backed transform routes use it so repeated probes (bracket
    // scans, inversions) pay for each abscissa only once.  Thread-safe.
    double memoized(int slot, double x, const std::function<double(double)>& compute) const;

private:
    explicit Measure(std::shared_ptr<const struct MeasureRep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const struct MeasureRep> rep_;
};

// Catalog factories.
Measure dirac(double a);
Measure uniform01();
Measure exponential();
Measure poisson(double lambda);
Measure marchenko_pastur(double lambda);
Measure semicircle(double m, double v);
Measure free_stable(double alpha);
Measure boolean_stable(double alpha);
Measure classical_stable(double alpha);
Measure pareto(double alpha);
Measure dagum(double alpha);
Measure frechet(double alpha);

// w * delta_0 + (1 - w) * mu for a CDF-capable mu; used to study atom rules.
Measure mix_with_atom_at_zero(double w, const Measure& mu);

// Push-forward by x -> x^c (c != 0; c < 0 requires mu({0}) = 0).
Measure power(const Measure& mu, double c);

// Push-forward by x -> c x (c >= 0; c = 0 gives delta_0).
Measure dilate(const Measure& mu, double c);

// Densify a CDF-capable measure onto n panels covering its support up to the
// (1 - tail) quantile; atoms of catalog measures are preserved exactly.
GridMeasure densify(const Measure& mu, std::size_t n = 4096, double tail = 1e-12);

} // namespace freeconv
