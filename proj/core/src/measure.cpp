#include "freeconv/measure.hpp"

#include "catalog_detail.hpp"
#include "freeconv/errors.hpp"
#include "freeconv/quadrature.hpp"
#include "freeconv/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <variant>

namespace freeconv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

struct MeasureRep {
    std::variant<CatalogRep, GridMeasure, TransformRep, CdfRep> rep;
    bool id_star = false;
    mutable std::mutex memo_mu;
    mutable std::map<std::pair<int, double>, double> memo;
};

const char* family_name(Family f) {
    switch (f) {
        case Family::Dirac: return "dirac";
        case Family::Uniform01: return "uniform01";
        case Family::Exponential: return "exponential";
        case Family::Poisson: return "poisson";
        case Family::MarchenkoPastur: return "mp";
        case Family::Semicircle: return "semicircle";
        case Family::FreeStable: return "free_stable";
        case Family::BooleanStable: return "boolean_stable";
        case Family::ClassicalStable: return "classical_stable";
        case Family::Pareto: return "pareto";
        case Family::Dagum: return "dagum";
        case Family::Frechet: return "frechet";
    }
    return "?";
}

const char* transform_kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::R: return "R";
        case TransformKind::S: return "S";
        case TransformKind::Psi: return "psi";
        case TransformKind::Eta: return "eta";
        case TransformKind::CumulantC: return "C";
    }
    return "?";
}

Measure Measure::from_catalog(CatalogRep rep, bool id_star) {
    auto r = std::make_shared<MeasureRep>();
    r->rep = rep;
    r->id_star = id_star;
    return Measure(std::move(r));
}

Measure Measure::from_grid(GridMeasure g, bool id_star) {
    auto r = std::make_shared<MeasureRep>();
    r->rep = make_grid_measure(std::move(g));
    r->id_star = id_star;
    return Measure(std::move(r));
}

Measure Measure::from_transform(TransformRep rep) {
    if (!rep.eval) throw DomainError("transform-defined measure needs an eval function");
    if (!(rep.domain_left < 0.0)) throw DomainError("transform domain must be an interval (d, 0), d < 0");
    if (rep.atom0 < 0.0 || rep.atom0 > 1.0) throw DomainError("atom0 must lie in [0,1]");
    // Monotonicity probe: R, psi, eta increase on (d,0); S decreases; C increases.
    {
        double lo = std::isfinite(rep.domain_left) ? rep.domain_left : -64.0;
        double prev = 0.0;
        bool have = false;
        bool increasing = rep.which != TransformKind::S;
        for (int i = 1; i <= 7; ++i) {
            double t = lo + (0.0 - lo) * i / 8.0;
            if (!(t < 0.0)) break;
            double v = rep.eval(t);
            if (std::isnan(v)) continue;
            if (have) {
                bool ok = increasing ? (v >= prev - 1e-9 * (1.0 + std::abs(v)))
                                     : (v <= prev + 1e-9 * (1.0 + std::abs(v)));
                if (!ok)
                    throw DomainError("transform-defined measure (" + rep.label + "): " +
                                      transform_kind_name(rep.which) + " fails the monotonicity probe");
            }
            prev = v;
            have = true;
        }
    }
    auto r = std::make_shared<MeasureRep>();
    r->rep = std::move(rep);
    return Measure(std::move(r));
}

Measure Measure::from_cdf(CdfRep rep, bool id_star) {
    if (!rep.cdf) throw DomainError("cdf-defined measure needs a cdf function");
    if (rep.atom0 < 0.0 || rep.atom0 > 1.0) throw DomainError("atom0 must lie in [0,1]");
    auto r = std::make_shared<MeasureRep>();
    r->rep = std::move(rep);
    r->id_star = id_star;
    return Measure(std::move(r));
}

double Measure::memoized(int slot, double x, const std::function<double(double)>& compute) const {
    std::pair<int, double> key(slot, x);
    {
        std::lock_guard<std::mutex> lk(rep_->memo_mu);
        auto it = rep_->memo.find(key);
        if (it != rep_->memo.end()) return it->second;
    }
    double v = compute(x);
    std::lock_guard<std::mutex> lk(rep_->memo_mu);
    if (rep_->memo.size() < 200000) rep_->memo.emplace(key, v);
    return v;
}

Measure::Kind Measure::kind() const {
    switch (rep_->rep.index()) {
        case 0: return Kind::Catalog;
        case 1: return Kind::Grid;
        case 2: return Kind::Transform;
        default: return Kind::Cdf;
    }
}

const CatalogRep& Measure::catalog_rep() const { return std::get<CatalogRep>(rep_->rep); }
const GridMeasure& Measure::grid_rep() const { return std::get<GridMeasure>(rep_->rep); }
const TransformRep& Measure::transform_rep() const { return std::get<TransformRep>(rep_->rep); }
const CdfRep& Measure::cdf_rep() const { return std::get<CdfRep>(rep_->rep); }

double Measure::atom0() const {
    switch (kind()) {
        case Kind::Catalog: return detail::atom0(catalog_rep());
        case Kind::Grid: return grid_rep().atom0;
        case Kind::Transform: return transform_rep().atom0;
        case Kind::Cdf: return cdf_rep().atom0;
    }
    return 0.0;
}

bool Measure::id_star() const { return rep_->id_star; }

bool Measure::has_cdf() const {
    switch (kind()) {
        case Kind::Catalog: return detail::has_cdf(catalog_rep());
        case Kind::Transform: return false;
        default: return true;
    }
}

bool Measure::has_density() const {
    switch (kind()) {
        case Kind::Catalog: return detail::has_density(catalog_rep());
        case Kind::Grid: return !grid_rep().grid.empty();
        case Kind::Transform: return false;
        case Kind::Cdf: return static_cast<bool>(cdf_rep().density);
    }
    return false;
}

double Measure::cdf(double t) const {
    if (t < 0.0) throw DomainError("cdf: argument must be >= 0");
    switch (kind()) {
        case Kind::Catalog:
            return detail::cdf(catalog_rep(), t);
        case Kind::Grid:
            return grid_cdf(grid_rep(), t);
        case Kind::Cdf:
            return std::clamp(cdf_rep().cdf(t), 0.0, 1.0);
        case Kind::Transform:
            throw UnsupportedError("cdf unavailable for transform-defined measure (" +
                                   transform_rep().label + "); densify via the subordination oracle");
    }
    return 0.0;
}

double Measure::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p must be in [0,1]");
    switch (kind()) {
        case Kind::Catalog:
            return detail::quantile(catalog_rep(), p);
        case Kind::Grid:
            return grid_quantile(grid_rep(), p);
        case Kind::Cdf: {
            const CdfRep& r = cdf_rep();
            if (r.quantile) return r.quantile(p);
            if (p <= r.atom0) return 0.0;
            double hi = 1.0;
            while (cdf(hi) < p && hi < 1e300) hi *= 4.0;
            double lo = 0.0;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (cdf(mid) >= p) hi = mid;
                else lo = mid;
                if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
            }
            return hi;
        }
        case Kind::Transform:
            throw UnsupportedError("quantile unavailable for transform-defined measure (" +
                                   transform_rep().label + ")");
    }
    return 0.0;
}

double Measure::density(double x) const {
    switch (kind()) {
        case Kind::Catalog:
            if (!detail::has_density(catalog_rep()))
                throw UnsupportedError(std::string("density unavailable for ") +
                                       family_name(catalog_rep().family));
            return detail::density(catalog_rep(), x);
        case Kind::Grid:
            return grid_density_at(grid_rep(), x);
        case Kind::Cdf:
            if (!cdf_rep().density)
                throw UnsupportedError("density unavailable for cdf-defined measure (" +
                                       cdf_rep().label + ")");
            return cdf_rep().density(x);
        case Kind::Transform:
            throw UnsupportedError("density unavailable for transform-defined measure (" +
                                   transform_rep().label + ")");
    }
    return 0.0;
}

std::vector<double> Measure::sample(std::size_t n, std::uint64_t seed) const {
    if (kind() == Kind::Transform)
        throw UnsupportedError("sampling unavailable for transform-defined measure (" +
                               transform_rep().label + ")");
    if (kind() == Kind::Catalog && catalog_rep().family == Family::FreeStable)
        throw UnsupportedError("sampling unavailable for free_stable (transform-only family)");
    CounterRng rng(seed);
    std::vector<double> out(n);
    bool fast = false;
    if (kind() == Kind::Catalog) {
        switch (catalog_rep().family) {
            case Family::Dirac:
            case Family::Uniform01:
            case Family::Exponential:
            case Family::Poisson:
            case Family::BooleanStable:
            case Family::Pareto:
            case Family::Dagum:
            case Family::Frechet:
                fast = true; // closed or cheap quantile
            default:
                break;
        }
    }
    if (kind() == Kind::Cdf && cdf_rep().quantile) fast = true;
    if (fast || kind() == Kind::Grid) {
        for (std::size_t i = 0; i < n; ++i) out[i] = quantile(rng.uniform(i));
        return out;
    }
    // Numeric-quantile families: build a CDF table once and interpolate.
    const double p_lo = 1e-9, p_hi = 1.0 - 1e-9;
    double a0 = atom0();
    double x_lo = quantile(std::max(a0 + 1e-12, p_lo));
    double x_hi = quantile(p_hi);
    const std::size_t m = 2048;
    std::vector<double> xs(m + 1), Fs(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        xs[j] = x_lo + (x_hi - x_lo) * j / m;
        Fs[j] = cdf(xs[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform(i);
        if (u <= a0) {
            out[i] = 0.0;
            continue;
        }
        if (u <= Fs.front()) {
            out[i] = xs.front();
            continue;
        }
        if (u >= Fs.back()) {
            out[i] = quantile(u); // rare tail draws get the exact inversion
            continue;
        }
        auto it = std::lower_bound(Fs.begin(), Fs.end(), u);
        std::size_t j = static_cast<std::size_t>(it - Fs.begin());
        double f0 = Fs[j - 1], f1 = Fs[j];
        double lam = f1 > f0 ? (u - f0) / (f1 - f0) : 0.5;
        out[i] = xs[j - 1] + lam * (xs[j] - xs[j - 1]);
    }
    return out;
}

std::vector<double> Measure::jump_locations() const {
    std::vector<double> out;
    if (atom0() > 0.0) out.push_back(0.0);
    switch (kind()) {
        case Kind::Catalog:
            for (const auto& a : detail::atoms(catalog_rep())) out.push_back(a.first);
            break;
        case Kind::Grid:
            for (const auto& a : grid_rep().atoms) out.push_back(a.first);
            break;
        case Kind::Cdf:
            for (double j : cdf_rep().jump_hints)
                if (j > 0.0) out.push_back(j);
            break;
        case Kind::Transform:
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Measure::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind()) {
        case Kind::Catalog: {
            const CatalogRep& c = catalog_rep();
            os << family_name(c.family);
            switch (c.family) {
                case Family::Dirac: os << "(a=" << c.p1 << ")"; break;
                case Family::Poisson:
                case Family::MarchenkoPastur: os << "(lambda=" << c.p1 << ")"; break;
                case Family::Semicircle: os << "(m=" << c.p1 << ",v=" << c.p2 << ")"; break;
                case Family::Uniform01:
                case Family::Exponential: break;
                default: os << "(alpha=" << c.p1 << ")"; break;
            }
            break;
        }
        case Kind::Grid: {
            const GridMeasure& g = grid_rep();
            os << "grid[atom0=" << g.atom0 << ", atoms=" << g.atoms.size()
               << ", nodes=" << g.grid.size() << "]";
            break;
        }
        case Kind::Transform: {
            const TransformRep& t = transform_rep();
            os << transform_kind_name(t.which) << "-defined[" << t.label << ", atom0=" << t.atom0
               << ", A=" << t.neg_moment << "]";
            break;
        }
        case Kind::Cdf:
            os << "cdf-defined[" << cdf_rep().label << ", atom0=" << cdf_rep().atom0 << "]";
            break;
    }
    return os.str();
}

// ---- catalog factories --------------------------------------------------

namespace {
Measure make_catalog(Family f, double p1, double p2 = 0.0) {
    return Measure::from_catalog(CatalogRep{f, p1, p2}, detail::default_id_star(f));
}
void require_alpha01(double a, const char* who) {
    if (!(a > 0.0 && a < 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0,1)");
}
} // namespace

Measure dirac(double a) {
    if (!(a >= 0.0)) throw DomainError("dirac: location must be >= 0");
    return make_catalog(Family::Dirac, a);
}
Measure uniform01() { return make_catalog(Family::Uniform01, 0.0); }
Measure exponential() { return make_catalog(Family::Exponential, 0.0); }
Measure poisson(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("poisson: lambda must be > 0");
    return make_catalog(Family::Poisson, lambda);
}
Measure marchenko_pastur(double lambda) {
    if (!(lambda > 0.0)) throw DomainError("mp: lambda must be > 0");
    return make_catalog(Family::MarchenkoPastur, lambda);
}
Measure semicircle(double m, double v) {
    if (!(v > 0.0)) throw DomainError("semicircle: variance must be > 0");
    if (!(m >= 2.0 * std::sqrt(v)))
        throw DomainError("semicircle: requires m >= 2 sqrt(v) so the support stays in [0, inf)");
    return make_catalog(Family::Semicircle, m, v);
}
Measure free_stable(double alpha) {
    require_alpha01(alpha, "free_stable");
    return make_catalog(Family::FreeStable, alpha);
}
Measure boolean_stable(double alpha) {
    require_alpha01(alpha, "boolean_stable");
    return make_catalog(Family::BooleanStable, alpha);
}
Measure classical_stable(double alpha) {
    require_alpha01(alpha, "classical_stable");
    return make_catalog(Family::ClassicalStable, alpha);
}
Measure pareto(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("pareto: alpha must be > 0");
    return make_catalog(Family::Pareto, alpha);
}
Measure dagum(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("dagum: alpha must be > 0");
    return make_catalog(Family::Dagum, alpha);
}
Measure frechet(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("frechet: alpha must be > 0");
    return make_catalog(Family::Frechet, alpha);
}

Measure mix_with_atom_at_zero(double w, const Measure& mu) {
    if (!(w >= 0.0 && w < 1.0)) throw DomainError("mixture: weight must lie in [0,1)");
    if (!mu.has_cdf()) throw UnsupportedError("mixture: base measure must have a CDF");
    if (w == 0.0) return mu;
    CdfRep r;
    Measure base = mu;
    r.cdf = [w, base](double t) { return w + (1.0 - w) * base.cdf(t); };
    r.atom0 = w + (1.0 - w) * mu.atom0();
    if (mu.has_density()) r.density = [w, base](double x) { return (1.0 - w) * base.density(x); };
    r.jump_hints = mu.jump_locations();
    r.label = "mix(" + std::to_string(w) + " delta0, " + mu.describe() + ")";
    return Measure::from_cdf(std::move(r));
}

Measure power(const Measure& mu, double c) {
    if (c == 0.0) throw DomainError("power: exponent must be nonzero");
    if (c == 1.0) return mu;
    if (c < 0.0 && mu.atom0() > 0.0)
        throw DomainError("power: negative exponent requires mu({0}) = 0");
    if (mu.kind() == Measure::Kind::Catalog && mu.catalog_rep().family == Family::Dirac) {
        double a = mu.catalog_rep().p1;
        if (a == 0.0) return dirac(0.0); // c > 0 here
        return dirac(std::pow(a, c));
    }
    if (mu.kind() == Measure::Kind::Transform)
        throw UnsupportedError("power: unavailable for transform-defined measures");
    if (mu.kind() == Measure::Kind::Grid) {
        const GridMeasure& g = mu.grid_rep();
        GridMeasure out;
        out.atom0 = g.atom0;
        for (const auto& a : g.atoms) out.atoms.emplace_back(std::pow(a.first, c), a.second);
        std::sort(out.atoms.begin(), out.atoms.end());
        std::size_t n = g.grid.size();
        out.grid.reserve(n);
        out.density.reserve(n);
        auto push = [&](std::size_t i) {
            double x = g.grid[i];
            if (x <= 0.0) return; // node at 0 carries no density once transformed
            double y = std::pow(x, c);
            double jac = std::abs(c) * std::pow(x, c - 1.0);
            out.grid.push_back(y);
            out.density.push_back(g.density[i] / jac);
        };
        if (c > 0.0)
            for (std::size_t i = 0; i < n; ++i) push(i);
        else
            for (std::size_t i = n; i-- > 0;) push(i);
        return Measure::from_grid(std::move(out));
    }
    // catalog-with-cdf or cdf-defined
    Measure base = mu;
    CdfRep r;
    r.label = "pow(" + mu.describe() + ", " + std::to_string(c) + ")";
    bool has_d = mu.has_density();
    if (c > 0.0) {
        r.atom0 = mu.atom0();
        r.cdf = [base, c](double t) { return t <= 0.0 ? base.cdf(0.0) : base.cdf(std::pow(t, 1.0 / c)); };
        r.quantile = [base, c](double p) { return std::pow(base.quantile(p), c); };
    } else {
        r.atom0 = 0.0;
        r.cdf = [base, c](double t) {
            if (t <= 0.0) return 0.0;
            double y = std::pow(t, 1.0 / c);
            // left limit of the base CDF; base has no atom at 0 (checked above)
            double eps = std::max(y * 1e-14, 1e-300);
            return 1.0 - base.cdf(y - eps >= 0.0 ? y - eps : 0.0);
        };
    }
    if (has_d) {
        r.density = [base, c](double y) {
            if (y <= 0.0) return 0.0;
            double x = std::pow(y, 1.0 / c);
            double jac = std::abs(c) * std::pow(x, c - 1.0); // dy/dx at x
            return base.density(x) / jac;
        };
    }
    for (double j : mu.jump_locations())
        if (j > 0.0) r.jump_hints.push_back(std::pow(j, c));
    return Measure::from_cdf(std::move(r));
}

Measure dilate(const Measure& mu, double c) {
    if (c < 0.0) throw DomainError("dilate: scale must be >= 0");
    if (c == 0.0) return dirac(0.0);
    if (c == 1.0) return mu;
    switch (mu.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& cat = mu.catalog_rep();
            if (cat.family == Family::Dirac) return dirac(c * cat.p1);
            if (cat.family == Family::Semicircle) return semicircle(c * cat.p1, c * c * cat.p2);
            if (cat.family == Family::FreeStable) {
                // transform-only family: stay transform-defined via R(ct)
                double alpha = cat.p1;
                TransformRep t;
                t.which = TransformKind::R;
                t.eval = [alpha, c](double x) { return -std::pow(-c * x, alpha); };
                t.domain_left = -kInf;
                t.atom0 = 0.0;
                t.neg_moment = 1.0 / c; // A scales as A/c
                t.label = "dilate(free_stable(" + std::to_string(alpha) + "), " + std::to_string(c) + ")";
                return Measure::from_transform(std::move(t));
            }
            break; // generic cdf route below
        }
        case Measure::Kind::Grid: {
            GridMeasure g = mu.grid_rep();
            for (auto& a : g.atoms) a.first *= c;
            for (auto& x : g.grid) x *= c;
            for (auto& d : g.density) d /= c;
            return Measure::from_grid(std::move(g));
        }
        case Measure::Kind::Transform: {
            TransformRep t = mu.transform_rep();
            TransformRep out;
            out.which = t.which;
            out.atom0 = t.atom0;
            out.label = "dilate(" + t.label + ", " + std::to_string(c) + ")";
            auto parent = std::make_shared<TransformRep>(t);
            switch (t.which) {
                case TransformKind::R:
                case TransformKind::Psi:
                case TransformKind::Eta:
                case TransformKind::CumulantC:
                    out.eval = [parent, c](double x) { return parent->eval(c * x); };
                    out.domain_left = t.domain_left / c;
                    break;
                case TransformKind::S:
                    out.eval = [parent, c](double u) { return parent->eval(u) / c; };
                    out.domain_left = t.domain_left;
                    break;
            }
            out.neg_moment = std::isfinite(t.neg_moment) ? t.neg_moment / c : kInf;
            return Measure::from_transform(std::move(out));
        }
        case Measure::Kind::Cdf:
            break;
    }
    Measure base = mu;
    CdfRep r;
    r.atom0 = mu.atom0();
    r.label = "dilate(" + mu.describe() + ", " + std::to_string(c) + ")";
    r.cdf = [base, c](double t) { return base.cdf(t / c); };
    if (mu.has_density()) r.density = [base, c](double x) { return base.density(x / c) / c; };
    r.quantile = [base, c](double p) { return c * base.quantile(p); };
    for (double j : mu.jump_locations())
        if (j > 0.0) r.jump_hints.push_back(c * j);
    // dilation keeps membership in the classical convolution semigroup
    return Measure::from_cdf(std::move(r), mu.id_star());
}

GridMeasure densify(const Measure& mu, std::size_t n, double tail) {
    if (!mu.has_cdf()) throw UnsupportedError("densify: measure has no CDF representation");
    if (n < 8) throw DomainError("densify: need at least 8 panels");
    GridMeasure out;
    out.atom0 = mu.atom0();
    // Exactly representable atom lists pass through unchanged.
    std::vector<std::pair<double, double>> atoms;
    if (mu.kind() == Measure::Kind::Catalog) atoms = detail::atoms(mu.catalog_rep());
    else if (mu.kind() == Measure::Kind::Grid) atoms = mu.grid_rep().atoms;
    double atom_mass = 0.0;
    for (const auto& a : atoms) atom_mass += a.second;
    out.atoms = std::move(atoms);
    double cont_mass = 1.0 - out.atom0 - atom_mass;
    if (cont_mass <= 1e-12) {
        if (out.atoms.empty() && out.atom0 < 1.0 - 1e-9)
            throw UnsupportedError("densify: continuous part has no mass and no atoms found");
        return make_grid_measure(std::move(out));
    }
    if (!out.atoms.empty() && cont_mass > 1e-12 && mu.kind() != Measure::Kind::Grid)
        throw UnsupportedError("densify: mixed atoms+density supported only for grid measures");
    if (!mu.has_density())
        throw UnsupportedError("densify: measure has no density to sample");
    // Equal-mass abscissae cluster nodes where the density is large or singular.
    double p0 = out.atom0 + cont_mass * tail;
    double p1 = out.atom0 + cont_mass * (1.0 - tail);
    std::vector<double> seed;
    seed.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        double p = p0 + (p1 - p0) * static_cast<double>(j) / n;
        double x = mu.quantile(p);
        if (seed.empty() || x > seed.back()) seed.push_back(x);
    }
    // Refine each panel until its trapezoid mass matches the CDF increment;
    // wide tail panels and curved regions split until the discrete measure
    // carries the right mass everywhere.
    GridMeasure refined;
    refined.atom0 = out.atom0;
    refined.atoms = out.atoms;
    refined.grid.push_back(seed.front());
    refined.density.push_back(mu.density(seed.front()));
    const double panel_tol = 1e-11;
    const std::size_t node_cap = 200000;
    std::function<void(double, double, double, double, int)> emit =
        [&](double x0, double d0, double x1, double d1, int depth) {
            double mass = mu.cdf(x1) - mu.cdf(x0);
            double trap = 0.5 * (d0 + d1) * (x1 - x0);
            if ((std::abs(trap - mass) <= panel_tol) || depth >= 52 ||
                refined.grid.size() >= node_cap || !(x1 - x0 > 1e-15 * std::max(1.0, x0))) {
                refined.grid.push_back(x1);
                refined.density.push_back(d1);
                return;
            }
            double xm = 0.5 * (x0 + x1);
            double dm = mu.density(xm);
            emit(x0, d0, xm, dm, depth + 1);
            emit(xm, dm, x1, d1, depth + 1);
        };
    for (std::size_t j = 0; j + 1 < seed.size(); ++j)
        emit(seed[j], mu.density(seed[j]), seed[j + 1], mu.density(seed[j + 1]), 0);
    return make_grid_measure(std::move(refined));
}

} // namespace freeconv
