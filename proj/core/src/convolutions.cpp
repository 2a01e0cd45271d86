#include "freeconv/convolutions.hpp"

#include "catalog_detail.hpp"
#include "freeconv/errors.hpp"
#include "freeconv/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace freeconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_dirac_at(const Measure& m, double a) {
    return m.kind() == Measure::Kind::Catalog && m.catalog_rep().family == Family::Dirac &&
           m.catalog_rep().p1 == a;
}

bool is_dirac(const Measure& m) {
    return m.kind() == Measure::Kind::Catalog && m.catalog_rep().family == Family::Dirac;
}

// ---- decomposition into discrete + continuous parts ---------------------

struct Parts {
    double atom0 = 0.0;
    std::vector<std::pair<double, double>> atoms; // positive locations
    double cont_mass = 0.0;
    std::function<double(double)> dens;
    double lo = 0.0, hi = 0.0; // continuous support (truncated)
};

Parts decompose(const Measure& m, const char* op) {
    Parts p;
    p.atom0 = m.atom0();
    switch (m.kind()) {
        case Measure::Kind::Catalog: {
            const CatalogRep& c = m.catalog_rep();
            p.atoms = detail::atoms(c);
            if (detail::has_density(c)) {
                detail::Interval sp = detail::density_support(c);
                p.lo = sp.lo;
                p.hi = std::isfinite(sp.hi) ? sp.hi : m.quantile(1.0 - 1e-13);
                p.dens = [c](double x) { return detail::density(c, x); };
            }
            break;
        }
        case Measure::Kind::Grid: {
            const GridMeasure& g = m.grid_rep();
            p.atoms = g.atoms;
            if (!g.grid.empty()) {
                p.lo = g.grid.front();
                p.hi = g.grid.back();
                GridMeasure copy = g;
                p.dens = [copy](double x) { return grid_density_at(copy, x); };
            }
            break;
        }
        case Measure::Kind::Cdf: {
            const CdfRep& r = m.cdf_rep();
            for (double j : r.jump_hints) {
                if (j <= 0.0) continue;
                double w = m.cdf(j) - m.cdf(j * (1.0 - 1e-9) - 1e-300);
                if (w > 1e-12) p.atoms.emplace_back(j, w);
            }
            double disc = p.atom0;
            for (const auto& a : p.atoms) disc += a.second;
            if (1.0 - disc > 1e-10) {
                if (!r.density)
                    throw UnsupportedError(std::string(op) +
                                           ": continuous part without a density function (" +
                                           m.describe() + ")");
                Measure keep = m;
                p.dens = [keep](double x) { return keep.density(x); };
                p.lo = m.quantile(std::min(disc + 1e-13, 1.0));
                p.hi = m.quantile(1.0 - 1e-13);
            }
            break;
        }
        case Measure::Kind::Transform:
            throw UnsupportedError(std::string(op) + ": transform-defined input (" + m.describe() +
                                   "); densify through the subordination oracle first");
    }
    double am = p.atom0;
    for (const auto& a : p.atoms) am += a.second;
    p.cont_mass = std::max(0.0, 1.0 - am);
    if (p.cont_mass < 1e-12) {
        p.dens = nullptr;
        p.cont_mass = 0.0;
    } else if (!p.dens) {
        throw UnsupportedError(std::string(op) + ": measure has untracked continuous mass (" +
                               m.describe() + ")");
    }
    return p;
}

// ---- radix-2 FFT for the trapezoid-sampled convolution ------------------

void fft_radix2(std::vector<std::complex<double>>& a, bool invert) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * M_PI / static_cast<double>(len) * (invert ? -1.0 : 1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (invert)
        for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<double> convolve_series(const std::vector<double>& f, const std::vector<double>& g) {
    std::size_t need = f.size() + g.size() - 1;
    if (static_cast<double>(f.size()) * static_cast<double>(g.size()) < 1.0e7) {
        std::vector<double> out(need, 0.0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0.0) continue;
            for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
        }
        return out;
    }
    std::size_t n = 1;
    while (n < need) n <<= 1;
    std::vector<std::complex<double>> fa(n, 0.0), fb(n, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) fa[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) fb[i] = g[i];
    fft_radix2(fa, false);
    fft_radix2(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    fft_radix2(fa, true);
    std::vector<double> out(need);
    for (std::size_t i = 0; i < need; ++i) out[i] = std::max(0.0, fa[i].real());
    return out;
}

// A density sampled on a uniform grid starting at `lo` with spacing `dx`.
struct Line {
    double lo = 0.0;
    double dx = 0.0;
    std::vector<double> v;
};

// Density sample that survives integrable endpoint singularities: a non-finite
// value is replaced by a probe slightly inside the panel.
double safe_dens(const std::function<double(double)>& d, double x, double dx, double lo,
                 double hi) {
    double v = d(x);
    if (std::isfinite(v)) return std::max(0.0, v);
    double probe = (x - lo < hi - x) ? x + 1e-3 * dx : x - 1e-3 * dx;
    v = d(probe);
    return std::isfinite(v) ? std::max(0.0, v) : 0.0;
}

Line sample_uniform(const Parts& p, double dx) {
    Line L;
    L.lo = p.lo;
    L.dx = dx;
    std::size_t n = static_cast<std::size_t>(std::ceil((p.hi - p.lo) / dx)) + 1;
    L.v.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        double x = p.lo + static_cast<double>(j) * dx;
        L.v[j] = (x <= p.hi) ? safe_dens(p.dens, x, dx, p.lo, p.hi) : 0.0;
    }
    return L;
}

// Generic signed-line convolution of two decompositions; works on any real
// interval (the multiplicative case passes log-pushforwards).  Returns the
// merged atoms and the combined density on a uniform output grid.
struct LineResult {
    std::vector<std::pair<double, double>> atoms; // any real locations, merged
    Line dens;                                    // may be empty
};

void accumulate_shifted(Line& acc, const Parts& src, double shift, double w) {
    for (std::size_t j = 0; j < acc.v.size(); ++j) {
        double x = acc.lo + static_cast<double>(j) * acc.dx - shift;
        if (x < src.lo || x > src.hi) continue;
        acc.v[j] += w * safe_dens(src.dens, x, acc.dx, src.lo, src.hi);
    }
}

LineResult convolve_parts(const Parts& a, const Parts& b, double dx) {
    LineResult R;
    // discrete x discrete (atom0 of the *shifted* decomposition is an atom at 0)
    std::vector<std::pair<double, double>> da, db;
    if (a.atom0 > 0.0) da.emplace_back(0.0, a.atom0);
    for (const auto& at : a.atoms) da.push_back(at);
    if (b.atom0 > 0.0) db.emplace_back(0.0, b.atom0);
    for (const auto& at : b.atoms) db.push_back(at);
    for (const auto& x : da)
        for (const auto& y : db) R.atoms.emplace_back(x.first + y.first, x.second * y.second);
    std::sort(R.atoms.begin(), R.atoms.end());
    // merge coincident atom locations
    std::vector<std::pair<double, double>> merged;
    for (const auto& at : R.atoms) {
        if (!merged.empty() &&
            std::abs(at.first - merged.back().first) <=
                1e-12 * std::max(1.0, std::abs(at.first)))
            merged.back().second += at.second;
        else
            merged.push_back(at);
    }
    R.atoms = std::move(merged);

    bool ca = a.cont_mass > 0.0, cb = b.cont_mass > 0.0;
    if (!ca && !cb) return R;
    double lo = (ca ? a.lo : 0.0) + (cb ? b.lo : 0.0);
    double hi = (ca ? a.hi : 0.0) + (cb ? b.hi : 0.0);
    // output grid must cover atom-shifted copies of the other density too
    double out_lo = lo, out_hi = hi;
    if (cb)
        for (const auto& at : da) {
            out_lo = std::min(out_lo, at.first + b.lo);
            out_hi = std::max(out_hi, at.first + b.hi);
        }
    if (ca)
        for (const auto& at : db) {
            out_lo = std::min(out_lo, at.first + a.lo);
            out_hi = std::max(out_hi, at.first + a.hi);
        }
    Line acc;
    acc.lo = out_lo;
    acc.dx = dx;
    acc.v.assign(static_cast<std::size_t>(std::ceil((out_hi - out_lo) / dx)) + 2, 0.0);
    // continuous x continuous by trapezoid product rule: halve the endpoint
    // samples of each factor, convolve the series, scale by dx
    if (ca && cb) {
        Line fa = sample_uniform(a, dx);
        Line fb = sample_uniform(b, dx);
        std::vector<double> ta = fa.v, tb = fb.v;
        if (!ta.empty()) {
            ta.front() *= 0.5;
            ta.back() *= 0.5;
        }
        if (!tb.empty()) {
            tb.front() *= 0.5;
            tb.back() *= 0.5;
        }
        std::vector<double> h = convolve_series(ta, tb);
        double base = fa.lo + fb.lo;
        for (std::size_t k = 0; k < h.size(); ++k) {
            double z = base + static_cast<double>(k) * dx;
            auto idx = static_cast<long long>(std::llround((z - acc.lo) / dx));
            if (idx >= 0 && idx < static_cast<long long>(acc.v.size()))
                acc.v[static_cast<std::size_t>(idx)] += h[k] * dx;
        }
    }
    // atoms x continuous: shifted copies evaluated directly on the output grid
    if (cb)
        for (const auto& at : da) accumulate_shifted(acc, b, at.first, at.second);
    if (ca)
        for (const auto& at : db) accumulate_shifted(acc, a, at.first, at.second);
    R.dens = std::move(acc);
    return R;
}

// Assemble a [0, inf) grid measure from a line result (locations must already
// be nonnegative up to rounding).
GridMeasure line_to_grid(const LineResult& r) {
    GridMeasure g;
    for (const auto& at : r.atoms) {
        double x = at.first;
        if (x <= 1e-12)
            g.atom0 += at.second;
        else
            g.atoms.emplace_back(x, at.second);
    }
    if (!r.dens.v.empty()) {
        g.grid.resize(r.dens.v.size());
        g.density.resize(r.dens.v.size());
        for (std::size_t j = 0; j < r.dens.v.size(); ++j) {
            g.grid[j] = std::max(0.0, r.dens.lo + static_cast<double>(j) * r.dens.dx);
            g.density[j] = r.dens.v[j];
        }
        // clamp tiny negative abscissae from rounding: enforce monotone grid
        for (std::size_t j = 1; j < g.grid.size(); ++j)
            if (g.grid[j] <= g.grid[j - 1]) g.grid[j] = g.grid[j - 1] + r.dens.dx * 1e-9;
    }
    return make_grid_measure(std::move(g), 5e-3);
}

double sup_cdf_diff(const Measure& f1, const Measure& f2, double lo, double hi) {
    double sup = 0.0;
    for (int i = 0; i <= 600; ++i) {
        double t = lo + (hi - lo) * i / 600.0;
        sup = std::max(sup, std::abs(f1.cdf(t) - f2.cdf(t)));
    }
    return sup;
}

// Geometric version for measures spanning many decades.
double sup_cdf_diff_log(const Measure& f1, const Measure& f2, double lo, double hi) {
    double sup = 0.0;
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i <= 600; ++i) {
        double t = std::exp(llo + (lhi - llo) * i / 600.0);
        sup = std::max(sup, std::abs(f1.cdf(t) - f2.cdf(t)));
    }
    return sup;
}

double extent(const Parts& p) {
    double e = p.cont_mass > 0.0 ? p.hi : 0.0;
    for (const auto& at : p.atoms) e = std::max(e, at.first);
    return e;
}

// Additive engine with grid refinement until the CDF stabilizes.
Measure refine_additive(const Parts& pa, const Parts& pb, bool star) {
    bool cont = pa.cont_mass > 0.0 || pb.cont_mass > 0.0;
    if (!cont) {
        LineResult r = convolve_parts(pa, pb, 1.0);
        return Measure::from_grid(line_to_grid(r), star);
    }
    double span = (pa.cont_mass > 0.0 ? pa.hi - pa.lo : 0.0) +
                  (pb.cont_mass > 0.0 ? pb.hi - pb.lo : 0.0);
    if (!(span > 0.0)) throw DomainError("classical convolution: degenerate support");
    double hi = extent(pa) + extent(pb);
    double dx = span / 4096.0;
    Measure prev = Measure::from_grid(line_to_grid(convolve_parts(pa, pb, dx)), star);
    for (int it = 0; it < 7; ++it) {
        dx *= 0.5;
        Measure next = Measure::from_grid(line_to_grid(convolve_parts(pa, pb, dx)), star);
        if (sup_cdf_diff(prev, next, 0.0, hi) < 1e-7) return next;
        prev = next;
    }
    return prev;
}

} // namespace

Measure conv_classical_add(const Measure& mu, const Measure& nu) {
    bool star = mu.id_star() && nu.id_star();
    Parts pa = decompose(mu, "classical additive convolution");
    Parts pb = decompose(nu, "classical additive convolution");
    return refine_additive(pa, pb, star);
}

Measure conv_classical_mul(const Measure& mu, const Measure& nu) {
    if (is_dirac(nu)) return dilate(mu, nu.catalog_rep().p1);
    if (is_dirac(mu)) return dilate(nu, mu.catalog_rep().p1);
    Parts pa = decompose(mu, "classical multiplicative convolution");
    Parts pb = decompose(nu, "classical multiplicative convolution");
    double a0 = 1.0 - (1.0 - pa.atom0) * (1.0 - pb.atom0);
    // log-pushforward of the strictly positive parts
    auto log_push = [](const Parts& p) {
        Parts q;
        q.atom0 = 0.0;
        for (const auto& at : p.atoms) q.atoms.emplace_back(std::log(at.first), at.second);
        std::sort(q.atoms.begin(), q.atoms.end());
        q.cont_mass = p.cont_mass;
        if (p.cont_mass > 0.0) {
            double lo = p.lo;
            if (!(lo > 0.0)) lo = std::min(1e-14, p.hi * 1e-16); // density vanishes toward 0
            q.lo = std::log(lo);
            q.hi = std::log(p.hi);
            auto d = p.dens;
            q.dens = [d](double y) {
                double x = std::exp(y);
                return d(x) * x;
            };
        }
        return q;
    };
    // positive parts carry mass (1 - atom0) each; spectra renormalized at the end
    Parts la = log_push(pa);
    Parts lb = log_push(pb);
    // scale each side to a probability measure on the line for the engine
    double wa = 1.0 - pa.atom0, wb = 1.0 - pb.atom0;
    if (!(wa > 1e-14) || !(wb > 1e-14)) return dirac(0.0);
    auto scale_parts = [](Parts& p, double w) {
        for (auto& at : p.atoms) at.second /= w;
        if (p.cont_mass > 0.0) {
            auto d = p.dens;
            p.dens = [d, w](double y) { return d(y) / w; };
            p.cont_mass /= w;
        }
    };
    scale_parts(la, wa);
    scale_parts(lb, wb);
    bool cont = la.cont_mass > 0.0 || lb.cont_mass > 0.0;
    double dx0 = 0.0;
    if (cont) {
        double span = (la.cont_mass > 0.0 ? la.hi - la.lo : 0.0) +
                      (lb.cont_mass > 0.0 ? lb.hi - lb.lo : 0.0);
        dx0 = span / 8192.0;
    }
    auto build = [&](double dx) {
        LineResult r = convolve_parts(la, lb, cont ? dx : 1.0);
        // exp-push back to [0, inf)
        GridMeasure g;
        g.atom0 = a0;
        double w = wa * wb;
        for (const auto& at : r.atoms) g.atoms.emplace_back(std::exp(at.first), w * at.second);
        std::sort(g.atoms.begin(), g.atoms.end());
        if (!r.dens.v.empty()) {
            g.grid.resize(r.dens.v.size());
            g.density.resize(r.dens.v.size());
            for (std::size_t j = 0; j < r.dens.v.size(); ++j) {
                double y = r.dens.lo + static_cast<double>(j) * r.dens.dx;
                double x = std::exp(y);
                g.grid[j] = x;
                g.density[j] = w * r.dens.v[j] / x;
            }
        }
        return Measure::from_grid(make_grid_measure(std::move(g), 5e-3), false);
    };
    if (!cont) return build(1.0);
    double lo = std::exp((la.cont_mass > 0.0 ? la.lo : 0.0) +
                         (lb.cont_mass > 0.0 ? lb.lo : 0.0));
    double hi = std::min(std::exp(std::min(la.hi + lb.hi, 690.0)), 1e250);
    Measure prev = build(dx0);
    for (int it = 0; it < 7; ++it) {
        dx0 *= 0.5;
        Measure next = build(dx0);
        if (sup_cdf_diff_log(prev, next, std::max(lo, 1e-250), hi) < 1e-7) return next;
        prev = next;
    }
    return prev;
}

Measure conv_classical_max(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(nu, 0.0)) return mu;
    if (is_dirac_at(mu, 0.0)) return nu;
    Measure a = mu, b = nu;
    CdfRep r;
    r.cdf = [a, b](double t) { return a.cdf(t) * b.cdf(t); };
    r.atom0 = mu.atom0() * nu.atom0();
    if (mu.has_density() && nu.has_density())
        r.density = [a, b](double x) {
            return a.density(x) * b.cdf(x) + a.cdf(x) * b.density(x);
        };
    for (double j : mu.jump_locations()) r.jump_hints.push_back(j);
    for (double j : nu.jump_locations()) r.jump_hints.push_back(j);
    r.label = "max*(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_cdf(std::move(r));
}

Measure conv_free_add(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(nu, 0.0)) return mu;
    if (is_dirac_at(mu, 0.0)) return nu;
    Measure a = mu, b = nu;
    double left = std::max(r_domain_left(mu), r_domain_left(nu));
    auto sum = [a, b](double t) { return r_transform(a, t) + r_transform(b, t); };
    RangeInfo info = detect_range_from_R(sum, left);
    TransformRep rep;
    rep.which = TransformKind::R;
    rep.eval = sum;
    rep.domain_left = -info.neg_moment;
    rep.atom0 = info.atom0;
    rep.neg_moment = info.neg_moment;
    rep.label = "boxplus(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_transform(std::move(rep));
}

Measure conv_free_mul(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(mu, 0.0) || is_dirac_at(nu, 0.0))
        throw DomainError("free multiplicative convolution: delta_0 has no S-transform");
    if (is_dirac(nu)) return dilate(mu, nu.catalog_rep().p1);
    if (is_dirac(mu)) return dilate(nu, mu.catalog_rep().p1);
    Measure a = mu, b = nu;
    double a0 = std::max(mu.atom0(), nu.atom0());
    auto prod = [a, b](double u) { return s_transform(a, u) * s_transform(b, u); };
    TransformRep rep;
    rep.which = TransformKind::S;
    rep.eval = prod;
    rep.domain_left = -1.0 + a0;
    rep.atom0 = a0;
    rep.neg_moment = detect_A_from_S(prod, a0);
    rep.label = "boxtimes(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_transform(std::move(rep));
}

Measure conv_boolean_add(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(nu, 0.0)) return mu;
    if (is_dirac_at(mu, 0.0)) return nu;
    Measure a = mu, b = nu;
    auto sum = [a, b](double t) { return eta_transform(a, t) + eta_transform(b, t); };
    double a0 = 0.0;
    double am = mu.atom0(), bm = nu.atom0();
    if (am > 0.0 && bm > 0.0) a0 = 1.0 / (1.0 / am + 1.0 / bm - 1.0);
    TransformRep rep;
    rep.which = TransformKind::Eta;
    rep.eval = sum;
    rep.domain_left = -kInf;
    rep.atom0 = a0;
    rep.neg_moment = detect_A_from_eta(sum, a0);
    rep.label = "uplus(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_transform(std::move(rep));
}

Measure conv_free_max(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(nu, 0.0)) return mu;
    if (is_dirac_at(mu, 0.0)) return nu;
    Measure a = mu, b = nu;
    CdfRep r;
    r.cdf = [a, b](double t) { return std::max(a.cdf(t) + b.cdf(t) - 1.0, 0.0); };
    r.atom0 = std::max(mu.atom0() + nu.atom0() - 1.0, 0.0);
    if (mu.has_density() && nu.has_density())
        r.density = [a, b](double x) {
            return (a.cdf(x) + b.cdf(x) > 1.0) ? a.density(x) + b.density(x) : 0.0;
        };
    for (double j : mu.jump_locations()) r.jump_hints.push_back(j);
    for (double j : nu.jump_locations()) r.jump_hints.push_back(j);
    r.label = "maxboxplus(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_cdf(std::move(r));
}

Measure conv_boolean_max(const Measure& mu, const Measure& nu) {
    if (is_dirac_at(nu, 0.0)) return mu;
    if (is_dirac_at(mu, 0.0)) return nu;
    Measure a = mu, b = nu;
    CdfRep r;
    r.cdf = [a, b](double t) {
        double fa = a.cdf(t), fb = b.cdf(t);
        if (fa <= 0.0 || fb <= 0.0) return 0.0;
        return 1.0 / (1.0 / fa + 1.0 / fb - 1.0);
    };
    double am = mu.atom0(), bm = nu.atom0();
    r.atom0 = (am > 0.0 && bm > 0.0) ? 1.0 / (1.0 / am + 1.0 / bm - 1.0) : 0.0;
    if (mu.has_density() && nu.has_density())
        r.density = [a, b](double x) {
            double fa = a.cdf(x), fb = b.cdf(x);
            if (fa <= 0.0 || fb <= 0.0) return 0.0;
            double F = 1.0 / (1.0 / fa + 1.0 / fb - 1.0);
            return F * F * (a.density(x) / (fa * fa) + b.density(x) / (fb * fb));
        };
    for (double j : mu.jump_locations()) r.jump_hints.push_back(j);
    for (double j : nu.jump_locations()) r.jump_hints.push_back(j);
    r.label = "maxuplus(" + mu.describe() + ", " + nu.describe() + ")";
    return Measure::from_cdf(std::move(r));
}

Measure power_free_add(const Measure& mu, double t) {
    if (!(t >= 1.0)) throw DomainError("free additive power: t must be >= 1");
    if (t == 1.0) return mu;
    Measure a = mu;
    auto scaled = [a, t](double s) { return t * r_transform(a, s); };
    RangeInfo info = detect_range_from_R(scaled, r_domain_left(mu));
    TransformRep rep;
    rep.which = TransformKind::R;
    rep.eval = scaled;
    rep.domain_left = -info.neg_moment;
    rep.atom0 = info.atom0;
    rep.neg_moment = info.neg_moment;
    rep.label = "boxplus-power(" + mu.describe() + ", " + std::to_string(t) + ")";
    return Measure::from_transform(std::move(rep));
}

Measure power_boolean_add(const Measure& mu, double t) {
    if (!(t >= 0.0)) throw DomainError("boolean additive power: t must be >= 0");
    if (t == 0.0) return dirac(0.0);
    if (t == 1.0) return mu;
    Measure a = mu;
    auto scaled = [a, t](double s) { return t * eta_transform(a, s); };
    double am = mu.atom0();
    double a0 = am > 0.0 ? 1.0 / (1.0 + t * (1.0 / am - 1.0)) : 0.0;
    TransformRep rep;
    rep.which = TransformKind::Eta;
    rep.eval = scaled;
    rep.domain_left = -kInf;
    rep.atom0 = a0;
    rep.neg_moment = detect_A_from_eta(scaled, a0);
    rep.label = "uplus-power(" + mu.describe() + ", " + std::to_string(t) + ")";
    return Measure::from_transform(std::move(rep));
}

Measure power_free_mul(const Measure& mu, double t) {
    if (!(t >= 1.0)) throw DomainError("free multiplicative power: t must be >= 1");
    if (is_dirac_at(mu, 0.0))
        throw DomainError("free multiplicative power: delta_0 has no S-transform");
    if (t == 1.0) return mu;
    Measure a = mu;
    double a0 = mu.atom0();
    auto powd = [a, t](double u) { return std::pow(s_transform(a, u), t); };
    TransformRep rep;
    rep.which = TransformKind::S;
    rep.eval = powd;
    rep.domain_left = -1.0 + a0;
    rep.atom0 = a0;
    rep.neg_moment = detect_A_from_S(powd, a0);
    rep.label = "boxtimes-power(" + mu.describe() + ", " + std::to_string(t) + ")";
    return Measure::from_transform(std::move(rep));
}

Measure power_free_max(const Measure& mu, double t) {
    if (!(t >= 1.0)) throw DomainError("free max power: t must be >= 1");
    if (t == 1.0) return mu;
    Measure a = mu;
    CdfRep r;
    r.cdf = [a, t](double x) { return std::max(t * a.cdf(x) - (t - 1.0), 0.0); };
    r.atom0 = std::max(t * mu.atom0() - (t - 1.0), 0.0);
    if (mu.has_density())
        r.density = [a, t](double x) {
            return (t * a.cdf(x) - (t - 1.0) > 0.0) ? t * a.density(x) : 0.0;
        };
    r.jump_hints = mu.jump_locations();
    r.label = "maxboxplus-power(" + mu.describe() + ", " + std::to_string(t) + ")";
    return Measure::from_cdf(std::move(r));
}

Measure power_boolean_max(const Measure& mu, double t) {
    if (!(t > 0.0)) throw DomainError("boolean max power: t must be > 0");
    if (t == 1.0) return mu;
    Measure a = mu;
    CdfRep r;
    r.cdf = [a, t](double x) {
        double f = a.cdf(x);
        if (f <= 0.0) return 0.0;
        return f / (t - (t - 1.0) * f);
    };
    double am = mu.atom0();
    r.atom0 = am > 0.0 ? am / (t - (t - 1.0) * am) : 0.0;
    if (mu.has_density())
        r.density = [a, t](double x) {
            double f = a.cdf(x);
            if (f <= 0.0) return 0.0;
            double d = t - (t - 1.0) * f;
            return t * a.density(x) / (d * d);
        };
    r.jump_hints = mu.jump_locations();
    r.label = "maxuplus-power(" + mu.describe() + ", " + std::to_string(t) + ")";
    return Measure::from_cdf(std::move(r));
}

} // namespace freeconv
