#pragma once

// Closed-form catalog mathematics shared by measure.cpp and transforms.cpp.
// Everything here is per-family; representation-generic logic stays outside.

#include "freeconv/measure.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace freeconv::detail {

struct Interval {
    double lo;
    double hi;
};

// ---- distribution shapes ------------------------------------------------

bool has_density(const CatalogRep& c);
double density(const CatalogRep& c, double x);
bool has_cdf(const CatalogRep& c);
double cdf(const CatalogRep& c, double t);
bool has_quantile(const CatalogRep& c); // closed or cheaply invertible
double quantile(const CatalogRep& c, double p);
Interval density_support(const CatalogRep& c);
double atom0(const CatalogRep& c);
std::vector<std::pair<double, double>> atoms(const CatalogRep& c); // positive locations
bool default_id_star(Family f);

// ---- closed transforms --------------------------------------------------
// Each accessor returns nullopt when the family has no registered closed form;
// callers then fall through to quadrature / inversion routes.

std::optional<double> closed_R(const CatalogRep& c, double t);
std::optional<double> r_extension_left(const CatalogRep& c); // -B (may be -inf)

std::optional<double> closed_S(const CatalogRep& c, double u);
std::optional<double> s_domain_left(const CatalogRep& c);

std::optional<double> closed_eta(const CatalogRep& c, double t);
std::optional<double> closed_psi(const CatalogRep& c, double t);

// cumulant: second member is the supremum of the registered convergence range
// (0 means "t <= 0 only").
std::optional<double> closed_cumulant(const CatalogRep& c, double t);
double cumulant_sup_t(const CatalogRep& c);

std::optional<double> closed_mellin(const CatalogRep& c, double t);

std::optional<double> closed_neg_moment(const CatalogRep& c);

std::optional<double> closed_G_real(const CatalogRep& c, double s);
std::optional<std::complex<double>> closed_G_complex(const CatalogRep& c, std::complex<double> z);

// ---- one-sided stable (Laplace transform e^{-s^alpha}) ------------------
// Zolotarev integral representation; used for CDF/density/densification.

double stable_cdf(double alpha, double x);
double stable_density(double alpha, double x);

} // namespace freeconv::detail
