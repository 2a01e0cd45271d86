#include "doctest.h"

#include "freeconv/convolutions.hpp"
#include "freeconv/errors.hpp"
#include "freeconv/measure.hpp"
#include "freeconv/transforms.hpp"

#include <cmath>

using namespace freeconv;

namespace {
double gamma2_cdf(double x) { return 1.0 - (1.0 + x) * std::exp(-x); }
double poisson_cdf(double lambda, double t) {
    double p = std::exp(-lambda), F = 0.0;
    for (int k = 0; k <= static_cast<int>(std::floor(t)); ++k) {
        F += p;
        p *= lambda / (k + 1.0);
    }
    return t < 0.0 ? 0.0 : F;
}
} // namespace

TEST_CASE("classical additive convolution") {
    SUBCASE("dirac + dirac") {
        Measure m = conv_classical_add(dirac(1.5), dirac(2.25));
        CHECK(m.cdf(3.74) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(m.cdf(3.76) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.cdf(3.75) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("exponential + exponential is Gamma(2,1)") {
        Measure m = conv_classical_add(exponential(), exponential());
        for (double x : {0.5, 1.0, 2.0, 4.0, 8.0})
            CHECK(m.cdf(x) == doctest::Approx(gamma2_cdf(x)).epsilon(2e-6));
        CHECK(m.density(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-4));
        CHECK(m.id_star());
    }
    SUBCASE("poisson rates add") {
        Measure m = conv_classical_add(poisson(1.0), poisson(2.0));
        for (double t : {0.5, 1.5, 2.5, 5.5, 10.5})
            CHECK(m.cdf(t) == doctest::Approx(poisson_cdf(3.0, t)).epsilon(1e-12));
        CHECK(m.atom0() == doctest::Approx(std::exp(-3.0)).epsilon(1e-13));
        CHECK(m.id_star());
    }
    SUBCASE("atom times density cross terms") {
        Measure mixed = mix_with_atom_at_zero(0.3, exponential());
        Measure m = conv_classical_add(mixed, exponential());
        for (double x : {0.5, 1.0, 3.0}) {
            double want = 0.3 * (1.0 - std::exp(-x)) + 0.7 * gamma2_cdf(x);
            CHECK(m.cdf(x) == doctest::Approx(want).epsilon(2e-6));
        }
    }
}

TEST_CASE("classical multiplicative convolution") {
    SUBCASE("dirac scales") {
        Measure m = conv_classical_mul(exponential(), dirac(2.0));
        CHECK(m.cdf(2.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    }
    SUBCASE("exponential times inverse exponential is Pareto") {
        Measure m = conv_classical_mul(exponential(), power(exponential(), -1.0));
        for (double t : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0})
            CHECK(m.cdf(t) == doctest::Approx(t / (1.0 + t)).epsilon(2e-4));
    }
    SUBCASE("positive stable times its inverse") {
        // Mellin of the product factorizes; at exponent r the value is
        // Gamma(1-2r)Gamma(1+2r)/(Gamma(1-r)Gamma(1+r)) for index 1/2
        Measure m = conv_classical_mul(classical_stable(0.5), power(classical_stable(0.5), -1.0));
        for (double r : {-0.25, -0.15, -0.05, 0.05, 0.15, 0.25}) {
            double want = std::tgamma(1.0 - 2.0 * r) * std::tgamma(1.0 + 2.0 * r) /
                          (std::tgamma(1.0 - r) * std::tgamma(1.0 + r));
            CHECK(mellin_transform(m, r) == doctest::Approx(want).epsilon(6e-3));
            // same law as the boolean stable distribution of index 1/2
            CHECK(mellin_transform(boolean_stable(0.5), r) == doctest::Approx(want).epsilon(1e-7));
        }
    }
    SUBCASE("atom masses combine multiplicatively") {
        Measure m = conv_classical_mul(mix_with_atom_at_zero(0.5, exponential()),
                                       mix_with_atom_at_zero(0.25, exponential()));
        CHECK(m.atom0() == doctest::Approx(1.0 - 0.5 * 0.75).epsilon(1e-12));
    }
}

TEST_CASE("classical max convolution") {
    SUBCASE("delta0 is the identity") {
        Measure m = conv_classical_max(exponential(), dirac(0.0));
        for (double t : {0.5, 2.0}) CHECK(m.cdf(t) == exponential().cdf(t));
    }
    SUBCASE("frechet is max-stable") {
        double alpha = 1.7;
        Measure m = conv_classical_max(frechet(alpha), frechet(alpha));
        Measure d = dilate(frechet(alpha), std::pow(2.0, 1.0 / alpha));
        for (double t : {0.5, 1.0, 2.0, 5.0})
            CHECK(m.cdf(t) == doctest::Approx(d.cdf(t)).epsilon(1e-13));
    }
    SUBCASE("product rule density") {
        Measure m = conv_classical_max(exponential(), exponential());
        double F = 1.0 - std::exp(-1.0);
        CHECK(m.density(1.0) == doctest::Approx(2.0 * std::exp(-1.0) * F).epsilon(1e-13));
    }
    SUBCASE("dirac max") {
        Measure m = conv_classical_max(dirac(2.0), dirac(3.0));
        CHECK(m.cdf(2.5) == doctest::Approx(0.0));
        CHECK(m.cdf(3.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("free additive convolution") {
    SUBCASE("MP rates add at R level") {
        Measure m = conv_free_add(marchenko_pastur(1.0), marchenko_pastur(1.0));
        Measure want = marchenko_pastur(2.0);
        for (double t : {-0.9, -0.5, -0.2, -0.05})
            CHECK(r_transform(m, t) == doctest::Approx(r_transform(want, t)).epsilon(1e-12));
        CHECK(m.atom0() == doctest::Approx(0.0).epsilon(1e-9));
        // negative first moment of mp(2) is 1/(2-1)
        CHECK(r_domain_left(m) == doctest::Approx(-1.0).epsilon(1e-8));
    }
    SUBCASE("semicircle parameters add") {
        Measure m = conv_free_add(semicircle(2.0, 1.0), semicircle(3.0, 2.0));
        Measure want = semicircle(5.0, 3.0);
        double A = (5.0 - std::sqrt(25.0 - 12.0)) / 6.0;
        for (double t : {-0.2, -0.1, -0.05})
            CHECK(r_transform(m, t) == doctest::Approx(5.0 * t + 3.0 * t * t).epsilon(1e-12));
        CHECK(r_domain_left(m) == doctest::Approx(-A).epsilon(1e-8));
        CHECK(r_domain_left(want) == doctest::Approx(-A).epsilon(1e-12));
    }
    SUBCASE("delta0 is the identity") {
        Measure m = conv_free_add(exponential(), dirac(0.0));
        CHECK(m.cdf(1.0) == exponential().cdf(1.0));
    }
}

TEST_CASE("free multiplicative convolution") {
    SUBCASE("atom mass is the max of the inputs") {
        Measure m = conv_free_mul(marchenko_pastur(0.5), marchenko_pastur(0.25));
        CHECK(m.atom0() == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("S transforms multiply") {
        Measure m = conv_free_mul(marchenko_pastur(1.0), power(marchenko_pastur(1.0), -1.0));
        // S of MP(1) is 1/(1+u); S of the inverse measure is S(.)^... evaluated
        // numerically; the product has to match the boolean stable law b_{1/2}
        for (double u : {-0.7, -0.4, -0.1}) {
            double want = -u / (1.0 + u);
            CHECK(s_transform(boolean_stable(0.5), u) == doctest::Approx(want).epsilon(1e-12));
            CHECK(s_transform(m, u) == doctest::Approx(want).epsilon(1e-7));
        }
    }
    SUBCASE("dirac(1) is the identity") {
        Measure m = conv_free_mul(exponential(), dirac(1.0));
        CHECK(m.cdf(1.0) == exponential().cdf(1.0));
    }
    SUBCASE("delta0 is rejected") {
        CHECK_THROWS_AS(conv_free_mul(dirac(0.0), exponential()), DomainError);
    }
}

TEST_CASE("boolean additive convolution") {
    SUBCASE("eta transforms add: boolean stable") {
        Measure m = conv_boolean_add(boolean_stable(0.5), boolean_stable(0.5));
        for (double t : {-4.0, -1.0, -0.25})
            CHECK(eta_transform(m, t) == doctest::Approx(-2.0 * std::sqrt(-t)).epsilon(1e-12));
        // dilation by 4 has the same eta transform
        Measure d = dilate(boolean_stable(0.5), 4.0);
        for (double t : {-1.0, -0.25})
            CHECK(eta_transform(d, t) == doctest::Approx(-2.0 * std::sqrt(-t)).epsilon(1e-9));
    }
    SUBCASE("dirac atoms add") {
        Measure m = conv_boolean_add(dirac(1.0), dirac(1.0));
        for (double t : {-2.0, -0.5})
            CHECK(eta_transform(m, t) == doctest::Approx(2.0 * t).epsilon(1e-13));
        CHECK(m.atom0() == doctest::Approx(0.0));
        // negative first moment of dirac(2) is 1/2
        CHECK(m.transform_rep().neg_moment == doctest::Approx(0.5).epsilon(1e-6));
    }
    SUBCASE("delta0 is the identity") {
        Measure m = conv_boolean_add(exponential(), dirac(0.0));
        CHECK(m.cdf(1.0) == exponential().cdf(1.0));
    }
    SUBCASE("atom rule for mixtures") {
        Measure m = conv_boolean_add(mix_with_atom_at_zero(0.5, exponential()),
                                     mix_with_atom_at_zero(0.25, exponential()));
        CHECK(m.atom0() == doctest::Approx(1.0 / (2.0 + 4.0 - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("free and boolean max convolutions") {
    SUBCASE("pareto under free max") {
        double alpha = 1.3;
        Measure m = conv_free_max(pareto(alpha), pareto(alpha));
        for (double t : {1.0, 1.5, 3.0, 10.0}) {
            double want = std::max(1.0 - 2.0 * std::pow(t, -alpha), 0.0);
            CHECK(m.cdf(t) == doctest::Approx(want).epsilon(1e-13));
        }
    }
    SUBCASE("dagum under boolean max") {
        double alpha = 0.8;
        Measure m = conv_boolean_max(dagum(alpha), dagum(alpha));
        for (double t : {0.2, 1.0, 4.0}) {
            double ta = std::pow(t, alpha);
            CHECK(m.cdf(t) == doctest::Approx(ta / (2.0 + ta)).epsilon(1e-13));
        }
    }
    SUBCASE("delta0 identities and zero region") {
        CHECK(conv_free_max(exponential(), dirac(0.0)).cdf(1.0) == exponential().cdf(1.0));
        CHECK(conv_boolean_max(exponential(), dirac(0.0)).cdf(1.0) == exponential().cdf(1.0));
        Measure m = conv_boolean_max(pareto(1.0), pareto(1.0));
        CHECK(m.cdf(0.5) == doctest::Approx(0.0)); // F vanishes below 1
    }
    SUBCASE("dirac max") {
        Measure m = conv_free_max(dirac(2.0), dirac(3.0));
        CHECK(m.cdf(2.5) == doctest::Approx(0.0));
        CHECK(m.cdf(3.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("free additive powers") {
    SUBCASE("free stable scaling") {
        Measure m = power_free_add(free_stable(0.5), 2.0);
        Measure d = dilate(free_stable(0.5), 4.0);
        // scaled law has negative first moment 4, so R lives on (-1/4, 0)
        CHECK(r_domain_left(m) == doctest::Approx(-0.25).epsilon(1e-8));
        for (double t : {-0.2, -0.1, -0.04})
            CHECK(r_transform(m, t) == doctest::Approx(r_transform(d, t)).epsilon(1e-12));
    }
    SUBCASE("MP doubles") {
        Measure m = power_free_add(marchenko_pastur(1.0), 2.0);
        Measure want = marchenko_pastur(2.0);
        for (double t : {-0.8, -0.3, -0.1})
            CHECK(r_transform(m, t) == doctest::Approx(r_transform(want, t)).epsilon(1e-12));
    }
    SUBCASE("t below one is rejected; t=1 is the identity") {
        CHECK_THROWS_AS(power_free_add(exponential(), 0.5), DomainError);
        CHECK(power_free_add(exponential(), 1.0).cdf(1.0) == exponential().cdf(1.0));
    }
}

TEST_CASE("boolean additive powers") {
    SUBCASE("fourth power dilates the boolean stable law by 16") {
        Measure m = power_boolean_add(boolean_stable(0.5), 4.0);
        for (double t : {-1.0, -0.0625})
            CHECK(eta_transform(m, t) == doctest::Approx(-4.0 * std::sqrt(-t)).epsilon(1e-12));
        Measure d = dilate(boolean_stable(0.5), 16.0);
        for (double t : {-1.0, -0.0625})
            CHECK(eta_transform(d, t) == doctest::Approx(-4.0 * std::sqrt(-t)).epsilon(1e-9));
    }
    SUBCASE("zeroth power collapses to delta0") {
        Measure m = power_boolean_add(exponential(), 0.0);
        CHECK(m.atom0() == doctest::Approx(1.0));
        CHECK(m.cdf(0.0) == doctest::Approx(1.0));
    }
    SUBCASE("atom rule under powers") {
        Measure m = power_boolean_add(mix_with_atom_at_zero(0.5, exponential()), 3.0);
        CHECK(m.atom0() == doctest::Approx(1.0 / (1.0 + 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("free multiplicative powers") {
    SUBCASE("integer power matches the binary convolution") {
        Measure mu = marchenko_pastur(1.0);
        Measure sq = power_free_mul(mu, 2.0);
        Measure bin = conv_free_mul(mu, mu);
        for (double u : {-0.8, -0.5, -0.2, -0.05})
            CHECK(s_transform(sq, u) == doctest::Approx(s_transform(bin, u)).epsilon(1e-12));
    }
    SUBCASE("repeated squaring consistency") {
        Measure mu = power(marchenko_pastur(1.0), -1.0);
        Measure p4 = power_free_mul(mu, 4.0);
        Measure sq2 = power_free_mul(power_free_mul(mu, 2.0), 2.0);
        for (double u : {-0.6, -0.3, -0.1})
            CHECK(s_transform(p4, u) == doctest::Approx(s_transform(sq2, u)).epsilon(1e-9));
    }
    SUBCASE("atom mass is preserved") {
        Measure m = power_free_mul(marchenko_pastur(0.5), 2.5);
        CHECK(m.atom0() == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("domain guards") {
        CHECK_THROWS_AS(power_free_mul(exponential(), 0.5), DomainError);
        CHECK_THROWS_AS(power_free_mul(dirac(0.0), 2.0), DomainError);
    }
}

TEST_CASE("max convolution powers") {
    SUBCASE("integer power equals the binary law, both kinds") {
        Measure mu = pareto(1.3);
        Measure f2 = power_free_max(mu, 2.0);
        Measure fb = conv_free_max(mu, mu);
        Measure b2 = power_boolean_max(mu, 2.0);
        Measure bb = conv_boolean_max(mu, mu);
        for (double t : {1.1, 2.0, 5.0, 20.0}) {
            CHECK(f2.cdf(t) == doctest::Approx(fb.cdf(t)).epsilon(1e-13));
            CHECK(b2.cdf(t) == doctest::Approx(bb.cdf(t)).epsilon(1e-13));
        }
    }
    SUBCASE("pareto free max power closed form") {
        double alpha = 0.9;
        Measure m = power_free_max(pareto(alpha), 2.0);
        for (double t : {1.5, 4.0})
            CHECK(m.cdf(t) ==
                  doctest::Approx(std::max(1.0 - 2.0 * std::pow(t, -alpha), 0.0)).epsilon(1e-13));
    }
    SUBCASE("t=1 identities and range guards") {
        CHECK(power_free_max(exponential(), 1.0).cdf(2.0) == exponential().cdf(2.0));
        CHECK(power_boolean_max(exponential(), 1.0).cdf(2.0) == exponential().cdf(2.0));
        CHECK_THROWS_AS(power_free_max(exponential(), 0.9), DomainError);
        CHECK_THROWS_AS(power_boolean_max(exponential(), 0.0), DomainError);
    }
}

TEST_CASE("distributivity of dilation over free operations") {
    // (mu boxtimes nu)^{boxplus t} = D_{1/t}((mu^{boxplus t}) boxtimes (nu^{boxplus t}))
    for (double t : {1.5, 2.0, 3.0}) {
        Measure mu = marchenko_pastur(1.0), nu = marchenko_pastur(2.0);
        Measure lhs = power_free_add(conv_free_mul(mu, nu), t);
        Measure rhs = dilate(
            conv_free_mul(power_free_add(mu, t), power_free_add(nu, t)), 1.0 / t);
        double left = std::max(r_domain_left(lhs), r_domain_left(rhs));
        for (int i = 1; i <= 4; ++i) {
            double s = left * i / 5.0;
            if (left == -std::numeric_limits<double>::infinity()) s = -0.4 * i;
            CHECK(r_transform(lhs, s) == doctest::Approx(r_transform(rhs, s)).epsilon(1e-7));
        }
    }
}

TEST_CASE("max convolutions are associative and commutative") {
    auto check_pointwise = [](const Measure& x, const Measure& y) {
        for (double t : {0.3, 1.0, 2.0, 6.0})
            CHECK(x.cdf(t) == doctest::Approx(y.cdf(t)).epsilon(1e-12));
    };
    Measure a = exponential(), b = pareto(1.5), c = frechet(2.0);
    check_pointwise(conv_classical_max(a, b), conv_classical_max(b, a));
    check_pointwise(conv_classical_max(conv_classical_max(a, b), c),
                    conv_classical_max(a, conv_classical_max(b, c)));
    check_pointwise(conv_free_max(a, b), conv_free_max(b, a));
    check_pointwise(conv_free_max(conv_free_max(a, b), c),
                    conv_free_max(a, conv_free_max(b, c)));
    check_pointwise(conv_boolean_max(a, b), conv_boolean_max(b, a));
    check_pointwise(conv_boolean_max(conv_boolean_max(a, b), c),
                    conv_boolean_max(a, conv_boolean_max(b, c)));
}
