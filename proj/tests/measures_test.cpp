#include "doctest.h"

#include "freeconv/errors.hpp"
#include "freeconv/measure.hpp"

#include <cmath>

using namespace freeconv;

TEST_CASE("catalog parameter validation") {
    CHECK_THROWS_AS(dirac(-1.0), DomainError);
    CHECK_THROWS_AS(poisson(0.0), DomainError);
    CHECK_THROWS_AS(marchenko_pastur(-2.0), DomainError);
    CHECK_THROWS_AS(semicircle(1.0, 1.0), DomainError); // support would cross 0
    CHECK_THROWS_AS(free_stable(1.0), DomainError);
    CHECK_THROWS_AS(boolean_stable(0.0), DomainError);
    CHECK_THROWS_AS(classical_stable(1.5), DomainError);
    CHECK_NOTHROW(semicircle(2.0, 1.0));
}

TEST_CASE("dirac basics") {
    Measure d = dirac(2.0);
    CHECK(d.cdf(1.9) == 0.0);
    CHECK(d.cdf(2.0) == 1.0);
    CHECK(d.quantile(0.5) == 2.0);
    CHECK(d.atom0() == 0.0);
    CHECK(dirac(0.0).atom0() == 1.0);
    CHECK(dirac(0.0).cdf(0.0) == 1.0);
    auto xs = d.sample(5, 1);
    for (double x : xs) CHECK(x == 2.0);
}

TEST_CASE("uniform and exponential closed shapes") {
    Measure u = uniform01();
    CHECK(u.cdf(0.25) == doctest::Approx(0.25));
    CHECK(u.density(0.5) == doctest::Approx(1.0));
    CHECK(u.quantile(0.7) == doctest::Approx(0.7));
    Measure e = exponential();
    CHECK(e.cdf(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(e.quantile(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(e.id_star());
    CHECK(!u.id_star());
}

TEST_CASE("poisson atoms and cdf") {
    Measure p = poisson(1.0);
    CHECK(p.atom0() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(p.cdf(0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(p.cdf(1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(p.cdf(2.5) == doctest::Approx(2.5 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(p.quantile(0.5) == 1.0);
    auto jumps = p.jump_locations();
    REQUIRE(jumps.size() >= 3);
    CHECK(jumps[0] == 0.0);
    CHECK(jumps[1] == 1.0);
}

TEST_CASE("marchenko-pastur cdf against quadrature references") {
    Measure m2 = marchenko_pastur(2.0);
    // [DERIVED] mass below 2 and 3 for the lambda = 2 law
    CHECK(m2.cdf(2.0) == doctest::Approx(0.576004215103868562).epsilon(1e-9));
    CHECK(m2.cdf(3.0) == doctest::Approx(0.754244882063249400).epsilon(1e-9));
    Measure mhalf = marchenko_pastur(0.5);
    CHECK(mhalf.atom0() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mhalf.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    // quantile inverts the cdf
    double q = m2.quantile(0.3);
    CHECK(m2.cdf(q) == doctest::Approx(0.3).epsilon(1e-7));
}

TEST_CASE("semicircle cdf and quantile") {
    Measure sc = semicircle(2.0, 1.0);
    CHECK(sc.cdf(2.0) == doctest::Approx(0.5).epsilon(1e-10));
    // [DERIVED] mass below 1.5 for m = 2, v = 1
    CHECK(sc.cdf(1.5) == doctest::Approx(0.342518821237146281).epsilon(1e-9));
    CHECK(sc.quantile(0.5) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(sc.cdf(0.0) == 0.0);
    CHECK(sc.cdf(4.5) == 1.0);
}

TEST_CASE("one-sided stable laws: alpha = 1/2 closed form and general alpha") {
    Measure lv = classical_stable(0.5);
    // [TRIVIAL] Levy law: F(x) = erfc(1/(2 sqrt x))
    CHECK(lv.cdf(1.0) == doctest::Approx(0.479500122186953462).epsilon(1e-11));
    CHECK(lv.cdf(4.0) == doctest::Approx(std::erfc(0.25)).epsilon(1e-11));
    Measure s3 = classical_stable(0.3);
    // CDF is a proper distribution function
    CHECK(s3.cdf(1e-8) < 1e-6);
    CHECK(s3.cdf(0.5) > 0.0);
    CHECK(s3.cdf(1e9) > 0.9);
    double q = s3.quantile(0.6);
    CHECK(s3.cdf(q) == doctest::Approx(0.6).epsilon(1e-8));
}

TEST_CASE("boolean stable closed cdf and quantile agree") {
    Measure b = boolean_stable(0.3);
    // [DERIVED] quantile formula (sin(pi a p)/sin(pi a(1-p)))^{1/a}
    CHECK(b.quantile(0.4) == doctest::Approx(0.286132939456280108).epsilon(1e-12));
    for (double p : {0.1, 0.5, 0.9}) {
        CHECK(b.cdf(b.quantile(p)) == doctest::Approx(p).epsilon(1e-10));
    }
    Measure bh = boolean_stable(0.5);
    // alpha = 1/2: F(x) = 1 - (2/pi) arccot(sqrt x)
    CHECK(bh.cdf(1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("heavy-tailed catalog families") {
    Measure pa = pareto(2.0);
    CHECK(pa.cdf(1.0) == doctest::Approx(0.0));
    CHECK(pa.cdf(2.0) == doctest::Approx(1.0 - 0.25).epsilon(1e-12));
    Measure da = dagum(1.5);
    CHECK(da.cdf(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    Measure fr = frechet(2.0);
    CHECK(fr.cdf(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("mixture with an atom at zero") {
    Measure m = mix_with_atom_at_zero(0.3, exponential());
    CHECK(m.atom0() == doctest::Approx(0.3));
    CHECK(m.cdf(0.0) == doctest::Approx(0.3));
    CHECK(m.cdf(1.0) == doctest::Approx(0.3 + 0.7 * (1.0 - std::exp(-1.0))).epsilon(1e-12));
    CHECK(m.density(1.0) == doctest::Approx(0.7 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("power pushes forward x -> x^c") {
    Measure sq = power(exponential(), 2.0);
    CHECK(sq.cdf(4.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-12));
    Measure inv = power(exponential(), -1.0);
    // P(1/X <= t) = P(X >= 1/t) = exp(-1/t)
    CHECK(inv.cdf(2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
    CHECK(power(dirac(3.0), 2.0).quantile(0.5) == doctest::Approx(9.0));
    CHECK_THROWS_AS(power(poisson(1.0), -1.0), DomainError); // atom at 0
}

TEST_CASE("dilation scales location") {
    Measure d = dilate(exponential(), 3.0);
    CHECK(d.cdf(3.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(d.quantile(0.5) == doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-10));
    CHECK(dilate(dirac(2.0), 0.5).quantile(0.9) == doctest::Approx(1.0));
    CHECK(dilate(exponential(), 0.0).atom0() == 1.0);
    Measure sc = dilate(semicircle(2.0, 1.0), 2.0);
    REQUIRE(sc.kind() == Measure::Kind::Catalog);
    CHECK(sc.cdf(4.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("sampling matches quantiles deterministically") {
    Measure e = exponential();
    auto a = e.sample(50, 123);
    auto b = e.sample(50, 123);
    CHECK(a == b);
    auto c = e.sample(50, 124);
    CHECK(a != c);
    // empirical mean of a large exponential sample is near 1
    auto big = e.sample(20000, 7);
    double mean = 0.0;
    for (double x : big) mean += x;
    mean /= big.size();
    CHECK(mean == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("densify reproduces the source cdf") {
    GridMeasure g = densify(exponential(), 2048);
    Measure m = Measure::from_grid(g);
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(m.cdf(t) == doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-6));
    }
    GridMeasure p = densify(poisson(1.0));
    CHECK(p.atom0 > 0.0);
    CHECK(grid_cdf(p, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-12));
}
