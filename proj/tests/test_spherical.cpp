#include "strichartz/spherical.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace strichartz;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("funk-hecke eigenvalues", "[spherical]") {
    CHECK(funk_hecke_eigenvalue_numeric(0, 3) == Catch::Approx(4.0 * kPi).epsilon(1e-12));
    CHECK(funk_hecke_eigenvalue_numeric(1, 3)
          == Catch::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
    for (unsigned d : {3u, 4u, 5u}) {
        const double area = unit_sphere_area(d);
        for (unsigned n = 0; n <= 10; ++n) {
            double closed = funk_hecke_eigenvalue_closed(n, d).rational_part.to_double() * area;
            double numeric = funk_hecke_eigenvalue_numeric(n, d);
            CHECK(std::abs(numeric - closed) <= 1e-10 * std::abs(closed));
        }
    }
    CHECK_THROWS_AS(funk_hecke_eigenvalue_numeric(2, 2), std::invalid_argument);
}

TEST_CASE("closed eigenvalue fractions decrease to zero", "[spherical]") {
    CHECK(funk_hecke_eigenvalue_closed(0, 3).rational_part == Rational(1));
    CHECK(funk_hecke_eigenvalue_closed(0, 7).rational_part == Rational(1));
    CHECK(funk_hecke_eigenvalue_closed(1, 3).rational_part == Rational(1, 3));
    for (unsigned d : {3u, 4u, 5u}) {
        Rational prev = funk_hecke_eigenvalue_closed(0, d).rational_part;
        for (unsigned n = 1; n <= 20; ++n) {
            Rational cur = funk_hecke_eigenvalue_closed(n, d).rational_part;
            CHECK(cur < prev);
            CHECK(cur > Rational(0));
            prev = cur;
        }
        CHECK(prev < Rational(1, 10));
    }
}

TEST_CASE("spectral gap is exactly 2/d at degree one", "[spherical]") {
    for (unsigned d : {3u, 4u, 5u, 7u}) {
        const Rational gap_bound(2, static_cast<long long>(d));
        for (unsigned n = 1; n <= 20; ++n) {
            Rational gap = Rational(1) - funk_hecke_eigenvalue_closed(n, d).rational_part;
            CHECK(gap >= gap_bound);
            if (n == 1)
                CHECK(gap == gap_bound);
            else
                CHECK(gap > gap_bound);
        }
    }
}

TEST_CASE("gegenbauer moment formula", "[spherical]") {
    MomentCheck base = gegenbauer_moment_check(0, Rational(1, 2), Rational(1, 2));
    CHECK(base.lhs == Catch::Approx(base.rhs).epsilon(1e-10));
    for (const Rational& nu : {Rational(1, 2), Rational(1), Rational(3, 2)})
        for (const Rational& a : {Rational(1, 4), nu})
            for (unsigned n = 0; n <= 8; ++n) {
                MomentCheck mc = gegenbauer_moment_check(n, nu, a);
                CHECK(std::abs(mc.lhs - mc.rhs) <= 1e-9 * std::max(1e-30, std::abs(mc.rhs)));
            }
    CHECK_THROWS_AS(gegenbauer_moment_check(2, Rational(1, 2), Rational(2)), std::domain_error);
    CHECK_THROWS_AS(gegenbauer_moment_check(2, Rational(1, 2), Rational(0)), std::domain_error);
}

TEST_CASE("weighted quadratic form", "[spherical]") {
    // constants: saturation with zero distance
    WeightedFormResult c = weighted_form({3, {cplx(2.0, -1.0)}});
    CHECK(c.dist2 == 0.0);
    CHECK(c.form == Catch::Approx(c.bound).epsilon(1e-13));

    // pure degree 1 in d = 3: the 2/d gap is attained, equality again
    WeightedFormResult y1 = weighted_form({3, {cplx(0.0), cplx(1.0)}});
    CHECK(y1.form == Catch::Approx(y1.bound).epsilon(1e-12));
    CHECK(y1.form == Catch::Approx((1.0 / 3.0) * 4.0 * kPi
                                   * (unit_sphere_area(2) * 2.0 / 3.0)).epsilon(1e-12));

    // pure degree 2: strictly below
    WeightedFormResult y2 = weighted_form({3, {cplx(0.0), cplx(0.0), cplx(1.0)}});
    CHECK(y2.form < y2.bound * (1.0 - 1e-3));

    // mixed data: inequality, strict whenever dist2 > 0 and a degree >= 2 is present
    WeightedFormResult mix = weighted_form({4, {cplx(1.0), cplx(0.5, 0.3), cplx(-0.2)}});
    CHECK(mix.dist2 > 0.0);
    CHECK(mix.form <= mix.bound);
}

TEST_CASE("weighted space-time equality for radial gaussians", "[spherical]") {
    SpacetimeCheckResult g1 = weighted_spacetime_gaussian_check(3, 1.0);
    CHECK(g1.rhs == Catch::Approx(kPi * std::pow(2.0, -1.5)).epsilon(1e-14));
    CHECK(std::abs(g1.lhs - g1.rhs) <= 1e-5 * g1.rhs);

    SpacetimeCheckResult g2 = weighted_spacetime_gaussian_check(3, 2.0);
    CHECK(std::abs(g2.lhs - g2.rhs) <= 1e-5 * g2.rhs);

    CHECK_THROWS_AS(weighted_spacetime_gaussian_check(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(weighted_spacetime_gaussian_check(3, -1.0), std::domain_error);
}

TEST_CASE("degree-one perturbation keeps the sharp balance", "[spherical]") {
    SpacetimeCheckResult p = weighted_spacetime_perturbed_check(0.3);
    CHECK(std::abs(p.lhs - p.rhs) <= 1e-4 * p.rhs);
    CHECK(p.lhs <= p.rhs * (1.0 + 1e-4));
}
