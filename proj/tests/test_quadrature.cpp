#include "strichartz/poly.hpp"
#include "strichartz/quadrature.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace strichartz;

TEST_CASE("hermite-gamma rule basics", "[quadrature]") {
    QuadRule r1 = gauss_hermite_gamma(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1.nodes[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(r1.weights[0] == Catch::Approx(1.0).epsilon(1e-14));

    QuadRule r = gauss_hermite_gamma(12);
    double mass = 0.0;
    for (double w : r.weights) {
        CHECK(w > 0.0);
        mass += w;
    }
    CHECK(mass == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(integrate(r, [](double) { return 1.0; }) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(integrate(r, [](double x) { return x * x * x * x; })
          == Catch::Approx(3.0).epsilon(1e-12));
    // degree exactness 2n-1 against exact Gaussian moments; the error scale
    // for cancelling (odd) integrands is the magnitude of the summation
    for (unsigned j = 0; j <= 23; ++j) {
        double exact = gaussian_moment(j).to_double();
        double got = integrate(r, [&](double x) { return std::pow(x, j); });
        double scale = integrate(r, [&](double x) { return std::pow(std::abs(x), j); });
        CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("laguerre rule closed form for n=2", "[quadrature]") {
    QuadRule r = gauss_laguerre(2, 0.0);
    REQUIRE(r.size() == 2);
    const double s2 = std::sqrt(2.0);
    CHECK(r.nodes[0] == Catch::Approx(2.0 - s2).epsilon(1e-13));
    CHECK(r.nodes[1] == Catch::Approx(2.0 + s2).epsilon(1e-13));
    CHECK(r.weights[0] == Catch::Approx((2.0 + s2) / 4.0).epsilon(1e-13));
    CHECK(r.weights[1] == Catch::Approx((2.0 - s2) / 4.0).epsilon(1e-13));
}

TEST_CASE("laguerre rule vs exact exponential integrals", "[quadrature]") {
    Poly p = laguerre(3, Rational(0)).scale_arg(Rational(1, 2));
    Poly sq = p * p;
    double exact = integrate_exponential(sq, 0).to_double();
    QuadRule r = gauss_laguerre(nodes_for_degree(6), 0.0);
    double got = integrate(r, [&](double x) { return sq.eval(x); });
    CHECK(got == Catch::Approx(exact).epsilon(1e-12));

    // mass = Gamma(nu+1), weights positive
    for (double nu : {0.0, 1.0, 0.5, 2.0}) {
        QuadRule rn = gauss_laguerre(10, nu);
        double mass = 0.0;
        for (double w : rn.weights) {
            CHECK(w > 0.0);
            mass += w;
        }
        CHECK(mass == Catch::Approx(std::tgamma(nu + 1.0)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_laguerre(3, -1.5), std::invalid_argument);
}

TEST_CASE("jacobi rule integrates the singular-weight monomials", "[quadrature]") {
    // weight (1-u)^{-1/2}: int_{-1}^1 u^k (1-u)^{-1/2} du
    //   = sum_j binom(k,j) (-1)^j 2^{j+1/2} / (j+1/2)   (substituting t = 1-u)
    QuadRule r = gauss_jacobi(5, -0.5, 0.0);
    for (unsigned k = 0; k <= 9; ++k) {
        double exact = 0.0;
        for (unsigned j = 0; j <= k; ++j)
            exact += binomial(k, j).to_double() * (j % 2 ? -1.0 : 1.0)
                     * std::pow(2.0, j + 0.5) / (j + 0.5);
        double got = integrate(r, [&](double u) { return std::pow(u, k); });
        CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
    // mass = 2^{a+b+1} B(a+1, b+1)
    for (auto [a, b] : {std::pair{-0.5, 0.0}, {-0.5, 0.5}, {0.25, 1.5}}) {
        QuadRule rj = gauss_jacobi(8, a, b);
        double mass = 0.0;
        for (double w : rj.weights) {
            CHECK(w > 0.0);
            mass += w;
        }
        double expect = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0)
                                 + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
        CHECK(mass == Catch::Approx(expect).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_jacobi(3, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("integrate rejects non-finite values", "[quadrature]") {
    QuadRule r = gauss_laguerre(4, 0.0);
    CHECK_THROWS_AS(integrate(r, [](double x) { return 1.0 / (x - x); }), std::domain_error);
}

TEST_CASE("node doubling converges for non-polynomial integrands", "[quadrature]") {
    // int e^{cos x} dgamma: smooth, non-polynomial
    double v = integrate_to_convergence([](std::size_t n) { return gauss_hermite_gamma(n); },
                                        [](double x) { return std::exp(std::cos(x)); });
    double ref = integrate(gauss_hermite_gamma(400), [](double x) { return std::exp(std::cos(x)); });
    CHECK(v == Catch::Approx(ref).epsilon(1e-12));
}

TEST_CASE("rules are deterministic across construction", "[quadrature]") {
    QuadRule a = gauss_jacobi(20, -0.5, 0.5), b = gauss_jacobi(20, -0.5, 0.5);
    CHECK(a.nodes == b.nodes);
    CHECK(a.weights == b.weights);
}
