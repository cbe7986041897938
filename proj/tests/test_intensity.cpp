// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bergman/counts.hpp"
#include "bergman/intensity.hpp"
#include "bergman/quadrature.hpp"
#include "oracles.hpp"

using namespace bergman;

TEST_CASE("intensity_general")
{
    for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0),
                             BasisSpec::z_minus_one_squared()})
        for (cplx z : oracle::random_points(20, 0.99, 2))
            CHECK(intensity_general(spec, 0, z) == 0.0);

    CHECK(intensity_general(BasisSpec::scaled_monomial(), 1, 0.0)
          == doctest::Approx(0.6366197723675814).epsilon(1e-14));

    cplx z{0.4, -0.3};
    CHECK(oracle::rel_diff(intensity_general(BasisSpec::scaled_monomial(), 6, z),
                           intensity_closed(6, z))
          < 1e-10);

    CHECK_THROWS_AS(intensity_general(BasisSpec::scaled_monomial(), 3, 1.0), DomainError);
    CHECK_THROWS_AS(intensity_general(BasisSpec::scaled_monomial(), 3, {0.8, 0.7}), DomainError);
}

TEST_CASE("intensity_general against the Lagrange-identity oracle")
{
    auto pts = oracle::random_points(25, 0.9, 31);
    for (int n : {1, 3, 12})
        for (cplx z : pts)
        {
            CHECK(oracle::rel_diff(intensity_general(BasisSpec::z_minus_one_squared(), n, z),
                                   oracle::intensity_lagrange(oracle::Fam::ZMinusOne, n, z))
                  < 1e-10);
            CHECK(oracle::rel_diff(intensity_general(BasisSpec::weighted_power(1.0), n, z),
                                   oracle::intensity_lagrange(oracle::Fam::Weighted, n, z))
                  < 1e-10);
        }
}

TEST_CASE("intensity_closed")
{
    CHECK(intensity_closed(0, 0.5) == 0.0);
    for (int n : {1, 2, 10, 100})
        CHECK(intensity_closed(n, 0.0) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    CHECK(oracle::rel_diff(intensity_closed(25, 0.8),
                           intensity_general(BasisSpec::scaled_monomial(), 25, 0.8))
          < 1e-9);

    auto pts = oracle::random_points(50, 0.97, 17);
    for (int n : {1, 5, 40, 200})
        for (cplx z : pts)
        {
            double closed = intensity_closed(n, z);
            double general = intensity_general(BasisSpec::scaled_monomial(), n, z);
            CHECK(std::abs(closed - general) <= 1e-9 * general + 1e-12);
        }
    CHECK_THROWS_AS(intensity_closed(4, {0.0, 1.0}), DomainError);
}

TEST_CASE("intensity_limit")
{
    CHECK(intensity_limit(0.0) == doctest::Approx(0.6366197723675814).epsilon(1e-15));
    CHECK(intensity_limit(0.5) == doctest::Approx(1.1317684842090336).epsilon(1e-15));
    CHECK_THROWS_AS(intensity_limit(1.0), DomainError);

    SUBCASE("pointwise approach in n")
    {
        for (cplx z : {cplx{0.0}, cplx{0.3}, cplx{0.6}, std::polar(0.9, kPi / 4)})
        {
            double gap50 = std::abs(intensity_closed(50, z) - intensity_limit(z));
            double gap400 = std::abs(intensity_closed(400, z) - intensity_limit(z));
            CHECK(gap400 <= gap50);
            if (std::abs(z) > 0.0 && gap50 > 1e-14)
                CHECK(gap400 < gap50);
        }
    }

    SUBCASE("uniform gap on |z| <= 0.5 shrinks for the full-disk weights")
    {
        auto pts = oracle::random_points(200, 0.5, 41);
        pts.push_back(0.5);
        for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::z_minus_one_squared()})
        {
            double previous = INFINITY;
            for (int n : {10, 20, 40, 80})
            {
                double sup = 0.0;
                for (cplx z : pts)
                    sup = std::max(sup, std::abs(intensity_general(spec, n, z) - intensity_limit(z)));
                CHECK((sup < previous || sup < 1e-14));
                previous = sup;
            }
            if (spec.family() == Family::ScaledMonomial)
                CHECK(previous < 1e-12);
        }
    }

    SUBCASE("weighted-power j=1 converges to 3 / (pi (1-|z|^2)^2) instead")
    {
        // K_n -> sum (k+1)(k+2) s^k / pi = 2 / (pi (1-s)^3), whose log-Laplacian
        // gives a density 3/2 times the unweighted one.
        auto spec = BasisSpec::weighted_power(1.0);
        auto pts = oracle::random_points(100, 0.5, 43);
        double previous = INFINITY;
        for (int n : {10, 20, 40, 80})
        {
            double sup = 0.0;
            for (cplx z : pts)
                sup = std::max(sup, std::abs(intensity_general(spec, n, z) - 1.5 * intensity_limit(z)));
            CHECK((sup < previous || sup < 1e-14));
            previous = sup;
        }
        CHECK(previous < 1e-12);
    }
}

TEST_CASE("kac_intensity")
{
    for (int n : {1, 3, 50})
        CHECK(kac_intensity(n, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    for (cplx z : oracle::random_points(10, 0.9, 4))
        CHECK(std::abs(kac_intensity(0, z)) < 1e-14);

    // Radial integral over D(0, 0.5) against Arnold's formula.
    auto rule = disk_rule(0.5, 40, 1);
    double integral = rule.integrate([](cplx z) { return kac_intensity(20, z); });
    CHECK(std::abs(integral - oracle::arnold(20, 0.5)) < 1e-8);
    CHECK(std::abs(integral - 0.33333333332855847) < 1e-8);
    CHECK_THROWS_AS(kac_intensity(3, 1.0), DomainError);
}

TEST_CASE("intensity invariants")
{
    auto pts = oracle::random_points(100, 0.98, 9);
    for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0),
                             BasisSpec::z_minus_one_squared()})
        for (cplx z : pts)
            for (int n : {1, 7, 30})
                CHECK(intensity_general(spec, n, z) >= 0.0);

    SUBCASE("radial symmetry")
    {
        for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0)})
            for (cplx z : pts)
                CHECK(oracle::rel_diff(intensity_general(spec, 15, z),
                                       intensity_general(spec, 15, std::abs(z)))
                      < 1e-12);
    }

    SUBCASE("finite along the real diameter")
    {
        for (int i = -99; i <= 99; ++i)
        {
            double x = i / 100.0;
            double rho = intensity_general(BasisSpec::z_minus_one_squared(), 20, x);
            CHECK(std::isfinite(rho));
        }
    }
}

TEST_CASE("intensity_grid")
{
    auto zero = intensity_grid(BasisSpec::scaled_monomial(), 0, {-0.5, 0.5, -0.5, 0.5}, 3);
    REQUIRE(zero.values.size() == 9);
    for (double v : zero.values)
        CHECK(v == 0.0);

    for (int res : {3, 11, 101})
    {
        auto g = intensity_grid(BasisSpec::scaled_monomial(), 9, {-0.8, 0.8, -0.8, 0.8}, res);
        CHECK(g.at(res / 2, res / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
    }

    auto full = intensity_grid(BasisSpec::scaled_monomial(), 4, {-1.2, 1.2, -1.2, 1.2}, 5);
    CHECK_FALSE(full.inside[0]);
    CHECK(full.inside[12]);

    SUBCASE("midpoint sum matches a tensor Gauss rule on the square")
    {
        const int res = 141;
        const double half = 0.7;
        const double h = 2.0 * half / res;
        Window w{-half + h / 2, half - h / 2, -half + h / 2, half - h / 2};
        auto spec = BasisSpec::scaled_monomial();
        auto g = intensity_grid(spec, 10, w, res);
        double midpoint = 0.0;
        for (std::size_t i = 0; i < g.values.size(); ++i)
            if (g.inside[i])
                midpoint += g.values[i] * h * h;

        auto gl = gauss_legendre(60);
        double reference = 0.0;
        for (int a = 0; a < 60; ++a)
            for (int b = 0; b < 60; ++b)
                reference += gl.weights[a] * gl.weights[b] * half * half
                             * intensity_general(spec, 10, {half * gl.nodes[a], half * gl.nodes[b]});
        CHECK(std::abs(midpoint - reference) < 0.05 * reference);
    }

    SUBCASE("CSV layout")
    {
        auto g = intensity_grid(BasisSpec::scaled_monomial(), 2, {-1.5, 1.5, -1.5, 1.5}, 3);
        std::ostringstream out;
        write_csv(out, g);
        std::string text = out.str();
        CHECK(text.rfind("x,y,rho,inside\n", 0) == 0);
        CHECK(text.find("-1.5,-1.5,,0\n") != std::string::npos);
        CHECK(text.find("0,0,0.63661977236758") != std::string::npos);
    }

    CHECK_THROWS_AS(intensity_grid(BasisSpec::scaled_monomial(), 2, {}, 1), ParameterError);
}
