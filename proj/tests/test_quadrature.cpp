// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "bergman/quadrature.hpp"

using namespace bergman;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly")
{
    for (int m : {1, 2, 5, 17, 64, 201})
    {
        auto rule = gauss_legendre(m);
        double weight_sum = 0.0;
        for (double w : rule.weights)
            weight_sum += w;
        CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));

        // x^d integrates to 2/(d+1) for even d, 0 for odd d.
        for (int d = 0; d <= 2 * m - 1; d += std::max(1, m / 3))
        {
            double integral = 0.0;
            for (int i = 0; i < m; ++i)
                integral += rule.weights[i] * std::pow(rule.nodes[i], d);
            double exact = d % 2 ? 0.0 : 2.0 / (d + 1.0);
            CHECK(std::abs(integral - exact) < 1e-13);
        }
        for (int i = 1; i < m; ++i)
            CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    CHECK_THROWS_AS(gauss_legendre(0), ParameterError);
}

TEST_CASE("disk rule")
{
    auto rule = disk_rule(0.5, 8, 16);
    CHECK(rule.size() == 128);
    CHECK(rule.integrate([](cplx) { return 1.0; }) == doctest::Approx(kPi * 0.25).epsilon(1e-14));
    // |z|^4 over D(0, r) is pi r^6 / 3.
    CHECK(rule.integrate([](cplx z) { return std::norm(z) * std::norm(z); })
          == doctest::Approx(kPi * std::pow(0.5, 6) / 3.0).epsilon(1e-13));
    // Re(z^3) averages to zero over every circle.
    CHECK(std::abs(rule.integrate([](cplx z) { return (z * z * z).real(); })) < 1e-15);
    CHECK_THROWS_AS(disk_rule(0.0, 4, 4), ParameterError);
}
