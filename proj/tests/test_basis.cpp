// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "bergman/basis.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

std::vector<BasisSpec> named_families()
{
    return {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0),
            BasisSpec::z_minus_one_squared()};
}

cplx central_difference(const BasisSpec& spec, int k, cplx z, double h = 1e-5)
{
    return (eval_basis(spec, k, z + h) - eval_basis(spec, k, z - h)) / (2.0 * h);
}

} // namespace

TEST_CASE("eval_basis reference values")
{
    CHECK(std::abs(eval_basis(BasisSpec::scaled_monomial(), 0, {0.3, 0.4}) - 0.5641895835477563)
          < 1e-15);

    cplx v = eval_basis(BasisSpec::weighted_power(1.0), 1, {0.0, 1.0});
    CHECK(std::abs(v.real()) < 1e-15);
    CHECK(v.imag() == doctest::Approx(1.381976597885342).epsilon(1e-14));

    cplx w = eval_basis(BasisSpec::z_minus_one_squared(), 1, 0.0);
    CHECK(w.real() == doctest::Approx(0.23032943298089034).epsilon(1e-14));
    CHECK(w.imag() == 0.0);
}

TEST_CASE("eval_basis_derivative")
{
    auto sm = BasisSpec::scaled_monomial();
    CHECK(std::abs(eval_basis_derivative(sm, 1, {0.2, -0.7}) - 0.7978845608028654) < 1e-15);
    CHECK(eval_basis_derivative(sm, 0, {0.2, -0.7}) == cplx{0.0, 0.0});

    auto zm1 = BasisSpec::z_minus_one_squared();
    cplx exact = eval_basis_derivative(zm1, 2, 1.0);
    CHECK(std::abs(exact - central_difference(zm1, 2, 1.0)) < 1e-7);

    SUBCASE("matches central differences on |z| <= 0.9")
    {
        auto pts = oracle::random_points(40, 0.9, 7);
        for (const auto& spec : named_families())
            for (int k = 0; k <= 20; ++k)
                for (cplx z : pts)
                    CHECK(std::abs(eval_basis_derivative(spec, k, z) - central_difference(spec, k, z))
                          < 1e-6);
    }
}

TEST_CASE("expand_to_monomials")
{
    auto sm = expand_to_monomials(BasisSpec::scaled_monomial(), 2);
    REQUIRE(sm.degree() == 2);
    CHECK(sm[0] == cplx{0.0, 0.0});
    CHECK(sm[1] == cplx{0.0, 0.0});
    CHECK(sm[2].real() == doctest::Approx(0.9772050238058398).epsilon(1e-15));

    auto z0 = expand_to_monomials(BasisSpec::z_minus_one_squared(), 0);
    REQUIRE(z0.degree() == 0);
    CHECK(z0[0].real() == doctest::Approx(0.4606588659617807).epsilon(1e-15));

    SUBCASE("closed coefficients agree with the nested-sum expansion")
    {
        auto spec = BasisSpec::z_minus_one_squared();
        for (int k = 0; k <= 50; ++k)
        {
            auto closed = expand_to_monomials(spec, k);
            auto nested = oracle::zm1_nested(k);
            for (int m = 0; m <= k; ++m)
                CHECK(std::abs(closed[m] - nested[m]) <= 1e-14 * std::abs(nested[m]));
        }
    }

    SUBCASE("expansion reproduces eval_basis")
    {
        auto pts = oracle::random_points(100, 1.5, 11);
        for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0),
                                 BasisSpec::weighted_power(2.5), BasisSpec::z_minus_one_squared()})
            for (int k = 0; k <= 50; ++k)
            {
                auto poly = expand_to_monomials(spec, k);
                for (cplx z : pts)
                {
                    cplx direct = eval_basis(spec, k, z);
                    CHECK(std::abs(direct - poly.evaluate(z)) <= 1e-11 * (1.0 + std::abs(direct)));
                }
            }
    }

    SUBCASE("relative agreement for |z| < 2")
    {
        auto pts = oracle::random_points(100, 2.0, 5);
        auto spec = BasisSpec::z_minus_one_squared();
        for (int k : {3, 10, 25})
        {
            auto poly = expand_to_monomials(spec, k);
            for (cplx z : pts)
            {
                cplx via_oracle = oracle::power_sum(oracle::coefficients(oracle::Fam::ZMinusOne, k), z);
                CHECK(std::abs(poly.evaluate(z) - via_oracle) <= 1e-11 * std::abs(via_oracle));
            }
        }
    }
}

TEST_CASE("leading_coefficient")
{
    CHECK(leading_coefficient(BasisSpec::scaled_monomial(), 4)
          == doctest::Approx(1.2615662610100802).epsilon(1e-15));
    CHECK(leading_coefficient(BasisSpec::weighted_power(2.0), 3)
          == doctest::Approx(1.9544100476116797).epsilon(1e-15));

    auto zm1 = BasisSpec::z_minus_one_squared();
    CHECK(leading_coefficient(zm1, 2) == doctest::Approx(0.8740387444736633).epsilon(1e-14));
    for (int k = 0; k <= 60; ++k)
    {
        double expanded = expand_to_monomials(zm1, k)[k].real();
        CHECK(leading_coefficient(zm1, k) == doctest::Approx(expanded).epsilon(1e-13));
    }

    for (const auto& spec : named_families())
        for (int k = 0; k <= 200; ++k)
            CHECK(leading_coefficient(spec, k) > 0.0);
}

TEST_CASE("sut_diagnostic")
{
    auto sm = sut_diagnostic(BasisSpec::scaled_monomial(), 100);
    REQUIRE(sm.size() == 100);
    CHECK(sm.back().k == 100);
    CHECK(sm.back().root == doctest::Approx(1.0175033728352925).epsilon(1e-12));

    auto wp = sut_diagnostic(BasisSpec::weighted_power(1.0), 200);
    CHECK(std::abs(wp.back().root - 1.0) < 0.05);

    for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(1.0),
                             BasisSpec::weighted_power(2.0), BasisSpec::z_minus_one_squared()})
    {
        auto diag = sut_diagnostic(spec, 300);
        for (const auto& e : diag)
        {
            CHECK(e.root > 0.0);
            if (e.k >= 5)
            {
                CHECK(e.root >= 1.0);
                CHECK(e.root <= 1.5);
            }
            if (e.k > 10)
                CHECK(e.root < diag[e.k - 2].root);
        }
    }

    CHECK_THROWS_AS(sut_diagnostic(BasisSpec::scaled_monomial(), 1), ParameterError);
}

TEST_CASE("gram_matrix is the identity for all built-in families")
{
    CHECK(gram_matrix(BasisSpec::scaled_monomial(), 5).max_identity_deviation() < 1e-12);
    CHECK(gram_matrix(BasisSpec::weighted_power(1.0), 10).max_identity_deviation() < 1e-10);
    CHECK(gram_matrix(BasisSpec::z_minus_one_squared(), 10).max_identity_deviation() < 1e-10);

    for (const auto& spec : named_families())
    {
        auto g = gram_matrix(spec, 30);
        CHECK_FALSE(g.approximate);
        CHECK_FALSE(g.under_resolved);
        CHECK(g.max_identity_deviation() <= 1e-9);
    }

    SUBCASE("integer 2j stays exact")
    {
        auto g = gram_matrix(BasisSpec::weighted_power(2.5), 12);
        CHECK_FALSE(g.approximate);
        CHECK(g.max_identity_deviation() < 1e-10);
    }

    SUBCASE("non-integer 2j is flagged approximate")
    {
        auto g = gram_matrix(BasisSpec::weighted_power(0.3), 8);
        CHECK(g.approximate);
        CHECK(g.max_identity_deviation() < 1e-3);
    }

    SUBCASE("low orders are flagged")
    {
        auto g = gram_matrix(BasisSpec::scaled_monomial(), 10, QuadratureOrders{4, 8});
        CHECK(g.under_resolved);
        CHECK(g.max_identity_deviation() > 1e-6);
    }

    CHECK_THROWS_AS(gram_matrix(BasisSpec::custom({{1.0}, {0.0, 1.0}}), 1), ParameterError);
}

TEST_CASE("basis_values agrees with single evaluations")
{
    auto pts = oracle::random_points(25, 1.2, 3);
    auto custom = BasisSpec::custom({{{0.5, 0.1}}, {{1.0, 0.0}, {0.0, 2.0}}, {1.0, -1.0, {0.3, 0.3}}});
    BasisValues values;
    for (const auto& spec : {BasisSpec::scaled_monomial(), BasisSpec::weighted_power(0.7),
                             BasisSpec::z_minus_one_squared(), custom})
    {
        int n = std::min(40, spec.max_degree());
        for (cplx z : pts)
        {
            basis_values(spec, n, z, values);
            for (int k = 0; k <= n; ++k)
            {
                cplx p = eval_basis(spec, k, z);
                cplx dp = eval_basis_derivative(spec, k, z);
                CHECK(std::abs(values.value[k] - p) <= 1e-12 * (1.0 + std::abs(p)));
                CHECK(std::abs(values.derivative[k] - dp) <= 1e-12 * (1.0 + std::abs(dp)));
            }
        }
    }
}

TEST_CASE("BasisSpec validation and parsing")
{
    CHECK_THROWS_AS(BasisSpec::weighted_power(0.0), ParameterError);
    CHECK_THROWS_AS(BasisSpec::weighted_power(-1.0), ParameterError);
    CHECK_THROWS_AS(BasisSpec::custom({}), ParameterError);
    CHECK_THROWS_AS(BasisSpec::custom({{1.0}, {1.0}}), ParameterError);
    CHECK_THROWS_AS(BasisSpec::custom({{1.0}, {1.0, 0.0}}), ParameterError);
    CHECK_THROWS_AS(eval_basis(BasisSpec::scaled_monomial(), -1, 0.0), ParameterError);
    CHECK_THROWS_AS(eval_basis(BasisSpec::custom({{1.0}}), 1, 0.0), ParameterError);

    CHECK(BasisSpec::parse("scaled-monomial").family() == Family::ScaledMonomial);
    CHECK(BasisSpec::parse("z-minus-one-squared").family() == Family::ZMinusOneSquared);
    auto wp = BasisSpec::parse("weighted-power:j=2.5");
    CHECK(wp.family() == Family::WeightedPower);
    CHECK(wp.j() == 2.5);
    CHECK(BasisSpec::parse(wp.name()).j() == 2.5);
    CHECK_THROWS_AS(BasisSpec::parse("weighted-power:j=0"), ParameterError);
    CHECK_THROWS_AS(BasisSpec::parse("weighted-power:j=abc"), ParameterError);
    CHECK_THROWS_AS(BasisSpec::parse("legendre"), ParameterError);
    CHECK_THROWS_AS(BasisSpec::parse("custom:/nonexistent/table.txt"), ParameterError);
}

TEST_CASE("custom coefficient file")
{
    auto path = std::filesystem::temp_directory_path() / "bergman_custom_table_test.txt";
    {
        std::ofstream out(path);
        out << "# Kac basis z^k\n"
            << "1 0\n"
            << "0 0  1 0\n"
            << "\n"
            << "0 0  0 0  1 0\n";
    }
    auto spec = BasisSpec::parse("custom:" + path.string());
    CHECK(spec.family() == Family::CustomTable);
    CHECK(spec.max_degree() == 2);
    CHECK(std::abs(eval_basis(spec, 2, {0.0, 2.0}) - cplx{-4.0, 0.0}) < 1e-15);
    CHECK(leading_coefficient(spec, 1) == 1.0);
    CHECK_FALSE(spec.weight(0.5).has_value());

    {
        std::ofstream out(path);
        out << "1 0\n0 0 1\n";
    }
    CHECK_THROWS_AS(BasisSpec::parse("custom:" + path.string()), ParameterError);
    {
        std::ofstream out(path);
        out << "1 0\n0 0 0 0\n";
    }
    CHECK_THROWS_AS(BasisSpec::parse("custom:" + path.string()), ParameterError);
    std::filesystem::remove(path);
}
