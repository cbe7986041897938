// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

//! \file basis.hpp
//! Orthonormal polynomial families on the unit disk.
//!
//! Three weighted Bergman families are built in:
//!
//!   scaled-monomial      p_k = sqrt((k+1)/pi) z^k,                h = 1
//!   weighted-power:j     p_k = sqrt((k+1)(k+j+1)/(pi j)) z^k,     h = 1 - |z|^{2j}
//!   z-minus-one-squared  p_k = sum_m (m+1)(m+2) z^m / sqrt(pi(k+1)(k+2)(k+3)),
//!                                                                 h = |z - 1|^2
//!
//! plus a user-supplied triangular coefficient table, which carries no weight
//! and is only used for sampling and kernel evaluation.

#ifndef BERGMAN_BASIS_HPP
#define BERGMAN_BASIS_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bergman/common.hpp"
#include "bergman/polynomial.hpp"

namespace bergman {

enum class Family
{
    ScaledMonomial,
    WeightedPower,
    ZMinusOneSquared,
    CustomTable,
};

/// Row k holds the k+1 monomial coefficients of p_k.
using CoefficientTable = std::vector<std::vector<cplx>>;

class BasisSpec
{
  public:
    static BasisSpec scaled_monomial();
    static BasisSpec weighted_power(double j);
    static BasisSpec z_minus_one_squared();
    static BasisSpec custom(CoefficientTable rows, std::string source = "inline");

    /// Parses `scaled-monomial`, `weighted-power:j=<real>`,
    /// `z-minus-one-squared` or `custom:<path>`.
    static BasisSpec parse(std::string_view text);

    Family family() const { return family_; }
    double j() const { return j_; }
    const CoefficientTable& table() const;

    /// Largest k for which p_k is available.
    int max_degree() const;

    /// Canonical textual form, accepted back by parse() for the built-in
    /// families.
    std::string name() const;

    /// Weight h(z) of the orthogonality measure h dA, if the family has one.
    std::optional<double> weight(cplx z) const;

    /// Both radially symmetric families: p_k is a multiple of z^k.
    bool is_monomial_family() const
    {
        return family_ == Family::ScaledMonomial || family_ == Family::WeightedPower;
    }

  private:
    BasisSpec(Family family, double j) : family_(family), j_(j) {}

    Family family_;
    double j_ = 0.0;
    std::shared_ptr<const CoefficientTable> table_;
    std::string source_;
};

/// Reads a coefficient table: one row per k, whitespace-separated `re im`
/// pairs.
CoefficientTable load_coefficient_table(const std::filesystem::path& path);

cplx eval_basis(const BasisSpec& spec, int k, cplx z);
cplx eval_basis_derivative(const BasisSpec& spec, int k, cplx z);
MonomialPoly expand_to_monomials(const BasisSpec& spec, int k);

/// kappa_k, the coefficient of z^k in p_k.
double leading_coefficient(const BasisSpec& spec, int k);

struct SutEntry
{
    int k;
    double root; // kappa_k^{1/k}
};

/// kappa_k^{1/k} for k = 1..k_max.
std::vector<SutEntry> sut_diagnostic(const BasisSpec& spec, int k_max);

/// p_0(z)..p_n(z) and their derivatives, filled in O(n) for the built-in
/// families (O(n^2) for custom tables).
struct BasisValues
{
    std::vector<cplx> value;
    std::vector<cplx> derivative;
};

void basis_values(const BasisSpec& spec, int n, cplx z, BasisValues& out);

struct QuadratureOrders
{
    int radial = 0;
    int angular = 0;
};

/// Smallest tensor rule that integrates every Gram entry of degree <= n
/// exactly (for non-integer 2j the radial count is doubled instead).
QuadratureOrders default_gram_orders(const BasisSpec& spec, int n);

struct GramMatrix
{
    int n = 0;
    std::vector<cplx> entries; // row-major (n+1) x (n+1)
    QuadratureOrders orders;
    bool approximate = false;    // radial integrand is not a polynomial
    bool under_resolved = false; // orders below the exactness threshold

    cplx operator()(int a, int b) const { return entries[a * (n + 1) + b]; }
    double max_identity_deviation() const;
};

/// Entry (a, b) = integral over the unit disk of p_a conj(p_b) h dA.
GramMatrix gram_matrix(const BasisSpec& spec, int n,
                       std::optional<QuadratureOrders> orders = std::nullopt);

} // namespace bergman

#endif
