// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_SAMPLER_HPP
#define BERGMAN_SAMPLER_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/polynomial.hpp"
#include "bergman/rng.hpp"

namespace bergman {

/// Monomial expansions of p_0..p_n, computed once and reused for every
/// sample of an ensemble.
class BasisExpansion
{
  public:
    BasisExpansion(const BasisSpec& spec, int n);

    int degree() const { return n_; }
    const BasisSpec& spec() const { return spec_; }

    /// Monomial coefficients of sum_k eta_k p_k.
    MonomialPoly combine(std::span<const cplx> eta) const;

  private:
    BasisSpec spec_;
    int n_;
    std::vector<MonomialPoly> rows_;
};

struct PolynomialSample
{
    std::vector<cplx> basis_coefficients; // eta_0 .. eta_n
    MonomialPoly monomial;
    std::uint64_t seed_index = 0;
};

PolynomialSample sample_polynomial(const BasisExpansion& expansion, const CoefficientStream& stream);
PolynomialSample sample_polynomial(const BasisSpec& spec, int n, const CoefficientStream& stream);

struct RootSet
{
    std::vector<cplx> roots;
    std::vector<double> residuals; // |P(z)| / sum |c_k| |z|^k
    bool converged = false;
    int iterations = 0;
    int trimmed = 0; // leading coefficients dropped as numerically zero

    double max_residual() const;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 200;
inline constexpr double kTrimThreshold = 1e-13;
inline constexpr double kResidualBound = 1e-8;

/// All zeros of poly by Aberth-Ehrlich simultaneous iteration. A root is
/// settled once its correction drops below tol * max(1, |z|); the set is
/// converged when every root settles within max_iter sweeps and the
/// backward residuals stay below kResidualBound.
RootSet find_roots(const MonomialPoly& poly, double tol = kRootTolerance,
                   int max_iter = kRootMaxIterations);

/// Number of roots with |z| < r. r may be +infinity.
int count_in_disk(const RootSet& roots, double r);

} // namespace bergman

#endif
