// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

BasisExpansion::BasisExpansion(const BasisSpec& spec, int n) : spec_(spec), n_(n)
{
    if (n < 0)
        throw ParameterError("BasisExpansion: n must be non-negative");
    rows_.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        rows_.push_back(expand_to_monomials(spec, k));
}

MonomialPoly BasisExpansion::combine(std::span<const cplx> eta) const
{
    if (eta.size() != rows_.size())
        throw ParameterError("BasisExpansion::combine: expected " + std::to_string(rows_.size())
                             + " coefficients");
    std::vector<cplx> c(rows_.size(), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < rows_.size(); ++k)
    {
        auto row = rows_[k].coefficients();
        for (std::size_t m = 0; m < row.size(); ++m)
            c[m] += eta[k] * row[m];
    }
    return MonomialPoly(std::move(c));
}

PolynomialSample sample_polynomial(const BasisExpansion& expansion, const CoefficientStream& stream)
{
    PolynomialSample sample;
    sample.seed_index = stream.sample_index();
    sample.basis_coefficients.resize(expansion.degree() + 1);
    for (int k = 0; k <= expansion.degree(); ++k)
        sample.basis_coefficients[k] = stream.gaussian(static_cast<std::uint32_t>(k));
    sample.monomial = expansion.combine(sample.basis_coefficients);
    return sample;
}

PolynomialSample sample_polynomial(const BasisSpec& spec, int n, const CoefficientStream& stream)
{
    return sample_polynomial(BasisExpansion(spec, n), stream);
}

double RootSet::max_residual() const
{
    double worst = 0.0;
    for (double r : residuals)
        worst = std::max(worst, r);
    return worst;
}

namespace {

struct NewtonStep
{
    cplx ratio;   // p(z) / p'(z)
    bool exact;   // p(z) == 0
    double residual;
};

// Newton ratio and backward residual. For |z| > 1 the reversed polynomial
// is evaluated at 1/z so that large iterates cannot overflow.
NewtonStep newton_step(std::span<const cplx> c, cplx z)
{
    const int n = static_cast<int>(c.size()) - 1;
    if (std::abs(z) <= 1.0)
    {
        cplx p{0.0, 0.0};
        cplx dp{0.0, 0.0};
        double scale = 0.0;
        const double az = std::abs(z);
        for (int k = n; k >= 0; --k)
        {
            dp = dp * z + p;
            p = p * z + c[k];
            scale = scale * az + std::abs(c[k]);
        }
        if (p == cplx{0.0, 0.0})
            return {cplx{0.0, 0.0}, true, 0.0};
        return {p / dp, false, std::abs(p) / scale};
    }

    const cplx w = 1.0 / z;
    const double aw = std::abs(w);
    cplx q{0.0, 0.0};
    cplx dq{0.0, 0.0};
    double scale = 0.0;
    for (int k = 0; k <= n; ++k)
    {
        dq = dq * w + q;
        q = q * w + c[k];
        scale = scale * aw + std::abs(c[k]);
    }
    if (q == cplx{0.0, 0.0})
        return {cplx{0.0, 0.0}, true, 0.0};
    // p/p' = z / (n - w q'/q)
    return {z / (static_cast<double>(n) - w * dq / q), false, std::abs(q) / scale};
}

} // namespace

RootSet find_roots(const MonomialPoly& poly, double tol, int max_iter)
{
    RootSet result;
    std::vector<cplx> c(poly.coefficients().begin(), poly.coefficients().end());

    double biggest = 0.0;
    for (const auto& x : c)
        biggest = std::max(biggest, std::abs(x));
    while (!c.empty() && std::abs(c.back()) <= kTrimThreshold * biggest)
    {
        c.pop_back();
        ++result.trimmed;
    }

    // Exact zeros at the origin.
    std::size_t zero_roots = 0;
    while (zero_roots + 1 < c.size() && c[zero_roots] == cplx{0.0, 0.0})
        ++zero_roots;
    result.roots.assign(zero_roots, cplx{0.0, 0.0});
    result.residuals.assign(zero_roots, 0.0);
    if (zero_roots > 0)
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zero_roots));

    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0)
    {
        result.converged = true;
        return result;
    }
    if (n == 1)
    {
        cplx root = -c[0] / c[1];
        result.roots.push_back(root);
        result.residuals.push_back(newton_step(c, root).residual);
        result.converged = true;
        result.iterations = 1;
        return result;
    }

    double bound = 0.0;
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::abs(c[k] / c[n]));
    const double radius = 0.8 * (1.0 + bound);

    std::vector<cplx> z(n);
    for (int m = 0; m < n; ++m)
        z[m] = std::polar(radius, 2.0 * kPi * m / n + 0.4);
    std::vector<char> settled(n, 0);
    int remaining = n;

    int iter = 0;
    bool finite = true;
    while (remaining > 0 && iter < max_iter && finite)
    {
        ++iter;
        for (int i = 0; i < n; ++i)
        {
            if (settled[i])
                continue;
            NewtonStep step = newton_step(c, z[i]);
            if (step.exact)
            {
                settled[i] = 1;
                --remaining;
                continue;
            }
            cplx repulsion{0.0, 0.0};
            for (int j = 0; j < n; ++j)
                if (j != i)
                    repulsion += 1.0 / (z[i] - z[j]);
            cplx correction = step.ratio / (1.0 - step.ratio * repulsion);
            z[i] -= correction;
            if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
            {
                finite = false;
                break;
            }
            if (std::abs(correction) <= tol * std::max(1.0, std::abs(z[i])))
            {
                settled[i] = 1;
                --remaining;
            }
        }
    }

    result.iterations = iter;
    for (int i = 0; i < n; ++i)
    {
        result.roots.push_back(z[i]);
        result.residuals.push_back(finite ? newton_step(c, z[i]).residual
                                          : std::numeric_limits<double>::infinity());
    }
    result.converged = finite && remaining == 0 && result.max_residual() <= kResidualBound;
    return result;
}

int count_in_disk(const RootSet& roots, double r)
{
    return static_cast<int>(std::count_if(roots.roots.begin(), roots.roots.end(),
                                          [r](cplx z) { return std::abs(z) < r; }));
}

} // namespace bergman
