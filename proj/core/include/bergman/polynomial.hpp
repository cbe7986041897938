// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_POLYNOMIAL_HPP
#define BERGMAN_POLYNOMIAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "bergman/common.hpp"

namespace bergman {

/// Dense polynomial c_0 + c_1 z + ... + c_n z^n in the monomial basis.
class MonomialPoly
{
  public:
    MonomialPoly() = default;
    explicit MonomialPoly(std::vector<cplx> coefficients)
        : coefficients_(std::move(coefficients))
    {
    }

    std::span<const cplx> coefficients() const { return coefficients_; }
    std::vector<cplx>& mutable_coefficients() { return coefficients_; }

    /// Index of the highest stored coefficient; 0 for an empty polynomial.
    int degree() const
    {
        return coefficients_.empty() ? 0
                                     : static_cast<int>(coefficients_.size()) - 1;
    }

    bool empty() const { return coefficients_.empty(); }

    cplx operator[](std::size_t i) const { return coefficients_[i]; }

    cplx evaluate(cplx z) const
    {
        cplx acc{0.0, 0.0};
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    /// Value and first derivative in one Horner pass.
    std::pair<cplx, cplx> evaluate_with_derivative(cplx z) const
    {
        cplx p{0.0, 0.0};
        cplx dp{0.0, 0.0};
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        {
            dp = dp * z + p;
            p = p * z + *it;
        }
        return {p, dp};
    }

    MonomialPoly derivative() const
    {
        std::vector<cplx> d;
        if (coefficients_.size() > 1)
        {
            d.resize(coefficients_.size() - 1);
            for (std::size_t k = 1; k < coefficients_.size(); ++k)
                d[k - 1] = static_cast<double>(k) * coefficients_[k];
        }
        return MonomialPoly(std::move(d));
    }

  private:
    std::vector<cplx> coefficients_;
};

} // namespace bergman

#endif
