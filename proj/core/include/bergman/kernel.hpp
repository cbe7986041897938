// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_KERNEL_HPP
#define BERGMAN_KERNEL_HPP

#include "bergman/basis.hpp"

namespace bergman {

/// Diagonal reproducing-kernel values at one point:
///   k00 = sum |p_j|^2,  k01 = sum p_j conj(p_j'),  k11 = sum |p_j'|^2.
struct KernelTriple
{
    cplx k00;
    cplx k01;
    cplx k11;
    int n = 0;
    cplx z;
};

/// Direct O(n) summation over the basis.
KernelTriple kernel_series(const BasisSpec& spec, int n, cplx z);

/// Reusable-buffer overload for hot loops.
KernelTriple kernel_series(const BasisSpec& spec, int n, cplx z, BasisValues& scratch);

/// Rational closed forms for the scaled-monomial family. Inside the guard
/// band near |z| = 1 this returns kernel_series instead.
KernelTriple kernel_closed_monomial(int n, cplx z);

} // namespace bergman

#endif
