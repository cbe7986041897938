// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/kernel.hpp"

#include <cmath>

namespace bergman {

KernelTriple kernel_series(const BasisSpec& spec, int n, cplx z, BasisValues& scratch)
{
    if (n < 0)
        throw ParameterError("kernel_series: n must be non-negative");
    basis_values(spec, n, z, scratch);

    CompensatedSum k00;
    CompensatedSum k11;
    CompensatedSum k01_re;
    CompensatedSum k01_im;
    for (int j = 0; j <= n; ++j)
    {
        const cplx p = scratch.value[j];
        const cplx dp = scratch.derivative[j];
        k00 += std::norm(p);
        k11 += std::norm(dp);
        cplx cross = p * std::conj(dp);
        k01_re += cross.real();
        k01_im += cross.imag();
    }
    return KernelTriple{cplx{k00.value(), 0.0}, cplx{k01_re.value(), k01_im.value()},
                        cplx{k11.value(), 0.0}, n, z};
}

KernelTriple kernel_series(const BasisSpec& spec, int n, cplx z)
{
    BasisValues scratch;
    return kernel_series(spec, n, z, scratch);
}

KernelTriple kernel_closed_monomial(int n, cplx z)
{
    if (n < 0)
        throw ParameterError("kernel_closed_monomial: n must be non-negative");
    const double modulus = std::abs(z);
    if (in_guard_band(n, modulus) || modulus == 1.0)
        return kernel_series(BasisSpec::scaled_monomial(), n, z);

    const double s = modulus * modulus;
    const double one_minus = 1.0 - s;
    const double nn = n;
    const double sn = std::pow(s, n);         // |z|^{2n}
    const double sn1 = sn * s;                // |z|^{2n+2}
    const double c = (nn + 1.0) * (nn + 2.0); // (n+1)(n+2)

    const double k00 = (1.0 + sn1 * ((nn + 1.0) * s - (nn + 2.0))) / (kPi * one_minus * one_minus);

    // z^{n+1} conj(z)^n = z |z|^{2n}
    const cplx k01 = 2.0 * z * k00 / one_minus - c * z * sn / (kPi * one_minus);

    const double k11 = 2.0 * (1.0 + 2.0 * s) * k00 / (one_minus * one_minus)
                       - c * sn * (1.0 + 2.0 * s) / (kPi * one_minus * one_minus)
                       - nn * c * sn / (kPi * one_minus);

    return KernelTriple{cplx{k00, 0.0}, k01, cplx{k11, 0.0}, n, z};
}

} // namespace bergman
