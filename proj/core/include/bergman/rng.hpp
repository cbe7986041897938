// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

//! \file rng.hpp
//! Counter-based random numbers (Philox4x32-10).
//!
//! Every draw is a pure function of (key, counter), so a sample's
//! coefficients depend only on the master seed and the sample/coefficient
//! indices, never on which thread produced them or in what order.

#ifndef BERGMAN_RNG_HPP
#define BERGMAN_RNG_HPP

#include <array>
#include <cstdint>

#include "bergman/common.hpp"

namespace bergman {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Ten-round Philox 4x32 bijection.
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

/// Maps the top 53 bits of x onto (0, 1].
inline double to_unit_open_closed(std::uint64_t x)
{
    return (static_cast<double>(x >> 11) + 1.0) * 0x1.0p-53;
}

/// Stream of complex standard Gaussians for one polynomial sample.
class CoefficientStream
{
  public:
    CoefficientStream(std::uint64_t master_seed, std::uint64_t sample_index)
        : key_{static_cast<std::uint32_t>(master_seed),
               static_cast<std::uint32_t>(master_seed >> 32)},
          sample_index_(sample_index)
    {
    }

    std::uint64_t sample_index() const { return sample_index_; }

    /// eta = alpha + i beta with alpha, beta independent N(0, 1), obtained by
    /// Box-Muller from one Philox block keyed on the coefficient index.
    cplx gaussian(std::uint32_t coefficient_index) const;

  private:
    PhiloxKey key_;
    std::uint64_t sample_index_;
};

} // namespace bergman

#endif
