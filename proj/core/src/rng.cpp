// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/rng.hpp"

#include <cmath>

namespace bergman {
namespace {

constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;

inline void round(PhiloxCounter& c, const PhiloxKey& k)
{
    std::uint64_t pa = static_cast<std::uint64_t>(kMulA) * c[0];
    std::uint64_t pb = static_cast<std::uint64_t>(kMulB) * c[2];
    auto hi_a = static_cast<std::uint32_t>(pa >> 32);
    auto lo_a = static_cast<std::uint32_t>(pa);
    auto hi_b = static_cast<std::uint32_t>(pb >> 32);
    auto lo_b = static_cast<std::uint32_t>(pb);
    c = {hi_b ^ c[1] ^ k[0], lo_b, hi_a ^ c[3] ^ k[1], lo_a};
}

} // namespace

PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key)
{
    for (int r = 0; r < 10; ++r)
    {
        if (r > 0)
        {
            key[0] += kWeylA;
            key[1] += kWeylB;
        }
        round(counter, key);
    }
    return counter;
}

cplx CoefficientStream::gaussian(std::uint32_t coefficient_index) const
{
    PhiloxCounter ctr{coefficient_index, static_cast<std::uint32_t>(sample_index_),
                      static_cast<std::uint32_t>(sample_index_ >> 32), 0u};
    PhiloxCounter out = philox4x32(ctr, key_);
    std::uint64_t a = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    std::uint64_t b = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    double u1 = to_unit_open_closed(a);
    double u2 = to_unit_open_closed(b);
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * kPi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace bergman
