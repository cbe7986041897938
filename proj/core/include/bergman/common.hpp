// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_COMMON_HPP
#define BERGMAN_COMMON_HPP

#include <charconv>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bergman {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Width of the band near |z| = 1 where the rational closed forms lose
/// digits to cancellation. Points with (1 - |z|)(n + 1) below this value
/// are routed to the direct series.
inline constexpr double kGuardBand = 0.05;

inline bool in_guard_band(int n, double modulus)
{
    return (1.0 - modulus) * (n + 1.0) < kGuardBand;
}

/// Invalid family parameters or malformed inputs (bad j, ragged table...).
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the region where a formula is defined (|z| >= 1, r > 1...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// A numerical quantity is too close to singular to trust the result.
class ConditioningError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A run finished but failed one of its numerical health checks
/// (too many discarded samples, a diagnostic above tolerance...).
class DiagnosticError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Neumaier compensated accumulator. Used for long positive series where
/// the summation order would otherwise show up in the last digits.
/// Shortest decimal text that reads back to exactly x.
inline std::string format_double(double x)
{
    char buf[32];
    auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
    return std::string(buf, end);
}

class CompensatedSum
{
  public:
    void add(double x)
    {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double x)
    {
        add(x);
        return *this;
    }
    double value() const { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace bergman

#endif
