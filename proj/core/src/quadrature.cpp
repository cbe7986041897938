// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/quadrature.hpp"

#include <cmath>

namespace bergman {

GaussLegendreRule gauss_legendre(int m)
{
    if (m < 1)
        throw ParameterError("gauss_legendre: need at least one node");

    GaussLegendreRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    // Roots are symmetric; solve for the positive half by Newton on P_m.
    for (int i = 0; i < (m + 1) / 2; ++i)
    {
        double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= m; ++k)
            {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pm = (m == 1) ? x : p1;
            double pm1 = (m == 1) ? 1.0 : p0;
            dp = m * (x * pm - pm1) / (x * x - 1.0);
            double dx = pm / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= m; ++k)
        {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double pm = (m == 1) ? x : p1;
        double pm1 = (m == 1) ? 1.0 : p0;
        dp = m * (x * pm - pm1) / (x * x - 1.0);

        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[m - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[m - 1 - i] = w;
    }
    if (m % 2 == 1)
        rule.nodes[m / 2] = 0.0;
    return rule;
}

DiskRule disk_rule(double radius, int radial, int angular)
{
    if (!(radius > 0.0))
        throw ParameterError("disk_rule: radius must be positive");
    if (radial < 1 || angular < 1)
        throw ParameterError("disk_rule: node counts must be positive");

    auto gl = gauss_legendre(radial);
    DiskRule rule;
    rule.radii.resize(radial);
    rule.radial_weights.resize(radial);
    double half = 0.5 * radius;
    for (int i = 0; i < radial; ++i)
    {
        double r = half * (gl.nodes[i] + 1.0);
        rule.radii[i] = r;
        rule.radial_weights[i] = half * gl.weights[i] * r;
    }
    rule.angles.resize(angular);
    for (int a = 0; a < angular; ++a)
        rule.angles[a] = 2.0 * kPi * a / angular;
    rule.angular_weight = 2.0 * kPi / angular;
    return rule;
}

} // namespace bergman
