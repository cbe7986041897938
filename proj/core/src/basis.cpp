// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/basis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bergman/quadrature.hpp"

namespace bergman {
namespace {

constexpr int kBuiltinMaxDegree = 1 << 20;

void check_degree(const BasisSpec& spec, int k)
{
    if (k < 0)
        throw ParameterError("basis degree must be non-negative, got " + std::to_string(k));
    if (k > spec.max_degree())
        throw ParameterError("basis " + spec.name() + " has no polynomial of degree "
                             + std::to_string(k));
}

// 1 / sqrt(pi (k+1)(k+2)(k+3)), the z-minus-one-squared normalisation.
double zm1_norm(int k)
{
    double kk = k;
    return 1.0 / std::sqrt(kPi * (kk + 1.0) * (kk + 2.0) * (kk + 3.0));
}

double monomial_family_kappa(const BasisSpec& spec, int k)
{
    double kk = k;
    if (spec.family() == Family::ScaledMonomial)
        return std::sqrt((kk + 1.0) / kPi);
    double j = spec.j();
    return std::sqrt((kk + 1.0) * (kk + j + 1.0) / (kPi * j));
}

bool is_integer(double x)
{
    return std::abs(x - std::round(x)) < 1e-12;
}

} // namespace

BasisSpec BasisSpec::scaled_monomial()
{
    return BasisSpec(Family::ScaledMonomial, 0.0);
}

BasisSpec BasisSpec::weighted_power(double j)
{
    if (!(j > 0.0) || !std::isfinite(j))
        throw ParameterError("weighted-power requires j > 0");
    return BasisSpec(Family::WeightedPower, j);
}

BasisSpec BasisSpec::z_minus_one_squared()
{
    return BasisSpec(Family::ZMinusOneSquared, 0.0);
}

BasisSpec BasisSpec::custom(CoefficientTable rows, std::string source)
{
    if (rows.empty())
        throw ParameterError("custom basis table is empty");
    for (std::size_t k = 0; k < rows.size(); ++k)
    {
        if (rows[k].size() != k + 1)
            throw ParameterError("custom basis row " + std::to_string(k) + " must have "
                                 + std::to_string(k + 1) + " entries, has "
                                 + std::to_string(rows[k].size()));
        if (rows[k].back() == cplx{0.0, 0.0})
            throw ParameterError("custom basis row " + std::to_string(k)
                                 + " has a zero leading coefficient");
    }
    BasisSpec spec(Family::CustomTable, 0.0);
    spec.table_ = std::make_shared<const CoefficientTable>(std::move(rows));
    spec.source_ = std::move(source);
    return spec;
}

BasisSpec BasisSpec::parse(std::string_view text)
{
    if (text == "scaled-monomial")
        return scaled_monomial();
    if (text == "z-minus-one-squared")
        return z_minus_one_squared();

    constexpr std::string_view wp = "weighted-power:";
    if (text.starts_with(wp))
    {
        auto arg = text.substr(wp.size());
        if (arg.starts_with("j="))
            arg.remove_prefix(2);
        double j = 0.0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), j);
        if (ec != std::errc{} || ptr != arg.data() + arg.size())
            throw ParameterError("cannot parse weighted-power parameter '" + std::string(arg)
                                 + "'");
        return weighted_power(j);
    }

    constexpr std::string_view cu = "custom:";
    if (text.starts_with(cu))
    {
        std::string path(text.substr(cu.size()));
        return custom(load_coefficient_table(path), path);
    }
    throw ParameterError("unknown basis '" + std::string(text) + "'");
}

const CoefficientTable& BasisSpec::table() const
{
    if (!table_)
        throw ParameterError("basis " + name() + " has no coefficient table");
    return *table_;
}

int BasisSpec::max_degree() const
{
    if (family_ == Family::CustomTable)
        return static_cast<int>(table_->size()) - 1;
    return kBuiltinMaxDegree;
}

std::string BasisSpec::name() const
{
    switch (family_)
    {
    case Family::ScaledMonomial:
        return "scaled-monomial";
    case Family::WeightedPower: {
        return "weighted-power:j=" + format_double(j_);
    }
    case Family::ZMinusOneSquared:
        return "z-minus-one-squared";
    case Family::CustomTable:
        return "custom:" + source_;
    }
    return "unknown";
}

std::optional<double> BasisSpec::weight(cplx z) const
{
    switch (family_)
    {
    case Family::ScaledMonomial:
        return 1.0;
    case Family::WeightedPower:
        return 1.0 - std::pow(std::abs(z), 2.0 * j_);
    case Family::ZMinusOneSquared:
        return std::norm(z - 1.0);
    case Family::CustomTable:
        return std::nullopt;
    }
    return std::nullopt;
}

CoefficientTable load_coefficient_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open coefficient file " + path.string());

    CoefficientTable rows;
    std::string line;
    while (std::getline(in, line))
    {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<double> numbers;
        double x;
        while (ls >> x)
            numbers.push_back(x);
        if (!ls.eof())
            throw ParameterError("non-numeric entry in coefficient file row "
                                 + std::to_string(rows.size()));
        if (numbers.size() % 2 != 0)
            throw ParameterError("coefficient file row " + std::to_string(rows.size())
                                 + " has an odd number of values");
        std::vector<cplx> row;
        for (std::size_t i = 0; i < numbers.size(); i += 2)
            row.emplace_back(numbers[i], numbers[i + 1]);
        rows.push_back(std::move(row));
    }
    return rows;
}

MonomialPoly expand_to_monomials(const BasisSpec& spec, int k)
{
    check_degree(spec, k);
    std::vector<cplx> c(k + 1, cplx{0.0, 0.0});
    switch (spec.family())
    {
    case Family::ScaledMonomial:
    case Family::WeightedPower:
        c[k] = monomial_family_kappa(spec, k);
        break;
    case Family::ZMinusOneSquared: {
        double norm = zm1_norm(k);
        for (int m = 0; m <= k; ++m)
            c[m] = (m + 1.0) * (m + 2.0) * norm;
        break;
    }
    case Family::CustomTable:
        c = spec.table()[k];
        break;
    }
    return MonomialPoly(std::move(c));
}

cplx eval_basis(const BasisSpec& spec, int k, cplx z)
{
    check_degree(spec, k);
    if (spec.is_monomial_family())
        return monomial_family_kappa(spec, k) * std::pow(z, k);
    return expand_to_monomials(spec, k).evaluate(z);
}

cplx eval_basis_derivative(const BasisSpec& spec, int k, cplx z)
{
    check_degree(spec, k);
    if (k == 0)
        return {0.0, 0.0};
    if (spec.is_monomial_family())
        return monomial_family_kappa(spec, k) * static_cast<double>(k) * std::pow(z, k - 1);
    return expand_to_monomials(spec, k).evaluate_with_derivative(z).second;
}

double leading_coefficient(const BasisSpec& spec, int k)
{
    check_degree(spec, k);
    switch (spec.family())
    {
    case Family::ScaledMonomial:
    case Family::WeightedPower:
        return monomial_family_kappa(spec, k);
    case Family::ZMinusOneSquared: {
        double kk = k;
        return std::sqrt((kk + 1.0) * (kk + 2.0) / (kPi * (kk + 3.0)));
    }
    case Family::CustomTable:
        // Rows may carry a complex leading entry; its modulus is the
        // coefficient after a unimodular rotation of p_k.
        return std::abs(spec.table()[k][k]);
    }
    return 0.0;
}

std::vector<SutEntry> sut_diagnostic(const BasisSpec& spec, int k_max)
{
    if (k_max < 2)
        throw ParameterError("sut_diagnostic requires k_max >= 2");
    std::vector<SutEntry> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k)
        out.push_back({k, std::exp(std::log(leading_coefficient(spec, k)) / k)});
    return out;
}

void basis_values(const BasisSpec& spec, int n, cplx z, BasisValues& out)
{
    check_degree(spec, n);
    out.value.resize(n + 1);
    out.derivative.resize(n + 1);

    switch (spec.family())
    {
    case Family::ScaledMonomial:
    case Family::WeightedPower: {
        cplx power{1.0, 0.0};      // z^k
        cplx prev_power{0.0, 0.0}; // z^{k-1}
        for (int k = 0; k <= n; ++k)
        {
            double kappa = monomial_family_kappa(spec, k);
            out.value[k] = kappa * power;
            out.derivative[k] = kappa * static_cast<double>(k) * prev_power;
            prev_power = power;
            power *= z;
        }
        break;
    }
    case Family::ZMinusOneSquared: {
        // p_k = Q_k / sqrt(pi(k+1)(k+2)(k+3)) with Q_k = Q_{k-1} + (k+1)(k+2) z^k.
        cplx q{0.0, 0.0};
        cplx dq{0.0, 0.0};
        cplx power{1.0, 0.0};
        cplx prev_power{0.0, 0.0};
        for (int k = 0; k <= n; ++k)
        {
            double kk = k;
            q += (kk + 1.0) * (kk + 2.0) * power;
            dq += kk * (kk + 1.0) * (kk + 2.0) * prev_power;
            double norm = zm1_norm(k);
            out.value[k] = q * norm;
            out.derivative[k] = dq * norm;
            prev_power = power;
            power *= z;
        }
        break;
    }
    case Family::CustomTable: {
        const auto& rows = spec.table();
        for (int k = 0; k <= n; ++k)
        {
            cplx p{0.0, 0.0};
            cplx dp{0.0, 0.0};
            for (auto it = rows[k].rbegin(); it != rows[k].rend(); ++it)
            {
                dp = dp * z + p;
                p = p * z + *it;
            }
            out.value[k] = p;
            out.derivative[k] = dp;
        }
        break;
    }
    }
}

QuadratureOrders default_gram_orders(const BasisSpec& spec, int n)
{
    QuadratureOrders orders{n + 4, 2 * (2 * n + 5)};
    if (spec.family() == Family::WeightedPower)
    {
        // Radial integrand r^{a+b+1} (1 - r^{2j}) has degree up to 2n + 1 + 2j.
        int needed = n + 2 + static_cast<int>(std::ceil(spec.j()));
        orders.radial = std::max(orders.radial, needed);
        if (!is_integer(2.0 * spec.j()))
            orders.radial *= 2;
    }
    return orders;
}

double GramMatrix::max_identity_deviation() const
{
    double worst = 0.0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
        {
            cplx target = (a == b) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            worst = std::max(worst, std::abs((*this)(a, b) - target));
        }
    return worst;
}

GramMatrix gram_matrix(const BasisSpec& spec, int n, std::optional<QuadratureOrders> orders)
{
    if (n < 0)
        throw ParameterError("gram_matrix: n must be non-negative");
    if (spec.family() == Family::CustomTable)
        throw ParameterError("gram_matrix: custom tables carry no orthogonality weight");
    check_degree(spec, n);

    QuadratureOrders exact = default_gram_orders(spec, n);
    GramMatrix result;
    result.n = n;
    result.orders = orders.value_or(exact);
    result.approximate = spec.family() == Family::WeightedPower && !is_integer(2.0 * spec.j());
    int radial_threshold = result.approximate ? exact.radial / 2 : exact.radial;
    result.under_resolved = result.orders.radial < radial_threshold
                            || result.orders.angular < exact.angular;

    auto rule = disk_rule(1.0, result.orders.radial, result.orders.angular);
    const int size = n + 1;
    result.entries.assign(static_cast<std::size_t>(size) * size, cplx{0.0, 0.0});

    BasisValues values;
    for (std::size_t i = 0; i < rule.radii.size(); ++i)
    {
        std::vector<cplx> ring(result.entries.size(), cplx{0.0, 0.0});
        for (double theta : rule.angles)
        {
            cplx z = std::polar(rule.radii[i], theta);
            basis_values(spec, n, z, values);
            double h = *spec.weight(z);
            for (int a = 0; a < size; ++a)
            {
                cplx pa = values.value[a] * h;
                for (int b = 0; b < size; ++b)
                    ring[a * size + b] += pa * std::conj(values.value[b]);
            }
        }
        double w = rule.radial_weights[i] * rule.angular_weight;
        for (std::size_t e = 0; e < ring.size(); ++e)
            result.entries[e] += w * ring[e];
    }
    return result;
}

} // namespace bergman
