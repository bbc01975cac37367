#include "unimodal/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "unimodal/sampler.hpp"

namespace unimodal {

namespace {

// Neumaier summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x)
    {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

double root_n(std::int64_t n) { return std::sqrt(static_cast<double>(n)); }

} // namespace

SaddleData saddle_terms(std::int64_t n, std::int64_t m, SequenceKind kind)
{
    const bool strict = kind == SequenceKind::strongly_unimodal;
    if (n < 1 || (strict ? (m < 1 || m > n - 1) : (m < 1 || m > n))) {
        throw std::invalid_argument(fmt::format("saddle_terms: m={} out of range for n={}", m, n));
    }
    const double s = scale_constant(kind) * root_n(n);
    CompensatedSum f0, f1, f2;
    for (std::int64_t k = 1; k <= m; ++k) {
        const double kd = static_cast<double>(k);
        const double e = std::exp(-kd / s);
        if (strict) {
            f0.add(2.0 * std::log1p(e));
            f1.add(2.0 * kd * e / (1.0 + e));
            f2.add(2.0 * kd * kd * e / ((1.0 + e) * (1.0 + e)));
        } else {
            const double om = -std::expm1(-kd / s); // 1 - e
            f0.add(-2.0 * std::log(om));
            f1.add(2.0 * kd * e / om);
            f2.add(2.0 * kd * kd * e / (om * om));
        }
    }
    SaddleData d;
    d.n = n;
    d.m = m;
    d.strict = strict;
    const auto shift = static_cast<double>(strict ? n - m - 1 : n - m);
    d.f0 = shift / s + f0.value();
    d.f1 = f1.value() - shift;
    d.f2 = f2.value();
    return d;
}

double u_m_saddle(std::int64_t n, std::int64_t m, SequenceKind kind)
{
    const SaddleData d = saddle_terms(n, m, kind);
    return d.f0 - 0.5 * std::log(2.0 * std::numbers::pi * d.f2);
}

double local_pk_probability(std::int64_t n, double x, SequenceKind kind)
{
    return std::exp(-x - std::exp(-x)) / (scale_constant(kind) * root_n(n));
}

double acceptance_rate_prediction(std::int64_t n, SequenceKind kind)
{
    if (n < 1) {
        throw std::invalid_argument("acceptance_rate_prediction: n must be positive");
    }
    const double base = kind == SequenceKind::strongly_unimodal ? 6.0 : 3.0;
    return 1.0 / (2.0 * std::pow(base, 0.25) * std::pow(static_cast<double>(n), 0.75));
}

ProductCheck large_parts_product_check(std::int64_t n, double v)
{
    if (n < 2) {
        throw std::invalid_argument("large_parts_product_check: n must be at least 2");
    }
    if (v < -std::log(static_cast<double>(n)) / 8.0) {
        throw std::invalid_argument(
            fmt::format("large_parts_product_check: v={} is below -log(n)/8", v));
    }
    const double s = constant_A * root_n(n);
    const auto start = static_cast<std::int64_t>(std::floor(s * (v + std::log(s)))) + 1;
    CompensatedSum log_prod;
    for (std::int64_t k = std::max<std::int64_t>(start, 1);; ++k) {
        const double e = std::exp(-static_cast<double>(k) / s);
        log_prod.add(-std::log1p(e));
        // remaining terms are bounded by the geometric tail e/(1-r)
        if (e / -std::expm1(-1.0 / s) < 1e-14) {
            break;
        }
    }
    return {std::exp(log_prod.value()), std::exp(-std::exp(-v))};
}

double global_count_asymptotics(std::int64_t n, SequenceKind kind)
{
    if (n < 1) {
        throw std::invalid_argument("global_count_asymptotics: n must be positive");
    }
    const double nd = static_cast<double>(n);
    constexpr double pi = std::numbers::pi;
    if (kind == SequenceKind::strongly_unimodal) {
        return pi * std::sqrt(2.0 * nd / 3.0) - std::log(8.0 * std::pow(6.0, 0.25)) - 0.75 * std::log(nd);
    }
    return 2.0 * pi * std::sqrt(nd / 3.0) - std::log(8.0 * std::pow(3.0, 0.75)) - 1.25 * std::log(nd);
}

double log_bigint(const BigInt &value)
{
    if (sgn(value) <= 0) {
        throw std::domain_error("log_bigint: value must be positive");
    }
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double ExactPeakLaw::mean() const
{
    CompensatedSum acc;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc.add(static_cast<double>(first_peak + static_cast<std::int64_t>(i)) * probs[i]);
    }
    return acc.value();
}

std::int64_t ExactPeakLaw::mode() const
{
    const auto it = std::max_element(probs.begin(), probs.end());
    return first_peak + static_cast<std::int64_t>(it - probs.begin());
}

ExactPeakLaw exact_peak_law(std::int64_t n, SequenceKind kind)
{
    ExactPeakLaw law;
    law.n = n;
    law.kind = kind;
    law.first_peak = 1;
    // both tables start at peak 1: u_1(n) and u*_0(n)
    const std::vector<BigInt> table =
        kind == SequenceKind::strongly_unimodal ? count_table_ustar_m(n) : count_table_u_m(n);
    BigInt total = 0;
    for (const auto &c : table) {
        total += c;
    }
    law.log_total = log_bigint(total);
    law.probs.reserve(table.size());
    for (const auto &c : table) {
        law.probs.push_back(sgn(c) > 0 ? std::exp(log_bigint(c) - law.log_total) : 0.0);
    }
    return law;
}

std::vector<double> lattice_local_law(const ExactPeakLaw &law)
{
    const ModelParams params = ModelParams::for_size(law.n, law.kind);
    std::vector<double> weights(law.probs.size());
    CompensatedSum total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double peak = static_cast<double>(law.first_peak + static_cast<std::int64_t>(i));
        weights[i] = local_pk_probability(law.n, params.x_of_peak(peak), law.kind);
        total.add(weights[i]);
    }
    const double norm = total.value();
    for (auto &w : weights) {
        w /= norm;
    }
    return weights;
}

double peak_local_tv(const ExactPeakLaw &law)
{
    const std::vector<double> local = lattice_local_law(law);
    CompensatedSum acc;
    for (std::size_t i = 0; i < local.size(); ++i) {
        acc.add(std::fabs(local[i] - law.probs[i]));
    }
    return 0.5 * acc.value();
}

double peak_mean_prediction(std::int64_t n, SequenceKind kind)
{
    const double s = scale_constant(kind) * root_n(n);
    return s * std::log(2.0 * s) + euler_gamma * s;
}

ConvergenceRow saddle_convergence_row(std::int64_t n, std::int64_t m, SequenceKind kind)
{
    ConvergenceRow row;
    row.n = n;
    row.m = m;
    row.exact_log = log_bigint(kind == SequenceKind::strongly_unimodal ? count_ustar_m(n, m) : count_u_m(n, m));
    row.approx_log = u_m_saddle(n, m, kind);
    row.ratio = std::exp(row.approx_log - row.exact_log);
    return row;
}

void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows)
{
    os << "n,m,exact_log,approx_log,ratio\n";
    for (const auto &r : rows) {
        fmt::print(os, "{},{},{:.10f},{:.10f},{:.10f}\n", r.n, r.m, r.exact_log, r.approx_log, r.ratio);
    }
}

} // namespace unimodal
