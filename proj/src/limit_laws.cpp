#include "unimodal/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace unimodal {

double gumbel_cdf(double v) { return std::exp(-std::exp(-v)); }

double gumbel_pdf(double v)
{
    const double e = std::exp(-v);
    return std::isinf(e) ? 0.0 : e * std::exp(-e);
}

double logistic_cdf(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logistic_pdf(double x)
{
    const double e = std::exp(-std::fabs(x));
    return e / ((1.0 + e) * (1.0 + e));
}

double laplace_mixture_cdf(double v) { return v >= 0.0 ? 1.0 - 0.5 * std::exp(-v) : 0.5 * std::exp(v); }

double laplace_mixture_pdf(double v) { return 0.5 * std::exp(-std::fabs(v)); }

double exponential_cdf(double v) { return v <= 0.0 ? 0.0 : -std::expm1(-v); }

double exponential_pdf(double v) { return v < 0.0 ? 0.0 : std::exp(-v); }

double double_gumbel_cdf(double v_left, double v_right)
{
    return std::exp(-std::exp(-v_left) - std::exp(-v_right));
}

double exp_order_sum_cdf(double x, std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("exp_order_sum_cdf: n must be at least 1");
    }
    return x <= 0.0 ? 0.0 : std::pow(-std::expm1(-x), static_cast<double>(n));
}

double joint_large_parts_density(double u0, std::span<const double> u_left, std::span<const double> u_right)
{
    if (u_left.size() != u_right.size() || u_left.empty()) {
        throw std::invalid_argument("joint_large_parts_density: runs must be nonempty and of equal length");
    }
    double prev_l = u0, prev_r = u0;
    double exponent = -u0;
    for (std::size_t t = 0; t < u_left.size(); ++t) {
        if (u_left[t] > prev_l || u_right[t] > prev_r) {
            return 0.0;
        }
        prev_l = u_left[t];
        prev_r = u_right[t];
        exponent -= u_left[t] + u_right[t];
    }
    exponent -= 0.5 * std::exp(-prev_l) + 0.5 * std::exp(-prev_r);
    return std::exp(exponent - 2.0 * static_cast<double>(u_left.size()) * std::log(2.0));
}

double joint_large_parts_box(double v0, double v_left, double v_right)
{
    // Each side integrates to e^{-e^{-w}/2} over (-inf, w], so the box mass
    // is int_{-inf}^{v0} e^{-u} G(min(u, vL)) G(min(u, vR)) du.
    auto half_gumbel = [](double w) { return std::exp(-0.5 * std::exp(-w)); };
    auto integrand = [&](double u) {
        const double e = std::exp(-u);
        if (std::isinf(e)) {
            return 0.0;
        }
        return e * half_gumbel(std::min(u, v_left)) * half_gumbel(std::min(u, v_right));
    };
    using boost::math::quadrature::gauss_kronrod;
    const double lower = -std::numeric_limits<double>::infinity();
    // split at the kinks min(u, vL), min(u, vR) so each piece is smooth
    const double lo_kink = std::min({v0, v_left, v_right});
    const double hi_kink = std::min(v0, std::max(v_left, v_right));
    double total = gauss_kronrod<double, 61>::integrate(integrand, lower, lo_kink, 15, 1e-13);
    if (hi_kink > lo_kink) {
        total += gauss_kronrod<double, 61>::integrate(integrand, lo_kink, hi_kink, 15, 1e-13);
    }
    if (v0 > hi_kink) {
        total += gauss_kronrod<double, 61>::integrate(integrand, hi_kink, v0, 15, 1e-13);
    }
    return total;
}

double fristedt_partition_density(std::span<const double> u)
{
    if (u.empty()) {
        throw std::invalid_argument("fristedt_partition_density: need at least one coordinate");
    }
    double exponent = 0.0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        if (t > 0 && u[t] > u[t - 1]) {
            return 0.0;
        }
        exponent -= u[t];
    }
    exponent -= std::exp(-u.back());
    return std::exp(exponent);
}

LimitLaw LimitLaw::exp_order_sum(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("LimitLaw::exp_order_sum: n must be at least 1");
    }
    return LimitLaw(Kind::exp_order_sum, n);
}

std::string LimitLaw::name() const
{
    switch (kind_) {
    case Kind::gumbel:
        return "gumbel";
    case Kind::logistic:
        return "logistic";
    case Kind::exponential:
        return "exponential";
    case Kind::laplace_mixture:
        return "laplace-mixture";
    case Kind::exp_order_sum:
        return "exp-order-sum(" + std::to_string(dimension_) + ")";
    }
    return "unknown";
}

double LimitLaw::cdf(double v) const
{
    switch (kind_) {
    case Kind::gumbel:
        return gumbel_cdf(v);
    case Kind::logistic:
        return logistic_cdf(v);
    case Kind::exponential:
        return exponential_cdf(v);
    case Kind::laplace_mixture:
        return laplace_mixture_cdf(v);
    case Kind::exp_order_sum:
        return exp_order_sum_cdf(v, dimension_);
    }
    throw std::logic_error("LimitLaw: unknown kind");
}

double LimitLaw::pdf(double v) const
{
    switch (kind_) {
    case Kind::gumbel:
        return gumbel_pdf(v);
    case Kind::logistic:
        return logistic_pdf(v);
    case Kind::exponential:
        return exponential_pdf(v);
    case Kind::laplace_mixture:
        return laplace_mixture_pdf(v);
    case Kind::exp_order_sum: {
        if (v <= 0.0) {
            return 0.0;
        }
        const double n = static_cast<double>(dimension_);
        return n * std::exp(-v) * std::pow(-std::expm1(-v), n - 1.0);
    }
    }
    throw std::logic_error("LimitLaw: unknown kind");
}

} // namespace unimodal
