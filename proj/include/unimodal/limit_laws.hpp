// Reference distributions that the normalized statistics converge to.

#ifndef UNIMODAL_LIMIT_LAWS_HPP
#define UNIMODAL_LIMIT_LAWS_HPP

#include <cstdint>
#include <span>
#include <string>

namespace unimodal {

/// e^{-e^{-v}}
double gumbel_cdf(double v);
double gumbel_pdf(double v);
/// 1/(1+e^{-x})
double logistic_cdf(double x);
double logistic_pdf(double x);
/// Law of E_L - E_R for independent unit exponentials.
double laplace_mixture_cdf(double v);
double laplace_mixture_pdf(double v);
/// 1 - e^{-v} on v >= 0.
double exponential_cdf(double v);
double exponential_pdf(double v);
/// e^{-e^{-vL} - e^{-vR}}; either argument may be +infinity.
double double_gumbel_cdf(double v_left, double v_right);
/// (1 - e^{-x})^n: law of the sum of independent Exp(1), Exp(2), ..., Exp(n)
/// variables (means 1, 1/2, ..., 1/n).
double exp_order_sum_cdf(double x, std::int64_t n);

/// Joint limit density of (PK, Y_1^L, Y_1^R, ..., Y_t^L, Y_t^R) after
/// centering and scaling: 4^{-t} exp(-u0 - sum(uL + uR) - e^{-uL_t}/2 -
/// e^{-uR_t}/2) on u0 >= uL_1 >= ... and u0 >= uR_1 >= ..., zero elsewhere.
/// Throws std::invalid_argument on length mismatch or empty runs.
double joint_large_parts_density(double u0, std::span<const double> u_left, std::span<const double> u_right);

/// Mass of the t = 1 joint law on (-inf, v0] x (-inf, vL] x (-inf, vR].
/// Reduced to one integral over u0 using the closed-form inner marginals.
double joint_large_parts_box(double v0, double v_left, double v_right);

/// Largest-parts limit density for partitions, exp(-sum u_t - e^{-u_last})
/// on u_1 >= ... >= u_last, zero elsewhere.
double fristedt_partition_density(std::span<const double> u);

/// One-dimensional reference law for KS comparisons.
class LimitLaw {
public:
    enum class Kind { gumbel, logistic, exponential, laplace_mixture, exp_order_sum };

    static LimitLaw gumbel() { return LimitLaw(Kind::gumbel); }
    static LimitLaw logistic() { return LimitLaw(Kind::logistic); }
    static LimitLaw exponential() { return LimitLaw(Kind::exponential); }
    static LimitLaw laplace_mixture() { return LimitLaw(Kind::laplace_mixture); }
    static LimitLaw exp_order_sum(std::int64_t n);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;
    double cdf(double v) const;
    double pdf(double v) const;

private:
    explicit LimitLaw(Kind kind, std::int64_t dimension = 1) : kind_(kind), dimension_(dimension) {}

    Kind kind_;
    std::int64_t dimension_;
};

} // namespace unimodal

#endif // UNIMODAL_LIMIT_LAWS_HPP
