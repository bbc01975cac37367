// Empirical distributions and distances to reference laws.

#ifndef UNIMODAL_EMPIRICAL_HPP
#define UNIMODAL_EMPIRICAL_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "unimodal/limit_laws.hpp"

namespace unimodal {

/// Sorted one-dimensional sample.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> values);

    std::size_t count() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const std::vector<double> &values() const noexcept { return values_; }

    /// Fraction of the sample <= x.
    double cdf(double x) const;
    /// Fraction of the sample < x.
    double cdf_below(double x) const;

private:
    std::vector<double> values_;
};

/// sup_x |F_emp - F| where F is continuous. Checked at every sample point
/// from both sides. Throws std::invalid_argument on an empty sample.
double ks_distance(const EmpiricalDistribution &emp, const std::function<double(double)> &cdf);
double ks_distance(const EmpiricalDistribution &emp, const LimitLaw &law);

/// Half the l1 distance; the shorter vector is padded with zeros.
double tv_distance(std::span<const double> p, std::span<const double> q);

/// Fraction of tuples with every coordinate <= the matching bound.
/// Throws std::invalid_argument on an empty sample or dimension mismatch.
double box_frequency(const std::vector<std::vector<double>> &tuples, std::span<const double> upper);

/// sqrt(p (1 - p) / count)
double binomial_standard_error(double p, std::size_t count);

} // namespace unimodal

#endif // UNIMODAL_EMPIRICAL_HPP
