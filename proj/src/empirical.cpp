#include "unimodal/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unimodal {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end());
}

double EmpiricalDistribution::cdf(double x) const
{
    if (values_.empty()) {
        return 0.0;
    }
    const auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double EmpiricalDistribution::cdf_below(double x) const
{
    if (values_.empty()) {
        return 0.0;
    }
    const auto it = std::lower_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_distance(const EmpiricalDistribution &emp, const std::function<double(double)> &cdf)
{
    if (emp.empty()) {
        throw std::invalid_argument("ks_distance: empty sample");
    }
    const auto &v = emp.values();
    const double total = static_cast<double>(v.size());
    double worst = 0.0;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) {
            ++j;
        }
        const double f = cdf(v[i]);
        worst = std::max({worst, std::fabs(static_cast<double>(i) / total - f),
                          std::fabs(static_cast<double>(j) / total - f)});
        i = j;
    }
    return worst;
}

double ks_distance(const EmpiricalDistribution &emp, const LimitLaw &law)
{
    return ks_distance(emp, [&law](double x) { return law.cdf(x); });
}

double tv_distance(std::span<const double> p, std::span<const double> q)
{
    const std::size_t len = std::max(p.size(), q.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        acc += std::fabs(a - b);
    }
    return 0.5 * acc;
}

double box_frequency(const std::vector<std::vector<double>> &tuples, std::span<const double> upper)
{
    if (tuples.empty()) {
        throw std::invalid_argument("box_frequency: empty sample");
    }
    std::size_t inside = 0;
    for (const auto &t : tuples) {
        if (t.size() != upper.size()) {
            throw std::invalid_argument("box_frequency: dimension mismatch");
        }
        bool ok = true;
        for (std::size_t d = 0; d < t.size() && ok; ++d) {
            ok = t[d] <= upper[d];
        }
        inside += ok ? 1 : 0;
    }
    return static_cast<double>(inside) / static_cast<double>(tuples.size());
}

double binomial_standard_error(double p, std::size_t count)
{
    if (count == 0) {
        throw std::invalid_argument("binomial_standard_error: count must be positive");
    }
    return std::sqrt(p * (1.0 - p) / static_cast<double>(count));
}

} // namespace unimodal
