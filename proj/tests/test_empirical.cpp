#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "unimodal/empirical.hpp"
#include "unimodal/limit_laws.hpp"

using namespace unimodal;

TEST_CASE("empirical cdf")
{
    const EmpiricalDistribution e({3.0, 1.0, 2.0, 2.0});
    CHECK(e.count() == 4);
    CHECK(e.values().front() == 1.0);
    CHECK(e.cdf(0.5) == 0.0);
    CHECK(e.cdf(2.0) == 0.75);
    CHECK(e.cdf_below(2.0) == 0.25);
    CHECK(e.cdf(3.0) == 1.0);
}

TEST_CASE("KS distance of a law's own quantiles is small")
{
    constexpr int N = 1'000'000;
    std::vector<double> q(N);
    for (int i = 0; i < N; ++i) {
        const double p = (i + 1.0) / (N + 1.0);
        q[i] = -std::log(-std::log(p)); // Gumbel quantile
    }
    const EmpiricalDistribution e(q);
    CHECK(ks_distance(e, LimitLaw::gumbel()) < 0.002);
    // the sup of |Gumbel - logistic|, found by a grid search over x
    double gap = 0.0;
    for (double x = -5.0; x <= 5.0; x += 1e-4) {
        gap = std::max(gap, std::fabs(gumbel_cdf(x) - logistic_cdf(x)));
    }
    CHECK(ks_distance(e, LimitLaw::logistic()) == doctest::Approx(gap).epsilon(0.01));
    // independent bounded minimization gives 0.2036322 near x = -0.921
    CHECK(gap == doctest::Approx(0.2036322).epsilon(1e-5));
}

TEST_CASE("KS distance of a point mass")
{
    const EmpiricalDistribution e(std::vector<double>(100, 0.0));
    CHECK(ks_distance(e, LimitLaw::logistic()) >= 0.5);
    CHECK(ks_distance(e, [](double) { return 0.5; }) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ks_distance(EmpiricalDistribution{}, LimitLaw::gumbel()), std::invalid_argument);
}

TEST_CASE("KS distance sees both sides of a jump")
{
    // sample {0, 1}: F_emp jumps 0 -> 0.5 -> 1; against the uniform cdf on [0, 1]
    const EmpiricalDistribution e({0.0, 1.0});
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_distance(e, uniform) == doctest::Approx(0.5));
}

TEST_CASE("total variation")
{
    const std::vector<double> p{0.5, 0.5};
    const std::vector<double> q{0.25, 0.25, 0.5};
    CHECK(tv_distance(p, q) == doctest::Approx(0.5));
    CHECK(tv_distance(p, p) == 0.0);
    const std::vector<double> r{0.0, 0.0, 1.0};
    CHECK(tv_distance(p, r) == doctest::Approx(1.0));
}

TEST_CASE("box frequencies")
{
    const std::vector<std::vector<double>> t{{0.0, 0.0}, {1.0, -1.0}, {2.0, 2.0}, {-1.0, 3.0}};
    const double b1[] = {1.0, 0.0};
    CHECK(box_frequency(t, b1) == 0.5);
    const double b2[] = {10.0, 10.0};
    CHECK(box_frequency(t, b2) == 1.0);
    const double b3[] = {1.0};
    CHECK_THROWS(box_frequency(t, b3));
    CHECK_THROWS(box_frequency({}, b1));
    CHECK(binomial_standard_error(0.5, 100) == doctest::Approx(0.05));
}
