#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "unimodal/limit_laws.hpp"

using namespace unimodal;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

template <class F>
double integrate(F f, double a, double b)
{
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-10);
}

// Box mass of the t = 1 joint density by brute triple quadrature.
double box_oracle(double v0, double vl, double vr)
{
    return integrate(
        [=](double u0) {
            return integrate(
                [=](double ul) {
                    return integrate(
                        [=](double ur) {
                            const double a[] = {ul};
                            const double b[] = {ur};
                            return joint_large_parts_density(u0, a, b);
                        },
                        -inf, std::min(u0, vr));
                },
                -inf, std::min(u0, vl));
        },
        -inf, v0);
}

} // namespace

TEST_CASE("reference values")
{
    const double v_half = -std::log(std::log(2.0));
    CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(gumbel_cdf(v_half) == doctest::Approx(0.5));
    CHECK(gumbel_cdf(-50.0) == 0.0);
    CHECK(logistic_cdf(0.0) == 0.5);
    CHECK(logistic_cdf(std::log(3.0)) == doctest::Approx(0.75));
    CHECK(laplace_mixture_cdf(0.0) == 0.5);
    CHECK(laplace_mixture_cdf(std::log(2.0)) == doctest::Approx(0.75));
    CHECK(laplace_mixture_cdf(-std::log(2.0)) == doctest::Approx(0.25));
    CHECK(double_gumbel_cdf(0.0, 0.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(double_gumbel_cdf(inf, 0.7) == doctest::Approx(gumbel_cdf(0.7)));
    CHECK(double_gumbel_cdf(v_half, v_half) == doctest::Approx(0.25));
    CHECK(exp_order_sum_cdf(std::log(2.0), 1) == doctest::Approx(0.5));
    CHECK(exp_order_sum_cdf(0.0, 5) == 0.0);
    CHECK_THROWS_AS(exp_order_sum_cdf(1.0, 0), std::invalid_argument);
    CHECK(exponential_cdf(-1.0) == 0.0);
    CHECK(exponential_cdf(std::log(2.0)) == doctest::Approx(0.5));
}

TEST_CASE("one-dimensional laws are valid CDFs with matching densities")
{
    const std::vector<LimitLaw> laws{LimitLaw::gumbel(), LimitLaw::logistic(), LimitLaw::exponential(),
                                     LimitLaw::laplace_mixture(), LimitLaw::exp_order_sum(4)};
    for (const auto &law : laws) {
        INFO(law.name());
        CHECK(law.cdf(-60.0) == doctest::Approx(0.0));
        CHECK(law.cdf(60.0) == doctest::Approx(1.0));
        double prev = 0.0;
        for (double v = -10.0; v <= 10.0; v += 0.05) {
            const double f = law.cdf(v);
            CHECK(f >= prev);
            prev = f;
            // skip the kinks at 0 of the exponential and Laplace laws
            if (std::fabs(v) > 1e-3) {
                const double h = 1e-5;
                const double deriv = (law.cdf(v + h) - law.cdf(v - h)) / (2 * h);
                CHECK(deriv == doctest::Approx(law.pdf(v)).epsilon(1e-4).scale(1.0));
            }
        }
    }
    CHECK_THROWS(LimitLaw::exp_order_sum(0));
}

TEST_CASE("difference of two Gumbel variables is logistic")
{
    for (double x : {-2.0, 0.0, 1.0, 3.0}) {
        // P(G1 - G2 <= x) = int g(u) P(G2 >= u - x) du
        const double p = integrate([x](double u) { return gumbel_pdf(u) * (1.0 - gumbel_cdf(u - x)); }, -inf, inf);
        CHECK(std::fabs(p - logistic_cdf(x)) < 1e-3);
    }
}

TEST_CASE("Laplace mixture is the law of a difference of exponentials")
{
    std::mt19937_64 engine(2024);
    std::exponential_distribution<double> e(1.0);
    constexpr int draws = 1'000'000;
    std::vector<double> d(draws);
    for (auto &x : d) {
        x = e(engine) - e(engine);
    }
    for (double v : {-1.5, -0.3, 0.0, 0.4, 2.0}) {
        const double emp = static_cast<double>(std::count_if(d.begin(), d.end(), [v](double x) { return x <= v; })) /
                           draws;
        CHECK(std::fabs(emp - laplace_mixture_cdf(v)) < 0.003);
    }
}

TEST_CASE("exp-order-sum law against Monte Carlo")
{
    std::mt19937_64 engine(77);
    std::exponential_distribution<double> e1(1.0), e2(2.0), e3(3.0);
    constexpr int draws = 1'000'000;
    int below = 0;
    for (int i = 0; i < draws; ++i) {
        below += e1(engine) + e2(engine) + e3(engine) <= 2.0 ? 1 : 0;
    }
    CHECK(std::fabs(static_cast<double>(below) / draws - std::pow(1.0 - std::exp(-2.0), 3)) < 0.003);
}

TEST_CASE("joint large-parts density")
{
    const double l1[] = {0.5};
    const double r1[] = {-1.0};
    CHECK(joint_large_parts_density(0.0, l1, r1) == 0.0); // u0 < uL
    const double l2[] = {-0.2};
    CHECK(joint_large_parts_density(0.0, l2, r1) > 0.0);
    const double l3[] = {-0.2, 0.1};
    const double r3[] = {-1.0, -2.0};
    CHECK(joint_large_parts_density(0.0, l3, r3) == 0.0); // uL not decreasing
    CHECK_THROWS(joint_large_parts_density(0.0, l2, r3));

    // total mass and the Gumbel marginal of u0
    CHECK(std::fabs(box_oracle(inf, inf, inf) - 1.0) < 1e-3);
    for (double u : {-1.0, 0.0, 1.0}) {
        const double marginal = integrate(
            [u](double ul) {
                return integrate(
                    [u, ul](double ur) {
                        const double a[] = {ul};
                        const double b[] = {ur};
                        return joint_large_parts_density(u, a, b);
                    },
                    -inf, u);
            },
            -inf, u);
        CHECK(std::fabs(marginal - gumbel_pdf(u)) < 1e-3);
    }
}

TEST_CASE("box helper agrees with triple quadrature")
{
    for (auto [v0, vl, vr] : {std::tuple{0.0, -0.5, -0.5}, std::tuple{1.0, 0.5, 0.0}, std::tuple{2.0, 1.0, 1.0},
                              std::tuple{-0.5, 1.0, 2.0}, std::tuple{0.3, 0.3, -3.0}}) {
        CHECK(joint_large_parts_box(v0, vl, vr) == doctest::Approx(box_oracle(v0, vl, vr)).epsilon(1e-6));
    }
    CHECK(joint_large_parts_box(40.0, 40.0, 40.0) == doctest::Approx(1.0).epsilon(1e-9));
    // the peak coordinate alone is Gumbel
    CHECK(joint_large_parts_box(0.7, 50.0, 50.0) == doctest::Approx(gumbel_cdf(0.7)).epsilon(1e-9));
}

TEST_CASE("partition largest-parts density")
{
    const double bad[] = {0.0, 0.5};
    CHECK(fristedt_partition_density(bad) == 0.0);
    for (double u : {-1.0, 0.0, 2.0}) {
        const double one[] = {u};
        CHECK(fristedt_partition_density(one) == doctest::Approx(gumbel_pdf(u)));
    }
    const double mass1 = integrate(
        [](double u) {
            const double a[] = {u};
            return fristedt_partition_density(a);
        },
        -inf, inf);
    CHECK(std::fabs(mass1 - 1.0) < 1e-3);
    const double mass2 = integrate(
        [](double u1) {
            return integrate(
                [u1](double u2) {
                    const double a[] = {u1, u2};
                    return fristedt_partition_density(a);
                },
                -inf, u1);
        },
        -inf, inf);
    CHECK(std::fabs(mass2 - 1.0) < 1e-3);
    CHECK_THROWS(fristedt_partition_density(std::span<const double>{}));
}
