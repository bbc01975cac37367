// Acceptance run: one PASS/FAIL line per criterion, details on `#` lines.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "unimodal/asymptotics.hpp"
#include "unimodal/empirical.hpp"
#include "unimodal/enumerate.hpp"
#include "unimodal/experiments.hpp"
#include "unimodal/limit_laws.hpp"
#include "unimodal/sampler.hpp"
#include "unimodal/series.hpp"

using namespace unimodal;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string &what)
    {
        details.push_back(fmt::format("{} {}", ok ? "ok  " : "FAIL", what));
        pass = pass && ok;
    }
};

template <class F>
double integrate(F f, double a, double b)
{
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-10);
}

Criterion identities()
{
    Criterion c{1, "exact q-series identities"};
    constexpr std::size_t order = 60;
    for (unsigned k = 0; k <= 3; ++k) {
        c.require(mu_series_bell(k, order) == mu_series_direct(k, order),
                  fmt::format("mu_{} Bell form equals direct form to order {}", k, order));
    }
    for (unsigned k = 1; k <= 3; ++k) {
        c.require(mp_series_recursive(k, order) == mp_series_direct(k, order),
                  fmt::format("mp_{} recursion equals direct form to order {}", k, order));
    }
    for (auto kind : {SequenceKind::unimodal, SequenceKind::strongly_unimodal}) {
        const bool strict = kind == SequenceKind::strongly_unimodal;
        const auto series = strict ? strongly_unimodal_series(order) : unimodal_series(order);
        const auto guard = strict ? enumerate_guard_strict : enumerate_guard_unimodal;
        bool enum_ok = true;
        for (std::int64_t n = 1; n <= guard; ++n) {
            enum_ok = enum_ok && series[static_cast<std::size_t>(n)] == BigInt(enumerate_all(n, kind).size());
        }
        c.require(enum_ok, fmt::format("{} series equals enumeration for n <= {}", strict ? "strict" : "unimodal",
                                       guard));
        bool table_ok = true;
        for (std::int64_t n = 1; n <= 60; ++n) {
            BigInt total = 0;
            for (const auto &v : strict ? count_table_ustar_m(n) : count_table_u_m(n)) {
                total += v;
            }
            table_ok = table_ok && total == series[static_cast<std::size_t>(n)];
        }
        c.require(table_ok,
                  fmt::format("{} series equals summed count tables for n <= 60", strict ? "strict" : "unimodal"));
    }
    return c;
}

Criterion uniformity()
{
    Criterion c{2, "exact-size sampler is uniform"};
    for (auto [kind, n] : {std::pair{SequenceKind::unimodal, std::int64_t{10}},
                           std::pair{SequenceKind::strongly_unimodal, std::int64_t{12}}}) {
        const auto all = enumerate_all(n, kind);
        std::map<UnimodalSequence, std::size_t> index;
        for (std::size_t i = 0; i < all.size(); ++i) {
            index.emplace(all[i], i);
        }
        constexpr std::size_t draws = 1'000'000;
        const auto samples =
            sample_exact_size_batch(ModelParams::for_size(n, kind), draws, 20240601, 1, 1'000'000);
        std::vector<double> freq(all.size(), 0.0);
        bool known = true;
        for (const auto &s : samples) {
            const auto it = index.find(s);
            known = known && it != index.end();
            if (it != index.end()) {
                freq[it->second] += 1.0 / static_cast<double>(draws);
            }
        }
        const std::vector<double> uniform(all.size(), 1.0 / static_cast<double>(all.size()));
        const double tv = tv_distance(freq, uniform);
        const char *label = kind == SequenceKind::unimodal ? "unimodal" : "strict";
        c.require(known, fmt::format("{} n={}: every sample is in the enumerated list", label, n));
        c.require(tv < 0.01, fmt::format("{} n={}: TV to uniform over {} sequences = {:.5f} < 0.01", label, n,
                                         all.size(), tv));
    }
    return c;
}

Criterion local_limit()
{
    Criterion c{3, "exact peak law vs local limit"};
    std::vector<double> tvs;
    for (std::int64_t n : {500, 1000, 2000}) {
        const auto law = exact_peak_law(n, SequenceKind::unimodal);
        tvs.push_back(peak_local_tv(law));
        c.details.push_back(fmt::format("info n={} TV={:.5f}", n, tvs.back()));
        if (n == 2000) {
            c.require(tvs.back() <= 0.05, fmt::format("n=2000 TV {:.5f} <= 0.05", tvs.back()));
            const double mean = law.mean();
            const double predicted = peak_mean_prediction(n, SequenceKind::unimodal);
            const double rel = std::fabs(mean - predicted) / predicted;
            c.require(rel <= 0.1, fmt::format("n=2000 exact mean {:.3f} vs {:.3f}: relative error {:.4f} <= 0.1",
                                              mean, predicted, rel));
        }
    }
    c.require(tvs[0] > tvs[1] && tvs[1] > tvs[2], "TV decreases along n = 500, 1000, 2000");
    return c;
}

Criterion saddle(const std::map<SequenceKind, SampleSet> &sets)
{
    Criterion c{4, "saddle-point accuracy and acceptance rate"};
    for (auto kind : {SequenceKind::unimodal, SequenceKind::strongly_unimodal}) {
        const bool strict = kind == SequenceKind::strongly_unimodal;
        const char *label = strict ? "strict" : "unimodal";
        std::vector<double> errs;
        for (std::int64_t n : {500, 1000, 2000}) {
            const auto law = exact_peak_law(n, kind);
            // peak p corresponds to m = p (unimodal) or m = p - 1 (strict)
            const std::int64_t m = law.mode() - (strict ? 1 : 0);
            const auto row = saddle_convergence_row(n, m, kind);
            errs.push_back(std::fabs(row.approx_log - row.exact_log) / row.exact_log);
            c.details.push_back(fmt::format("info {} n={} m={} exact_log={:.6f} approx_log={:.6f} rel={:.3e}",
                                            label, n, m, row.exact_log, row.approx_log, errs.back()));
        }
        c.require(errs[2] < 0.02, fmt::format("{} n=2000 relative log error {:.3e} < 0.02", label, errs[2]));
        c.require(errs[0] > errs[1] && errs[1] > errs[2], fmt::format("{} error decreases along n", label));
        const SampleSet &set = sets.at(kind);
        const double rate = static_cast<double>(set.sequences.size()) / static_cast<double>(set.trials);
        const double predicted = acceptance_rate_prediction(set.params.n, kind);
        const double rel = std::fabs(rate - predicted) / predicted;
        c.require(rel <= 0.25, fmt::format("{} n={} acceptance {:.4e} vs {:.4e}: relative error {:.4f} <= 0.25",
                                           label, set.params.n, rate, predicted, rel));
    }
    return c;
}

void absorb(Criterion &c, const ExperimentReport &r, const std::string &label)
{
    for (const auto &s : r.summary) {
        if (s.informational) {
            c.details.push_back(fmt::format("info {} {}/{} = {:.6f}", label, s.target, s.metric, s.value));
        } else {
            c.require(s.pass, fmt::format("{} {}/{} = {:.6f} (tolerance {})", label, s.target, s.metric, s.value,
                                          s.tolerance));
        }
    }
}

Criterion sampled_laws(const std::map<SequenceKind, SampleSet> &sets)
{
    Criterion c{5, "sampled limit laws at n = 2500"};
    ExperimentConfig base;
    base.n = 2500;
    base.samples = 20000;
    base.seed = 1;
    const auto &uni = sets.at(SequenceKind::unimodal);
    const auto &str = sets.at(SequenceKind::strongly_unimodal);
    auto run = [&](ExperimentConfig cfg, const SampleSet &set, const std::string &label) {
        absorb(c, evaluate(cfg, set), label);
    };
    ExperimentConfig cfg = base;
    cfg.name = "pk";
    run(cfg, uni, "pk");
    cfg.name = "smallparts";
    for (std::int64_t k = 1; k <= 3; ++k) {
        cfg.k = k;
        run(cfg, uni, fmt::format("smallparts k={}", k));
    }
    cfg.name = "skew";
    for (std::int64_t k = 1; k <= 3; ++k) {
        cfg.k = k;
        run(cfg, uni, fmt::format("skew k={}", k));
    }
    cfg = base;
    cfg.name = "rank";
    run(cfg, uni, "rank");
    cfg.name = "largeparts";
    cfg.t = 1;
    run(cfg, uni, "largeparts t=1");
    cfg.name = "totalsmall";
    cfg.kn = 8;
    run(cfg, uni, "totalsmall kn=8");
    cfg = base;
    cfg.strict = true;
    cfg.name = "pk";
    run(cfg, str, "strict pk");
    cfg.name = "smallparts";
    cfg.kn = 3;
    run(cfg, str, "strict smallparts kn=3");
    return c;
}

Criterion analytic()
{
    Criterion c{6, "analytic cross-checks"};
    for (double v : {0.0, 1.0, 2.0}) {
        const auto p = large_parts_product_check(1'000'000, v);
        const double dev = std::fabs(p.lhs / p.rhs - 1.0);
        c.require(dev <= 0.01, fmt::format("product at n=1e6, v={}: lhs/rhs - 1 = {:.2e} <= 0.01", v, dev));
    }
    // sum of Exp with means 1, 1/2, 1/3 against (1 - e^{-x})^3
    std::exponential_distribution<double> e1(1.0), e2(2.0), e3(3.0);
    std::mt19937_64 engine(99);
    constexpr int draws = 1'000'000;
    std::vector<double> sums(draws);
    for (auto &s : sums) {
        s = e1(engine) + e2(engine) + e3(engine);
    }
    const EmpiricalDistribution emp(std::move(sums));
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        worst = std::max(worst, std::fabs(emp.cdf(x) - exp_order_sum_cdf(x, 3)));
    }
    c.require(worst <= 0.003, fmt::format("exp-order-sum CDF vs Monte Carlo: max gap {:.5f} <= 0.003", worst));

    double gap = 0.0;
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        const double conv = integrate([x](double u) { return gumbel_pdf(u) * gumbel_cdf(u - x); }, -inf, inf);
        gap = std::max(gap, std::fabs(conv - logistic_cdf(-x)));
    }
    c.require(gap <= 1e-3, fmt::format("Gumbel difference vs logistic by quadrature: max gap {:.2e} <= 1e-3", gap));

    // triple integral of the t = 1 joint density over its cone
    const double mass = integrate(
        [](double u0) {
            return integrate(
                [u0](double ul) {
                    return integrate(
                        [u0, ul](double ur) {
                            const double a[] = {ul};
                            const double b[] = {ur};
                            return joint_large_parts_density(u0, a, b);
                        },
                        -inf, u0);
                },
                -inf, u0);
        },
        -inf, inf);
    c.require(std::fabs(mass - 1.0) <= 1e-3, fmt::format("joint large-parts density mass {:.6f} = 1 +- 1e-3", mass));
    return c;
}

Criterion determinism()
{
    Criterion c{7, "determinism"};
    ExperimentConfig cfg;
    cfg.n = 400;
    cfg.samples = 1500;
    cfg.seed = 7;
    for (const std::string name : {"sample", "pk", "rank", "largeparts"}) {
        cfg.name = name;
        for (unsigned workers : {1u, 3u}) {
            cfg.workers = workers;
            const bool same = render_report(run_experiment(cfg)) == render_report(run_experiment(cfg));
            c.require(same, fmt::format("{} with {} worker(s) is byte-identical across runs", name, workers));
        }
    }
    cfg.workers = 1;
    cfg.name = "pk-exact";
    c.require(render_report(run_experiment(cfg)) == render_report(run_experiment(cfg)),
              "pk-exact is byte-identical across runs");
    return c;
}

} // namespace

int main()
{
    std::map<SequenceKind, SampleSet> sets;
    for (auto kind : {SequenceKind::unimodal, SequenceKind::strongly_unimodal}) {
        ExperimentConfig cfg;
        cfg.n = 2500;
        cfg.samples = 20000;
        cfg.seed = 1;
        cfg.strict = kind == SequenceKind::strongly_unimodal;
        sets.emplace(kind, draw_samples(cfg));
    }
    std::vector<Criterion> results;
    results.push_back(identities());
    results.push_back(uniformity());
    results.push_back(local_limit());
    results.push_back(saddle(sets));
    results.push_back(sampled_laws(sets));
    results.push_back(analytic());
    results.push_back(determinism());

    int failed = 0;
    for (const auto &r : results) {
        for (const auto &d : r.details) {
            fmt::print("#   [{}] {}\n", r.id, d);
        }
        fmt::print("{} criterion {}: {}\n", r.pass ? "PASS" : "FAIL", r.id, r.title);
        failed += r.pass ? 0 : 1;
    }
    return failed;
}
