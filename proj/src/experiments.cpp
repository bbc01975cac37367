#include "unimodal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "unimodal/asymptotics.hpp"
#include "unimodal/empirical.hpp"
#include "unimodal/limit_laws.hpp"
#include "unimodal/stats.hpp"

namespace unimodal {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
constexpr double ks_tolerance = 0.1;
constexpr double box_tolerance = 0.1;
constexpr double cell_z_tolerance = 3.0;
constexpr double acceptance_tolerance = 0.25;
constexpr double local_tv_tolerance = 0.05;
constexpr double mean_tolerance = 0.1;
constexpr double saddle_tolerance = 0.02;
constexpr double global_tolerance = 0.03;

bool is_exact(const std::string &name) { return name == "pk-exact" || name == "asymp"; }

std::string num(double v) { return fmt::format("{:.6f}", v); }

SummaryRow check(std::string target, std::string metric, double value, double tolerance)
{
    return {std::move(target), std::move(metric), value, tolerance, value <= tolerance, false};
}

SummaryRow info(std::string target, std::string metric, double value)
{
    return {std::move(target), std::move(metric), value, nan_value, true, true};
}

double root_n(std::int64_t n) { return std::sqrt(static_cast<double>(n)); }

void reject_strict(const ExperimentConfig &c)
{
    if (c.strict) {
        throw ConfigError(c.name + ": no strict variant of this limit law");
    }
}

std::vector<SequenceStats> all_stats(const SampleSet &set)
{
    std::vector<SequenceStats> out;
    out.reserve(set.sequences.size());
    for (const auto &s : set.sequences) {
        out.push_back(compute_stats(s));
    }
    return out;
}

void add_acceptance(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    if (set.trials == 0) {
        return;
    }
    const double rate = static_cast<double>(set.sequences.size()) / static_cast<double>(set.trials);
    const double predicted = acceptance_rate_prediction(c.n, c.kind());
    r.summary.push_back(info("acceptance-rate", "empirical", rate));
    r.summary.push_back(info("acceptance-rate", "predicted", predicted));
    r.summary.push_back(check("acceptance-rate", "relative-error", std::fabs(rate - predicted) / predicted,
                              acceptance_tolerance));
}

void eval_sample(ExperimentReport &r, const ExperimentConfig &, const SampleSet &set)
{
    r.columns = "kind,index,size,sequence";
    for (std::size_t i = 0; i < set.sequences.size(); ++i) {
        const auto &s = set.sequences[i];
        r.rows.push_back(fmt::format("sample,{},{},{}", i, s.size(), encode(s)));
    }
}

void eval_pk(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    r.columns = "kind,index,peak,x";
    std::vector<double> xs;
    double mean = 0.0;
    for (std::size_t i = 0; i < set.sequences.size(); ++i) {
        const auto peak = set.sequences[i].peak;
        const double x = set.params.x_of_peak(static_cast<double>(peak));
        xs.push_back(x);
        mean += static_cast<double>(peak);
        r.rows.push_back(fmt::format("sample,{},{},{}", i, peak, num(x)));
    }
    mean /= static_cast<double>(xs.size());
    const EmpiricalDistribution emp(std::move(xs));
    r.summary.push_back(check("peak-gumbel", "ks", ks_distance(emp, LimitLaw::gumbel()), ks_tolerance));
    const double predicted = peak_mean_prediction(c.n, c.kind());
    r.summary.push_back(info("peak-mean", "sample-mean", mean));
    r.summary.push_back(info("peak-mean", "predicted", predicted));
}

void eval_smallparts(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    const auto stats = all_stats(set);
    if (c.strict) {
        // multiplicities of parts 1..kn on both sides are asymptotically fair coins
        r.columns = "kind,index,cell";
        const std::size_t cells = std::size_t{1} << (2 * c.kn);
        std::vector<std::size_t> counts(cells, 0);
        for (std::size_t i = 0; i < stats.size(); ++i) {
            std::size_t cell = 0;
            for (std::int64_t k = 1; k <= c.kn; ++k) {
                cell = (cell << 1) | static_cast<std::size_t>(stats[i].mult(Side::left, k));
            }
            for (std::int64_t k = 1; k <= c.kn; ++k) {
                cell = (cell << 1) | static_cast<std::size_t>(stats[i].mult(Side::right, k));
            }
            ++counts[cell];
            r.rows.push_back(fmt::format("sample,{},{}", i, cell));
        }
        const double p = 1.0 / static_cast<double>(cells);
        const double se = binomial_standard_error(p, stats.size());
        double worst = 0.0, worst_dev = 0.0;
        for (auto cnt : counts) {
            const double dev = std::fabs(static_cast<double>(cnt) / static_cast<double>(stats.size()) - p);
            worst_dev = std::max(worst_dev, dev);
            worst = std::max(worst, dev / se);
        }
        // the same maximum under the conditioned model at this q, i.e. the finite-n bias
        double bias = 0.0;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            double prob = 1.0;
            for (std::int64_t bit = 0; bit < 2 * c.kn; ++bit) {
                const std::int64_t k = c.kn - bit % c.kn; // low bits hold right side k = kn..1
                const double qk = std::pow(set.params.q, static_cast<double>(k));
                const double one = qk / (1.0 + qk);
                prob *= (cell >> bit) & 1U ? one : 1.0 - one;
            }
            bias = std::max(bias, std::fabs(prob - p));
        }
        r.summary.push_back(info("strict-small-parts-cells", "max-deviation", worst_dev));
        r.summary.push_back(info("strict-small-parts-cells", "boltzmann-max-deviation", bias));
        r.summary.push_back(info("strict-small-parts-cells", "boltzmann-max-standard-errors", bias / se));
        r.summary.push_back(check("strict-small-parts-cells", "max-standard-errors", worst, cell_z_tolerance));
        return;
    }
    r.columns = "kind,index,xl,xr,zl,zr";
    std::vector<double> zl, zr;
    const double c0 = set.params.constant;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto xl = stats[i].mult(Side::left, c.k);
        const auto xr = stats[i].mult(Side::right, c.k);
        zl.push_back(normalize(static_cast<double>(xl), c.n, c0, NormalizeMode::small_part_scale, c.k));
        zr.push_back(normalize(static_cast<double>(xr), c.n, c0, NormalizeMode::small_part_scale, c.k));
        r.rows.push_back(fmt::format("sample,{},{},{},{},{}", i, xl, xr, num(zl.back()), num(zr.back())));
    }
    const auto law = LimitLaw::exponential();
    // k X_k / (c sqrt n) has an atom at 0 of mass about 1 - q^k, a floor for the KS distance
    const double zeros = static_cast<double>(std::count(zl.begin(), zl.end(), 0.0));
    r.summary.push_back(info("small-parts-exponential", fmt::format("atom-at-zero-left-k{}", c.k),
                             zeros / static_cast<double>(zl.size())));
    r.summary.push_back(info("small-parts-exponential", fmt::format("boltzmann-atom-at-zero-k{}", c.k),
                             -std::expm1(static_cast<double>(c.k) * std::log(set.params.q))));
    r.summary.push_back(check("small-parts-exponential", fmt::format("ks-left-k{}", c.k),
                              ks_distance(EmpiricalDistribution(std::move(zl)), law), ks_tolerance));
    r.summary.push_back(check("small-parts-exponential", fmt::format("ks-right-k{}", c.k),
                              ks_distance(EmpiricalDistribution(std::move(zr)), law), ks_tolerance));
}

void eval_skew(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    r.columns = "kind,index,xl,xr,z";
    const auto stats = all_stats(set);
    std::vector<double> z;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto xl = stats[i].mult(Side::left, c.k);
        const auto xr = stats[i].mult(Side::right, c.k);
        z.push_back(normalize(static_cast<double>(xl - xr), c.n, set.params.constant,
                              NormalizeMode::small_part_scale, c.k));
        r.rows.push_back(fmt::format("sample,{},{},{},{}", i, xl, xr, num(z.back())));
    }
    r.summary.push_back(check("skew-laplace", fmt::format("ks-k{}", c.k),
                              ks_distance(EmpiricalDistribution(std::move(z)), LimitLaw::laplace_mixture()),
                              ks_tolerance));
}

void eval_rank(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    r.columns = "kind,index,rank,z";
    std::vector<double> z;
    std::size_t left_not_longer = 0;
    for (std::size_t i = 0; i < set.sequences.size(); ++i) {
        const auto st = compute_stats(set.sequences[i]);
        z.push_back(normalize(static_cast<double>(st.rank), c.n, set.params.constant, NormalizeMode::rank_scale));
        left_not_longer += st.rank <= 0 ? 1 : 0;
        r.rows.push_back(fmt::format("sample,{},{},{}", i, st.rank, num(z.back())));
    }
    const double frac = static_cast<double>(left_not_longer) / static_cast<double>(z.size());
    r.summary.push_back(check("rank-logistic", "ks",
                              ks_distance(EmpiricalDistribution(std::move(z)), LimitLaw::logistic()),
                              ks_tolerance));
    r.summary.push_back(info("rank-logistic", "fraction-rank-nonpositive", frac));
}

void eval_largeparts(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    std::string cols = "kind,index,x0";
    for (std::int64_t t = 1; t <= c.t; ++t) {
        cols += fmt::format(",yl{}", t);
    }
    for (std::int64_t t = 1; t <= c.t; ++t) {
        cols += fmt::format(",yr{}", t);
    }
    r.columns = cols;
    const double c0 = set.params.constant;
    const auto stats = all_stats(set);
    std::vector<std::vector<double>> triples;
    std::size_t left_smaller = 0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto &st = stats[i];
        const double x0 = normalize(static_cast<double>(st.pk), c.n, c0, NormalizeMode::peak_shift);
        std::string row = fmt::format("sample,{},{}", i, num(x0));
        std::vector<double> yl, yr;
        for (std::int64_t t = 1; t <= c.t; ++t) {
            yl.push_back(normalize(static_cast<double>(st.largest(Side::left, static_cast<std::size_t>(t))), c.n, c0,
                                   NormalizeMode::peak_shift));
            yr.push_back(normalize(static_cast<double>(st.largest(Side::right, static_cast<std::size_t>(t))), c.n,
                                   c0, NormalizeMode::peak_shift));
        }
        for (double v : yl) {
            row += "," + num(v);
        }
        for (double v : yr) {
            row += "," + num(v);
        }
        r.rows.push_back(std::move(row));
        triples.push_back({x0, yl.front(), yr.front()});
        left_smaller += st.largest(Side::left, 1) <= st.largest(Side::right, 1) ? 1 : 0;
    }
    for (std::size_t b = 0; b < large_parts_boxes().size(); ++b) {
        const Box3 box = large_parts_boxes()[b];
        const double upper[] = {box.v0, box.v_left, box.v_right};
        const double emp = box_frequency(triples, upper);
        const double ref = joint_large_parts_box(box.v0, box.v_left, box.v_right);
        r.summary.push_back(check("large-parts-joint",
                                  fmt::format("box{}({};{};{})", b + 1, box.v0, box.v_left, box.v_right),
                                  std::fabs(emp - ref), box_tolerance));
    }
    r.summary.push_back(info("large-parts-joint", "fraction-yl1-le-yr1",
                             static_cast<double>(left_smaller) / static_cast<double>(stats.size())));
}

void eval_totalsmall(ExperimentReport &r, const ExperimentConfig &c, const SampleSet &set)
{
    r.columns = "kind,index,tl,tr,zl,zr";
    const double c0 = set.params.constant;
    const auto stats = all_stats(set);
    std::vector<std::vector<double>> pairs;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto tl = stats[i].total_small(Side::left, c.kn);
        const auto tr = stats[i].total_small(Side::right, c.kn);
        const double zl = normalize(static_cast<double>(tl), c.n, c0, NormalizeMode::total_small_shift, c.kn);
        const double zr = normalize(static_cast<double>(tr), c.n, c0, NormalizeMode::total_small_shift, c.kn);
        pairs.push_back({zl, zr});
        r.rows.push_back(fmt::format("sample,{},{},{},{},{}", i, tl, tr, num(zl), num(zr)));
    }
    for (std::size_t b = 0; b < total_small_boxes().size(); ++b) {
        const Box2 box = total_small_boxes()[b];
        const double upper[] = {box.v_left, box.v_right};
        const double emp = box_frequency(pairs, upper);
        const double ref = double_gumbel_cdf(box.v_left, box.v_right);
        r.summary.push_back(check("total-small-double-gumbel",
                                  fmt::format("box{}({};{})", b + 1, box.v_left, box.v_right),
                                  std::fabs(emp - ref), box_tolerance));
    }
}

ExperimentReport eval_pk_exact(const ExperimentConfig &c)
{
    ExperimentReport r;
    r.columns = "kind,peak,x,exact,local";
    const ExactPeakLaw law = exact_peak_law(c.n, c.kind());
    const auto local = lattice_local_law(law);
    const ModelParams params = ModelParams::for_size(c.n, c.kind());
    for (std::size_t i = 0; i < law.probs.size(); ++i) {
        const auto peak = law.first_peak + static_cast<std::int64_t>(i);
        r.rows.push_back(fmt::format("row,{},{},{:.6e},{:.6e}", peak, num(params.x_of_peak(static_cast<double>(peak))),
                                     law.probs[i], local[i]));
    }
    r.summary.push_back(check("peak-local-law", "tv", peak_local_tv(law), local_tv_tolerance));
    const double predicted = peak_mean_prediction(c.n, c.kind());
    const double mean = law.mean();
    r.summary.push_back(info("peak-mean", "exact-mean", mean));
    r.summary.push_back(info("peak-mean", "predicted", predicted));
    r.summary.push_back(check("peak-mean", "relative-error", std::fabs(mean - predicted) / predicted, mean_tolerance));
    return r;
}

ExperimentReport eval_asymp(const ExperimentConfig &c)
{
    ExperimentReport r;
    r.columns = "kind,n,m,exact_log,approx_log,ratio";
    const bool strict = c.strict;
    const std::vector<BigInt> table = strict ? count_table_ustar_m(c.n) : count_table_u_m(c.n);
    // table index i holds m = i + offset
    const std::int64_t offset = strict ? 0 : 1;
    const std::int64_t m_lo = 1;
    const std::int64_t m_hi = strict ? c.n - 1 : c.n;
    std::int64_t mode = m_lo;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        if (table[static_cast<std::size_t>(m - offset)] > table[static_cast<std::size_t>(mode - offset)]) {
            mode = m;
        }
    }
    const std::int64_t lo = std::max(m_lo, mode / 2);
    const std::int64_t hi = std::min(m_hi, 2 * mode);
    double mode_error = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
        const double exact = log_bigint(table[static_cast<std::size_t>(m - offset)]);
        const double approx = u_m_saddle(c.n, m, c.kind());
        r.rows.push_back(fmt::format("row,{},{},{:.10f},{:.10f},{:.10f}", c.n, m, exact, approx,
                                     std::exp(approx - exact)));
        if (m == mode) {
            mode_error = std::fabs(approx - exact) / exact;
        }
    }
    BigInt total = 0;
    for (const auto &v : table) {
        total += v;
    }
    const double log_total = log_bigint(total);
    const double global = global_count_asymptotics(c.n, c.kind());
    r.summary.push_back(info("saddle-accuracy", "mode-m", static_cast<double>(mode)));
    r.summary.push_back(check("saddle-accuracy", "relative-log-error-at-mode", mode_error, saddle_tolerance));
    r.summary.push_back(
        check("global-count", "relative-log-error", std::fabs(global - log_total) / log_total, global_tolerance));
    return r;
}

std::vector<std::string> config_header(const ExperimentConfig &c)
{
    std::vector<std::string> h{
        "experiment=" + c.name,
        fmt::format("n={}", c.n),
        fmt::format("strict={}", c.strict ? 1 : 0),
    };
    if (!is_exact(c.name)) {
        h.push_back(fmt::format("samples={}", c.samples));
        h.push_back(fmt::format("seed={}", c.seed));
        h.push_back(fmt::format("workers={}", c.workers));
        const ModelParams p = ModelParams::for_size(c.n, c.kind());
        h.push_back(fmt::format("q={:.17g}", p.q));
    }
    if (c.name == "smallparts" || c.name == "skew") {
        h.push_back(c.strict ? fmt::format("kn={}", c.kn) : fmt::format("k={}", c.k));
    } else if (c.name == "largeparts") {
        h.push_back(fmt::format("t={}", c.t));
    } else if (c.name == "totalsmall") {
        h.push_back(fmt::format("kn={}", c.kn));
    }
    return h;
}

} // namespace

const std::vector<std::string> &experiment_names()
{
    static const std::vector<std::string> names{"sample", "pk",   "pk-exact", "largeparts", "smallparts",
                                                "skew",   "rank", "totalsmall", "asymp"};
    return names;
}

void validate(const ExperimentConfig &c)
{
    const auto &names = experiment_names();
    if (std::find(names.begin(), names.end(), c.name) == names.end()) {
        throw ConfigError("unknown experiment '" + c.name + "'");
    }
    if (c.n < 1) {
        throw ConfigError(c.name + ": n must be positive");
    }
    const double quarter = std::pow(static_cast<double>(c.n), 0.25);
    const double half = root_n(c.n);
    if (is_exact(c.name)) {
        if (c.n > count_table_budget) {
            throw ConfigError(fmt::format("{}: n={} exceeds the exact table budget {}", c.name, c.n,
                                          count_table_budget));
        }
        if (c.name == "asymp" && c.n < 2) {
            throw ConfigError("asymp: n must be at least 2");
        }
        return;
    }
    if (c.samples < 1) {
        throw ConfigError(c.name + ": samples must be at least 1");
    }
    if (c.workers < 1) {
        throw ConfigError(c.name + ": workers must be at least 1");
    }
    if (c.name == "smallparts" && c.strict) {
        if (c.kn < 1 || static_cast<double>(c.kn) > half) {
            throw ConfigError(fmt::format("smallparts: kn={} violates kn = o(n^(1/2)) (need 1 <= kn <= {:.1f})",
                                          c.kn, half));
        }
        if (c.kn > 12) {
            throw ConfigError(fmt::format("smallparts: kn={} gives more than 2^24 cells", c.kn));
        }
    } else if (c.name == "smallparts" || c.name == "skew") {
        reject_strict(c);
        if (c.k < 1 || static_cast<double>(c.k) > quarter) {
            throw ConfigError(fmt::format("{}: k={} violates k = o(n^(1/4)) (need 1 <= k <= {:.2f})", c.name,
                                          c.k, quarter));
        }
    } else if (c.name == "largeparts") {
        if (c.t < 1 || static_cast<double>(c.t) > quarter) {
            throw ConfigError(fmt::format("largeparts: t={} violates t = o(n^(1/4)) (need 1 <= t <= {:.2f})", c.t,
                                          quarter));
        }
    } else if (c.name == "totalsmall") {
        reject_strict(c);
        if (c.kn < 1 || static_cast<double>(c.kn) > half) {
            throw ConfigError(fmt::format("totalsmall: kn={} violates kn = o(n^(1/2)) (need 1 <= kn <= {:.1f})",
                                          c.kn, half));
        }
    } else if (c.name == "rank") {
        reject_strict(c);
    }
}

SampleSet draw_samples(const ExperimentConfig &c)
{
    SampleSet set;
    set.params = ModelParams::for_size(c.n, c.kind());
    // generous per-sample budget: many times the expected number of trials
    const double expected = 1.0 / acceptance_rate_prediction(c.n, c.kind());
    const auto budget = static_cast<std::uint64_t>(std::max(1e6, 1e4 * expected));
    set.sequences = sample_exact_size_batch(set.params, c.samples, c.seed, c.workers, budget, &set.trials);
    return set;
}

bool ExperimentReport::all_pass() const
{
    return std::all_of(summary.begin(), summary.end(), [](const SummaryRow &s) { return s.pass; });
}

const SummaryRow &ExperimentReport::find(const std::string &target, const std::string &metric) const
{
    for (const auto &s : summary) {
        if (s.target == target && s.metric == metric) {
            return s;
        }
    }
    throw std::out_of_range("no summary row " + target + "/" + metric);
}

ExperimentReport evaluate(const ExperimentConfig &c, const SampleSet &set)
{
    validate(c);
    if (is_exact(c.name)) {
        throw ConfigError(c.name + ": exact experiment takes no samples");
    }
    if (set.params.n != c.n || set.params.kind != c.kind()) {
        throw ConfigError(c.name + ": sample set does not match n or kind");
    }
    if (set.sequences.empty()) {
        throw ConfigError(c.name + ": empty sample set");
    }
    ExperimentReport r;
    r.header = config_header(c);
    if (c.name == "sample") {
        eval_sample(r, c, set);
    } else if (c.name == "pk") {
        eval_pk(r, c, set);
    } else if (c.name == "smallparts") {
        eval_smallparts(r, c, set);
    } else if (c.name == "skew") {
        eval_skew(r, c, set);
    } else if (c.name == "rank") {
        eval_rank(r, c, set);
    } else if (c.name == "largeparts") {
        eval_largeparts(r, c, set);
    } else if (c.name == "totalsmall") {
        eval_totalsmall(r, c, set);
    }
    add_acceptance(r, c, set);
    return r;
}

ExperimentReport run_experiment(const ExperimentConfig &c)
{
    validate(c);
    if (is_exact(c.name)) {
        ExperimentReport r = c.name == "asymp" ? eval_asymp(c) : eval_pk_exact(c);
        r.header = config_header(c);
        return r;
    }
    return evaluate(c, draw_samples(c));
}

void write_report(std::ostream &os, const ExperimentReport &r)
{
    for (const auto &h : r.header) {
        os << "# " << h << '\n';
    }
    os << r.columns << '\n';
    for (const auto &row : r.rows) {
        os << row << '\n';
    }
    os << "summary,target,metric,value,tolerance,verdict\n";
    for (const auto &s : r.summary) {
        const std::string tol = s.informational ? "nan" : fmt::format("{:.6f}", s.tolerance);
        const char *verdict = s.informational ? "info" : (s.pass ? "pass" : "fail");
        fmt::print(os, "summary,{},{},{:.6f},{},{}\n", s.target, s.metric, s.value, tol, verdict);
    }
}

std::string render_report(const ExperimentReport &r)
{
    std::ostringstream os;
    write_report(os, r);
    return os.str();
}

const std::vector<Box3> &large_parts_boxes()
{
    static const std::vector<Box3> boxes{{0.0, -0.5, -0.5}, {1.0, 0.5, 0.0}, {2.0, 1.0, 1.0}};
    return boxes;
}

const std::vector<Box2> &total_small_boxes()
{
    static const std::vector<Box2> boxes{{0.0, 0.0}, {1.0, -0.5}, {-0.5, 1.0}};
    return boxes;
}

} // namespace unimodal
