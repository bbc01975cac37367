#include "unimodal/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace unimodal {

double scale_constant(SequenceKind kind) noexcept
{
    return kind == SequenceKind::strongly_unimodal ? constant_A : constant_B;
}

ModelParams ModelParams::for_size(std::int64_t n, SequenceKind kind)
{
    if (n < 1) {
        throw std::invalid_argument("ModelParams: n must be at least 1");
    }
    const double c = scale_constant(kind);
    return ModelParams{n, kind, c, std::exp(-1.0 / (c * std::sqrt(static_cast<double>(n))))};
}

ModelParams ModelParams::with_q(std::int64_t n, SequenceKind kind, double q)
{
    ModelParams p = for_size(n, kind);
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("ModelParams: q must lie in (0, 1)");
    }
    p.q = q;
    return p;
}

double ModelParams::scale() const noexcept { return constant * std::sqrt(static_cast<double>(n)); }

double ModelParams::center() const noexcept { return scale() * std::log(2.0 * scale()); }

double ModelParams::x_of_peak(double peak) const noexcept { return (peak - center()) / scale(); }

double ModelParams::peak_of_x(double x) const noexcept { return center() + x * scale(); }

std::uint64_t splitmix64(std::uint64_t &state) noexcept
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t worker_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    std::uint64_t state = master;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i <= index; ++i) {
        out = splitmix64(state);
    }
    return out;
}

namespace {

void check_q(double q)
{
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("q must lie in (0, 1)");
    }
}

// Inversion: l = floor(log U / (k log q)) for U uniform on (0, 1].
inline std::int64_t geometric_draw(double qk, double k_log_q, RngStream &rng)
{
    const double u = rng.uniform_open_closed();
    if (u > qk) {
        return 0;
    }
    const auto l = static_cast<std::int64_t>(std::floor(std::log(u) / k_log_q));
    return std::max<std::int64_t>(l, 1);
}

} // namespace

std::int64_t sample_multiplicity_geometric(double q, std::int64_t k, RngStream &rng)
{
    check_q(q);
    if (k < 1) {
        throw std::domain_error("sample_multiplicity_geometric: k must be at least 1");
    }
    const double kd = static_cast<double>(k);
    return geometric_draw(std::pow(q, kd), kd * std::log(q), rng);
}

double PeakWeights::prob(std::int64_t peak) const noexcept
{
    if (peak < first_peak || peak > last_peak()) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(peak - first_peak)];
}

PeakWeights peak_weights(const ModelParams &params)
{
    check_q(params.q);
    const long double q = params.q;
    const long double log_q = std::log(q);
    const bool strict = params.strict();

    // log w(p) for peak p >= 1:
    //   unimodal: p log q - 2 sum_{k<=p} log(1 - q^k)
    //   strict:   p log q + 2 sum_{k<p} log(1 + q^k)
    std::vector<long double> log_w;
    long double acc = 0.0L;
    long double max_log = -INFINITY;
    long double partial = 0.0L; // sum of exp(log_w - max_log)
    long double tail = INFINITY;
    for (std::int64_t p = 1;; ++p) {
        if (p > peak_cutoff_limit) {
            throw std::runtime_error("peak_weights: tail tolerance not reached below peak 10^6");
        }
        const long double qp = std::pow(q, static_cast<long double>(p));
        if (strict) {
            if (p >= 2) {
                acc += 2.0L * std::log1p(std::pow(q, static_cast<long double>(p - 1)));
            }
        } else {
            acc -= 2.0L * std::log1p(-qp);
        }
        const long double lw = static_cast<long double>(p) * log_q + acc;
        log_w.push_back(lw);
        if (lw > max_log) {
            partial = partial * std::exp(max_log - lw) + 1.0L;
            max_log = lw;
        } else {
            partial += std::exp(lw - max_log);
        }
        // ratio w(p+1)/w(p); nonincreasing in p, so it bounds the whole tail
        const long double ratio = strict ? q * (1.0L + qp) * (1.0L + qp) : q / ((1.0L - qp * q) * (1.0L - qp * q));
        if (ratio < 1.0L) {
            tail = std::exp(lw - max_log) * ratio / (1.0L - ratio);
            if (tail < static_cast<long double>(peak_tail_tolerance) * partial) {
                break;
            }
        }
    }

    PeakWeights out;
    out.first_peak = 1;
    out.probs.resize(log_w.size());
    // Neumaier-compensated normalization
    long double sum = 0.0L, comp = 0.0L;
    std::vector<long double> w(log_w.size());
    for (std::size_t i = 0; i < log_w.size(); ++i) {
        w[i] = std::exp(log_w[i] - max_log);
        const long double t = sum + w[i];
        comp += std::fabs(sum) >= std::fabs(w[i]) ? (sum - t) + w[i] : (w[i] - t) + sum;
        sum = t;
    }
    sum += comp;
    out.cdf.resize(log_w.size());
    long double running = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.probs[i] = static_cast<double>(w[i] / sum);
        running += w[i] / sum;
        out.cdf[i] = static_cast<double>(running);
    }
    out.cdf.back() = 1.0;
    out.tail_bound = static_cast<double>(tail / sum);
    return out;
}

BoltzmannSampler::BoltzmannSampler(const ModelParams &params)
    : params_(params), weights_(peak_weights(params)), log_q_(std::log(params.q))
{
    const auto top = static_cast<std::size_t>(std::max(weights_.last_peak(), params.n) + 1);
    success_.resize(top + 1);
    for (std::size_t k = 1; k <= top; ++k) {
        success_[k] = success_prob(static_cast<std::int64_t>(k));
    }
}

double BoltzmannSampler::success_prob(std::int64_t k) const
{
    if (static_cast<std::size_t>(k) < success_.size() && success_[static_cast<std::size_t>(k)] > 0.0) {
        return success_[static_cast<std::size_t>(k)];
    }
    const double qk = std::pow(params_.q, static_cast<double>(k));
    return params_.strict() ? qk / (1.0 + qk) : qk;
}

std::int64_t BoltzmannSampler::draw_peak(RngStream &rng) const
{
    const double u = rng.uniform();
    const auto it = std::upper_bound(weights_.cdf.begin(), weights_.cdf.end(), u);
    const auto idx = std::min<std::ptrdiff_t>(it - weights_.cdf.begin(),
                                              static_cast<std::ptrdiff_t>(weights_.cdf.size()) - 1);
    return weights_.first_peak + idx;
}

// Parts k = top..1 in nonincreasing order.
void BoltzmannSampler::draw_side(std::int64_t top, RngStream &rng, std::vector<std::int64_t> &parts) const
{
    parts.clear();
    for (std::int64_t k = top; k >= 1; --k) {
        const double p = success_prob(k);
        std::int64_t x;
        if (params_.strict()) {
            x = rng.uniform() < p ? 1 : 0;
        } else {
            x = geometric_draw(p, static_cast<double>(k) * log_q_, rng);
        }
        parts.insert(parts.end(), static_cast<std::size_t>(x), k);
    }
}

UnimodalSequence BoltzmannSampler::sample_conditioned(std::int64_t m, RngStream &rng) const
{
    const bool strict = params_.strict();
    if (m < (strict ? 0 : 1)) {
        throw std::invalid_argument("sample_conditioned: m below the smallest admissible peak index");
    }
    UnimodalSequence s;
    s.kind = params_.kind;
    s.peak = strict ? m + 1 : m;
    std::vector<std::int64_t> parts;
    draw_side(m, rng, parts);
    s.left.assign(parts.rbegin(), parts.rend());
    draw_side(m, rng, parts);
    s.right = parts;
    return s;
}

UnimodalSequence BoltzmannSampler::sample(RngStream &rng) const
{
    const std::int64_t peak = draw_peak(rng);
    return sample_conditioned(params_.strict() ? peak - 1 : peak, rng);
}

ExactSample BoltzmannSampler::sample_exact_size(RngStream &rng, std::uint64_t max_trials) const
{
    if (max_trials < 1) {
        throw std::invalid_argument("sample_exact_size: max_trials must be at least 1");
    }
    const std::int64_t n = params_.n;
    const bool strict = params_.strict();
    std::vector<std::int64_t> mult_left(success_.size()), mult_right(success_.size());

    for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
        const std::int64_t peak = draw_peak(rng);
        if (peak > n) {
            continue;
        }
        const std::int64_t top = strict ? peak - 1 : peak;
        const std::int64_t budget = n - peak;
        std::int64_t size = 0;
        bool rejected = false;
        for (auto *mult : {&mult_left, &mult_right}) {
            for (std::int64_t k = top; k >= 1; --k) {
                const double p = success_[static_cast<std::size_t>(k)];
                std::int64_t x;
                if (strict) {
                    x = rng.uniform() < p ? 1 : 0;
                } else {
                    x = geometric_draw(p, static_cast<double>(k) * log_q_, rng);
                }
                (*mult)[static_cast<std::size_t>(k)] = x;
                size += k * x;
                if (size > budget) {
                    rejected = true;
                    break;
                }
            }
            if (rejected) {
                break;
            }
        }
        if (rejected || size != budget) {
            continue;
        }
        ExactSample out;
        out.trials = trial;
        out.sequence.kind = params_.kind;
        out.sequence.peak = peak;
        for (std::int64_t k = 1; k <= top; ++k) {
            out.sequence.left.insert(out.sequence.left.end(), static_cast<std::size_t>(mult_left[k]), k);
        }
        for (std::int64_t k = top; k >= 1; --k) {
            out.sequence.right.insert(out.sequence.right.end(), static_cast<std::size_t>(mult_right[k]), k);
        }
        return out;
    }
    throw SamplingExhausted(max_trials);
}

UnimodalSequence sample_conditioned(const ModelParams &params, std::int64_t m, RngStream &rng)
{
    check_q(params.q);
    const bool strict = params.strict();
    if (m < (strict ? 0 : 1)) {
        throw std::invalid_argument("sample_conditioned: m below the smallest admissible peak index");
    }
    const double log_q = std::log(params.q);
    auto side = [&](std::vector<std::int64_t> &parts) {
        for (std::int64_t k = m; k >= 1; --k) {
            const double qk = std::pow(params.q, static_cast<double>(k));
            const std::int64_t x = strict ? (rng.uniform() < qk / (1.0 + qk) ? 1 : 0)
                                          : geometric_draw(qk, static_cast<double>(k) * log_q, rng);
            parts.insert(parts.end(), static_cast<std::size_t>(x), k);
        }
    };
    UnimodalSequence s;
    s.kind = params.kind;
    s.peak = strict ? m + 1 : m;
    std::vector<std::int64_t> parts;
    side(parts);
    s.left.assign(parts.rbegin(), parts.rend());
    parts.clear();
    side(parts);
    s.right = std::move(parts);
    return s;
}

UnimodalSequence sample_boltzmann(const ModelParams &params, RngStream &rng)
{
    return BoltzmannSampler(params).sample(rng);
}

ExactSample sample_exact_size(const ModelParams &params, RngStream &rng, std::uint64_t max_trials)
{
    return BoltzmannSampler(params).sample_exact_size(rng, max_trials);
}

std::vector<UnimodalSequence> sample_exact_size_batch(const ModelParams &params, std::size_t count,
                                                      std::uint64_t seed, unsigned workers,
                                                      std::uint64_t max_trials_per_sample,
                                                      std::uint64_t *total_trials)
{
    if (workers == 0) {
        throw std::invalid_argument("sample_exact_size_batch: workers must be at least 1");
    }
    const BoltzmannSampler sampler(params);
    std::vector<std::vector<UnimodalSequence>> parts(workers);
    std::vector<std::uint64_t> trials(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t share = count / workers + (w < count % workers ? 1 : 0);
            threads.emplace_back([&, w, share] {
                try {
                    RngStream rng(worker_seed(seed, w));
                    parts[w].reserve(share);
                    for (std::size_t i = 0; i < share; ++i) {
                        ExactSample s = sampler.sample_exact_size(rng, max_trials_per_sample);
                        trials[w] += s.trials;
                        parts[w].push_back(std::move(s.sequence));
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<UnimodalSequence> out;
    out.reserve(count);
    std::uint64_t trial_sum = 0;
    for (unsigned w = 0; w < workers; ++w) {
        trial_sum += trials[w];
        for (auto &s : parts[w]) {
            out.push_back(std::move(s));
        }
    }
    if (total_trials != nullptr) {
        *total_trials = trial_sum;
    }
    return out;
}

std::vector<std::int64_t> sample_partition_boltzmann(double q, RngStream &rng, std::int64_t cutoff)
{
    check_q(q);
    if (cutoff < 1) {
        throw std::invalid_argument("sample_partition_boltzmann: cutoff must be at least 1");
    }
    const double tail = std::pow(q, static_cast<double>(cutoff + 1)) / (1.0 - q);
    if (!(tail < peak_tail_tolerance)) {
        throw std::invalid_argument("sample_partition_boltzmann: cutoff too small, tail mass " +
                                    std::to_string(tail) + " >= 1e-12");
    }
    const double log_q = std::log(q);
    std::vector<std::int64_t> mult(static_cast<std::size_t>(cutoff) + 1, 0);
    for (std::int64_t k = 1; k <= cutoff; ++k) {
        const double kd = static_cast<double>(k);
        mult[static_cast<std::size_t>(k)] = geometric_draw(std::pow(q, kd), kd * log_q, rng);
    }
    return mult;
}

} // namespace unimodal
