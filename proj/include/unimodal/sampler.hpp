// Boltzmann samplers for unimodal and strongly unimodal sequences.
//
// Q_q weights a sequence by q^size. Conditioned on the peak, the part
// multiplicities on both sides become independent: geometric with
// P(X_k = l) = (1 - q^k) q^{kl} in the unimodal case, Bernoulli with
// P(X_k = 1) = q^k / (1 + q^k) in the strict case (k ranges over the parts
// allowed below the peak). Rejecting until the size equals n gives the
// uniform law on sequences of size n.

#ifndef UNIMODAL_SAMPLER_HPP
#define UNIMODAL_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimodal/enumerate.hpp"

namespace unimodal {

/// sqrt(6)/pi, the scale of the strict model.
inline constexpr double constant_A = 0.77969680123367606;
/// sqrt(3)/pi, the scale of the unimodal model.
inline constexpr double constant_B = 0.55132889542179204;
inline constexpr double euler_gamma = 0.5772156649015329;

/// Scale constant used by `kind`: B for unimodal, A for strict.
double scale_constant(SequenceKind kind) noexcept;

/// n, kind, the scale constant c and the Boltzmann parameter q.
///
/// The default q is exp(-1/(c sqrt n)). The peak p and the centered
/// coordinate x are related by p = c sqrt n log(2 c sqrt n) + c x sqrt n;
/// in the strict model p is m + 1.
struct ModelParams {
    std::int64_t n = 1;
    SequenceKind kind = SequenceKind::unimodal;
    double constant = constant_B;
    double q = 0.5;

    static ModelParams for_size(std::int64_t n, SequenceKind kind);
    /// Same coordinates as for_size but an arbitrary q in (0, 1).
    static ModelParams with_q(std::int64_t n, SequenceKind kind, double q);

    bool strict() const noexcept { return kind == SequenceKind::strongly_unimodal; }
    double scale() const noexcept;  ///< c sqrt n
    double center() const noexcept; ///< c sqrt n log(2 c sqrt n)
    double x_of_peak(double peak) const noexcept;
    double peak_of_x(double x) const noexcept;
};

/// splitmix64 step; advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t &state) noexcept;

/// Seed of worker `index` derived from a master seed: the (index+1)-th
/// splitmix64 output started from `master`.
std::uint64_t worker_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Deterministic 64-bit generator stream; equal seeds give equal streams.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }
    /// Uniform on (0, 1], 53 random bits.
    double uniform_open_closed() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
    /// Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// One draw with P(l) = (1 - q^k) q^{kl}. Throws std::domain_error for q
/// outside (0, 1) or k < 1.
std::int64_t sample_multiplicity_geometric(double q, std::int64_t k, RngStream &rng);

/// Peak law of Q_q restricted to nonempty sequences.
///
/// probs[i] is the probability of peak first_peak + i. The vector is cut
/// where the remaining tail mass is below 1e-12 of the total.
struct PeakWeights {
    std::int64_t first_peak = 1;
    std::vector<double> probs;
    std::vector<double> cdf;
    double tail_bound = 0.0;

    std::int64_t last_peak() const noexcept { return first_peak + static_cast<std::int64_t>(probs.size()) - 1; }
    double prob(std::int64_t peak) const noexcept;
};

inline constexpr double peak_tail_tolerance = 1e-12;
inline constexpr std::int64_t peak_cutoff_limit = 1'000'000;

/// Throws std::runtime_error if the tail tolerance is not reached by peak 10^6.
PeakWeights peak_weights(const ModelParams &params);

/// Thrown when rejection sampling runs out of trials.
class SamplingExhausted : public std::runtime_error {
public:
    explicit SamplingExhausted(std::uint64_t trials)
        : std::runtime_error("rejection sampling exhausted after " + std::to_string(trials) + " trials"),
          trials_(trials)
    {
    }
    std::uint64_t trials() const noexcept { return trials_; }

private:
    std::uint64_t trials_;
};

struct ExactSample {
    UnimodalSequence sequence;
    std::uint64_t trials = 0;
};

/// Precomputed sampler for one ModelParams. Immutable after construction;
/// share freely between threads, each with its own RngStream.
class BoltzmannSampler {
public:
    explicit BoltzmannSampler(const ModelParams &params);

    const ModelParams &params() const noexcept { return params_; }
    const PeakWeights &weights() const noexcept { return weights_; }

    std::int64_t draw_peak(RngStream &rng) const;
    /// Draw from Q_{q,m}: unimodal peak m, strict peak m + 1.
    UnimodalSequence sample_conditioned(std::int64_t m, RngStream &rng) const;
    /// Draw from Q_q conditioned on being nonempty.
    UnimodalSequence sample(RngStream &rng) const;
    /// Reject until the size equals params().n. Throws SamplingExhausted.
    ExactSample sample_exact_size(RngStream &rng, std::uint64_t max_trials) const;

private:
    double success_prob(std::int64_t k) const; // q^k, or q^k/(1+q^k) when strict
    void draw_side(std::int64_t top, RngStream &rng, std::vector<std::int64_t> &parts) const;

    ModelParams params_;
    PeakWeights weights_;
    double log_q_;
    std::vector<double> success_; // index k
};

/// Free-function forms; each builds what it needs per call.
UnimodalSequence sample_conditioned(const ModelParams &params, std::int64_t m, RngStream &rng);
UnimodalSequence sample_boltzmann(const ModelParams &params, RngStream &rng);
ExactSample sample_exact_size(const ModelParams &params, RngStream &rng, std::uint64_t max_trials);

/// `count` exact-size samples split over `workers` independent streams
/// seeded by worker_seed(seed, i); results concatenated in worker order.
/// `total_trials` (optional) receives the summed trial count.
std::vector<UnimodalSequence> sample_exact_size_batch(const ModelParams &params, std::size_t count,
                                                      std::uint64_t seed, unsigned workers,
                                                      std::uint64_t max_trials_per_sample,
                                                      std::uint64_t *total_trials = nullptr);

/// Independent geometric multiplicities X_1..X_cutoff of the partition
/// Boltzmann model; element k holds X_k, element 0 is unused. Throws
/// std::invalid_argument when sum_{k > cutoff} q^k >= 1e-12.
std::vector<std::int64_t> sample_partition_boltzmann(double q, RngStream &rng, std::int64_t cutoff);

} // namespace unimodal

#endif // UNIMODAL_SAMPLER_HPP
