// Seeded experiments comparing sampled or exact laws with their limits.
//
// A report is a CSV document: `#` lines echo the configuration, then one
// row per sample (or per lattice point for exact experiments), then
// summary rows `summary,target,metric,value,tolerance,verdict`.

#ifndef UNIMODAL_EXPERIMENTS_HPP
#define UNIMODAL_EXPERIMENTS_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimodal/enumerate.hpp"
#include "unimodal/sampler.hpp"

namespace unimodal {

struct ExperimentConfig {
    std::string name;
    std::int64_t n = 2500;
    std::size_t samples = 20000;
    std::uint64_t seed = 1;
    bool strict = false;
    std::int64_t k = 1;
    std::int64_t t = 1;
    std::int64_t kn = 3;
    unsigned workers = 1;

    SequenceKind kind() const noexcept { return strict ? SequenceKind::strongly_unimodal : SequenceKind::unimodal; }
};

/// Names accepted by run_experiment.
const std::vector<std::string> &experiment_names();

/// Thrown for an unknown experiment or a parameter outside its guard.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError naming the violated condition.
void validate(const ExperimentConfig &config);

struct SampleSet {
    ModelParams params;
    std::vector<UnimodalSequence> sequences;
    std::uint64_t trials = 0;
};

/// Exact-size samples for config.n, config.kind(), split over config.workers.
SampleSet draw_samples(const ExperimentConfig &config);

struct SummaryRow {
    std::string target;
    std::string metric;
    double value = 0.0;
    double tolerance = 0.0; ///< NaN for logged-only rows
    bool pass = true;
    bool informational = false;
};

struct ExperimentReport {
    std::vector<std::string> header; ///< without the leading "# "
    std::string columns;
    std::vector<std::string> rows;
    std::vector<SummaryRow> summary;

    bool all_pass() const;
    const SummaryRow &find(const std::string &target, const std::string &metric) const;
};

/// Evaluates a sampled experiment on an existing sample set. The set must
/// match config.n and config.kind().
ExperimentReport evaluate(const ExperimentConfig &config, const SampleSet &set);

/// Draws what the experiment needs (nothing for exact experiments) and evaluates it.
ExperimentReport run_experiment(const ExperimentConfig &config);

void write_report(std::ostream &os, const ExperimentReport &report);
std::string render_report(const ExperimentReport &report);

/// Boxes used by the large-parts and total-small-parts summaries.
struct Box3 {
    double v0, v_left, v_right;
};
struct Box2 {
    double v_left, v_right;
};
const std::vector<Box3> &large_parts_boxes();
const std::vector<Box2> &total_small_boxes();

} // namespace unimodal

#endif // UNIMODAL_EXPERIMENTS_HPP
