// Saddle-point quantities, local peak law and global count asymptotics.
// Everything that can overflow a double is returned on the log scale.

#ifndef UNIMODAL_ASYMPTOTICS_HPP
#define UNIMODAL_ASYMPTOTICS_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "unimodal/enumerate.hpp"
#include "unimodal/series.hpp"

namespace unimodal {

/// f(0), f'(0), f''(0) of the Cauchy integrand for u_m(n), or the strict
/// analogues for u*_m(n), evaluated at q = exp(-1/(c sqrt n)).
struct SaddleData {
    double f0 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    bool strict = false;
};

/// Unimodal: 1 <= m <= n. Strict: 0 <= m <= n-1 (peak m+1), m = 0 has no
/// variance and is rejected. Throws std::invalid_argument otherwise.
SaddleData saddle_terms(std::int64_t n, std::int64_t m, SequenceKind kind);

/// log of e^{f(0)} / sqrt(2 pi f''(0)).
double u_m_saddle(std::int64_t n, std::int64_t m, SequenceKind kind);

/// e^{-x-e^{-x}} / (c sqrt n).
double local_pk_probability(std::int64_t n, double x, SequenceKind kind);

/// 1/(2 3^{1/4} n^{3/4}) or 1/(2 6^{1/4} n^{3/4}).
double acceptance_rate_prediction(std::int64_t n, SequenceKind kind);

struct ProductCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// prod_{k > A sqrt n (v + log(A sqrt n))} 1/(1 + e^{-k/(A sqrt n)}) against
/// e^{-e^{-v}}. Throws std::invalid_argument for v < -log(n)/8.
ProductCheck large_parts_product_check(std::int64_t n, double v);

/// log u(n) ~ 2 pi sqrt(n/3) - log(8 3^{3/4} n^{5/4}), or
/// log u*(n) ~ pi sqrt(2n/3) - log(8 6^{1/4} n^{3/4}).
double global_count_asymptotics(std::int64_t n, SequenceKind kind);

/// Natural log of a positive big integer. Throws std::domain_error otherwise.
double log_bigint(const BigInt &value);

/// Exact law of the peak at size n from the count tables.
///
/// probs[i] is P(PK = first_peak + i); for the strict kind the peak is m+1.
struct ExactPeakLaw {
    std::int64_t n = 0;
    SequenceKind kind = SequenceKind::unimodal;
    std::int64_t first_peak = 1;
    std::vector<double> probs;
    double log_total = 0.0; ///< log u(n) or log u*(n)

    double mean() const;
    std::int64_t mode() const;
};

ExactPeakLaw exact_peak_law(std::int64_t n, SequenceKind kind);

/// local_pk_probability on the peak lattice of `law`, renormalized to sum 1.
std::vector<double> lattice_local_law(const ExactPeakLaw &law);

/// Total variation between the exact peak law and lattice_local_law.
double peak_local_tv(const ExactPeakLaw &law);

/// c sqrt n log(2 c sqrt n) + c gamma sqrt n.
double peak_mean_prediction(std::int64_t n, SequenceKind kind);

struct ConvergenceRow {
    std::int64_t n = 0;
    std::int64_t m = 0;
    double exact_log = 0.0;
    double approx_log = 0.0;
    double ratio = 0.0; ///< exp(approx_log - exact_log)
};

ConvergenceRow saddle_convergence_row(std::int64_t n, std::int64_t m, SequenceKind kind);

/// Header `n,m,exact_log,approx_log,ratio` followed by one line per row.
void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows);

} // namespace unimodal

#endif // UNIMODAL_ASYMPTOTICS_HPP
