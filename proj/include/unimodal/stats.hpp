// Random variables on unimodal sequences: peak, part multiplicities on each
// side, order statistics of the parts, rank and size.

#ifndef UNIMODAL_STATS_HPP
#define UNIMODAL_STATS_HPP

#include <cstdint>
#include <vector>

#include "unimodal/enumerate.hpp"

namespace unimodal {

enum class Side { left, right };

struct SequenceStats {
    std::int64_t pk = 0;
    /// mult_left[k] = number of parts equal to k left of the peak; index 0 unused.
    std::vector<std::int64_t> mult_left;
    std::vector<std::int64_t> mult_right;
    /// Parts on each side sorted nonincreasingly; y_left[t-1] is Y_t.
    std::vector<std::int64_t> y_left;
    std::vector<std::int64_t> y_right;
    std::int64_t rank = 0;
    std::int64_t size = 0;

    /// X_k on a side; 0 for k beyond the recorded range.
    std::int64_t mult(Side side, std::int64_t k) const noexcept;
    /// Y_t on a side (t >= 1); 0 when the side has fewer than t parts.
    std::int64_t largest(Side side, std::size_t t) const noexcept;
    /// sum_{k <= kn} X_k on a side.
    std::int64_t total_small(Side side, std::int64_t kn) const noexcept;
};

SequenceStats compute_stats(const UnimodalSequence &s);

/// Affine normalizations appearing in the limit theorems. `scale` is the
/// constant c (B for unimodal, A for strict) and sqrt(n) multiplies it.
enum class NormalizeMode {
    peak_shift,        ///< (v - c sqrt n log(2 c sqrt n)) / (c sqrt n)
    small_part_scale,  ///< k v / (c sqrt n)
    total_small_shift, ///< (v - c sqrt n log kn) / (c sqrt n)
    rank_scale,        ///< v / (c sqrt n)
};

/// `param` is k for small_part_scale and kn for total_small_shift, ignored otherwise.
double normalize(double value, std::int64_t n, double constant, NormalizeMode mode, std::int64_t param = 0);

} // namespace unimodal

#endif // UNIMODAL_STATS_HPP
