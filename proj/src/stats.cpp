#include "unimodal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace unimodal {

std::int64_t SequenceStats::mult(Side side, std::int64_t k) const noexcept
{
    const auto &m = side == Side::left ? mult_left : mult_right;
    if (k < 1 || static_cast<std::size_t>(k) >= m.size()) {
        return 0;
    }
    return m[static_cast<std::size_t>(k)];
}

std::int64_t SequenceStats::largest(Side side, std::size_t t) const noexcept
{
    const auto &y = side == Side::left ? y_left : y_right;
    return t >= 1 && t <= y.size() ? y[t - 1] : 0;
}

std::int64_t SequenceStats::total_small(Side side, std::int64_t kn) const noexcept
{
    std::int64_t total = 0;
    for (std::int64_t k = 1; k <= kn; ++k) {
        total += mult(side, k);
    }
    return total;
}

SequenceStats compute_stats(const UnimodalSequence &s)
{
    SequenceStats st;
    st.pk = s.peak;
    const auto width = static_cast<std::size_t>(s.peak) + 1;
    st.mult_left.assign(width, 0);
    st.mult_right.assign(width, 0);
    for (auto part : s.left) {
        ++st.mult_left.at(static_cast<std::size_t>(part));
    }
    for (auto part : s.right) {
        ++st.mult_right.at(static_cast<std::size_t>(part));
    }
    st.y_left.assign(s.left.begin(), s.left.end());
    st.y_right.assign(s.right.begin(), s.right.end());
    std::sort(st.y_left.begin(), st.y_left.end(), std::greater<>());
    std::sort(st.y_right.begin(), st.y_right.end(), std::greater<>());

    st.rank = static_cast<std::int64_t>(s.left.size()) - static_cast<std::int64_t>(s.right.size());
    st.size = st.pk;
    for (std::size_t k = 1; k < width; ++k) {
        st.size += static_cast<std::int64_t>(k) * (st.mult_left[k] + st.mult_right[k]);
    }
    return st;
}

double normalize(double value, std::int64_t n, double constant, NormalizeMode mode, std::int64_t param)
{
    if (n < 1) {
        throw std::invalid_argument("normalize: n must be positive");
    }
    const double scale = constant * std::sqrt(static_cast<double>(n));
    switch (mode) {
    case NormalizeMode::peak_shift:
        return (value - scale * std::log(2.0 * scale)) / scale;
    case NormalizeMode::small_part_scale:
        return static_cast<double>(param) * value / scale;
    case NormalizeMode::total_small_shift:
        if (param < 1) {
            throw std::invalid_argument("normalize: total_small_shift needs kn >= 1");
        }
        return (value - scale * std::log(static_cast<double>(param))) / scale;
    case NormalizeMode::rank_scale:
        return value / scale;
    }
    throw std::invalid_argument("normalize: unknown mode");
}

} // namespace unimodal
