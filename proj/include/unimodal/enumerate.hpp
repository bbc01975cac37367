// Exact counting and exhaustive enumeration of unimodal sequences.

#ifndef UNIMODAL_ENUMERATE_HPP
#define UNIMODAL_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "unimodal/series.hpp"

namespace unimodal {

enum class SequenceKind {
    unimodal,          ///< weak inequalities, designated peak
    strongly_unimodal, ///< all inequalities strict
};

/// left_1 <= ... <= left_r <= peak >= right_1 >= ... >= right_s.
///
/// `right` is stored in reading order, so right.front() is adjacent to the
/// peak. In the strict kind every inequality is strict.
struct UnimodalSequence {
    std::vector<std::int64_t> left;
    std::int64_t peak = 0;
    std::vector<std::int64_t> right;
    SequenceKind kind = SequenceKind::unimodal;

    std::int64_t size() const noexcept;
    /// Checks the ordering invariants for `kind` and size >= 1.
    bool valid() const noexcept;
    /// Reverses the reading direction: left and right runs trade places.
    UnimodalSequence swapped() const;

    friend bool operator==(const UnimodalSequence &, const UnimodalSequence &) = default;
    friend auto operator<=>(const UnimodalSequence &, const UnimodalSequence &) = default;
};

/// Text form `l1 l2 ...|peak|r1 r2 ...` (runs may be empty).
std::string encode(const UnimodalSequence &s);
UnimodalSequence decode(const std::string &text, SequenceKind kind);

inline constexpr std::int64_t enumerate_guard_unimodal = 22;
inline constexpr std::int64_t enumerate_guard_strict = 30;
inline constexpr std::int64_t count_table_budget = 3000;

/// Every sequence of size n, without duplicates. Throws std::out_of_range
/// above the guard (22 for unimodal, 30 for strict) and for n < 1.
std::vector<UnimodalSequence> enumerate_all(std::int64_t n, SequenceKind kind);

/// u_m(n): sequences of size n with peak m; 0 outside 1 <= m <= n.
BigInt count_u_m(std::int64_t n, std::int64_t m);

/// u*_m(n): strict sequences of size n with peak m+1; 0 outside 0 <= m <= n-1.
BigInt count_ustar_m(std::int64_t n, std::int64_t m);

/// u_m(n) for m = 1..n; element i holds m = i+1. Throws std::out_of_range
/// for n outside [1, count_table_budget].
std::vector<BigInt> count_table_u_m(std::int64_t n);

/// u*_m(n) for m = 0..n-1 (peak m+1); element i holds m = i.
std::vector<BigInt> count_table_ustar_m(std::int64_t n);

/// p(n), with p(0) = 1 and p(n) = 0 for n < 0.
BigInt count_p(std::int64_t n);

/// Writes `n,m,count` rows; m follows the table's own indexing.
void write_count_table_csv(std::ostream &os, std::int64_t n, SequenceKind kind);

} // namespace unimodal

#endif // UNIMODAL_ENUMERATE_HPP
