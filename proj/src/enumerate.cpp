#include "unimodal/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unimodal {

std::int64_t UnimodalSequence::size() const noexcept
{
    return peak + std::accumulate(left.begin(), left.end(), std::int64_t{0}) +
           std::accumulate(right.begin(), right.end(), std::int64_t{0});
}

bool UnimodalSequence::valid() const noexcept
{
    const bool strict = kind == SequenceKind::strongly_unimodal;
    auto ok = [strict](std::int64_t lo, std::int64_t hi) { return strict ? lo < hi : lo <= hi; };
    if (peak < 1) {
        return false;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] < 1 || !ok(left[i], i + 1 < left.size() ? left[i + 1] : peak)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (right[i] < 1 || !ok(right[i], i == 0 ? peak : right[i - 1])) {
            return false;
        }
    }
    return true;
}

UnimodalSequence UnimodalSequence::swapped() const
{
    return UnimodalSequence{{right.rbegin(), right.rend()}, peak, {left.rbegin(), left.rend()}, kind};
}

std::string encode(const UnimodalSequence &s)
{
    std::ostringstream os;
    auto run = [&os](const std::vector<std::int64_t> &parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            os << (i ? " " : "") << parts[i];
        }
    };
    run(s.left);
    os << '|' << s.peak << '|';
    run(s.right);
    return os.str();
}

UnimodalSequence decode(const std::string &text, SequenceKind kind)
{
    const auto first = text.find('|');
    const auto second = first == std::string::npos ? first : text.find('|', first + 1);
    if (second == std::string::npos) {
        throw std::invalid_argument("decode: expected `left|peak|right`, got '" + text + "'");
    }
    auto parse_run = [](const std::string &field) {
        std::vector<std::int64_t> parts;
        std::istringstream is(field);
        std::int64_t v;
        while (is >> v) {
            parts.push_back(v);
        }
        return parts;
    };
    UnimodalSequence s;
    s.kind = kind;
    s.left = parse_run(text.substr(0, first));
    s.peak = std::stoll(text.substr(first + 1, second - first - 1));
    s.right = parse_run(text.substr(second + 1));
    if (!s.valid()) {
        throw std::invalid_argument("decode: '" + text + "' is not a valid sequence of this kind");
    }
    return s;
}

namespace {

// Partitions of `total` into parts <= cap (distinct parts when `distinct`),
// each listed in nonincreasing order.
void partitions_into(std::int64_t total, std::int64_t cap, bool distinct, std::vector<std::int64_t> &prefix,
                     std::vector<std::vector<std::int64_t>> &out)
{
    if (total == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t part = std::min(total, cap); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(total - part, distinct ? part - 1 : part, distinct, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<std::int64_t>> partitions_into(std::int64_t total, std::int64_t cap, bool distinct)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;
    partitions_into(total, cap, distinct, prefix, out);
    return out;
}

} // namespace

std::vector<UnimodalSequence> enumerate_all(std::int64_t n, SequenceKind kind)
{
    const bool strict = kind == SequenceKind::strongly_unimodal;
    const std::int64_t guard = strict ? enumerate_guard_strict : enumerate_guard_unimodal;
    if (n < 1 || n > guard) {
        throw std::out_of_range("enumerate_all: n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(guard) + "]");
    }
    std::vector<UnimodalSequence> out;
    for (std::int64_t peak = 1; peak <= n; ++peak) {
        const std::int64_t rest = n - peak;
        const std::int64_t cap = strict ? peak - 1 : peak;
        for (std::int64_t a = 0; a <= rest; ++a) {
            const auto lefts = partitions_into(a, cap, strict);
            if (lefts.empty()) {
                continue;
            }
            const auto rights = partitions_into(rest - a, cap, strict);
            for (const auto &l : lefts) {
                for (const auto &r : rights) {
                    out.push_back(UnimodalSequence{{l.rbegin(), l.rend()}, peak, r, kind});
                }
            }
        }
    }
    return out;
}

BigInt count_u_m(std::int64_t n, std::int64_t m)
{
    if (m < 1 || m > n) {
        return 0;
    }
    const auto order = static_cast<std::size_t>(n - m);
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::size_t j = 1; j <= std::min<std::size_t>(static_cast<std::size_t>(m), order); ++j) {
        s.div_one_minus(j, 2);
    }
    return s[order];
}

BigInt count_ustar_m(std::int64_t n, std::int64_t m)
{
    if (m < 0 || m > n - 1) {
        return 0;
    }
    const auto order = static_cast<std::size_t>(n - m - 1);
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::size_t j = 1; j <= std::min<std::size_t>(static_cast<std::size_t>(m), order); ++j) {
        s.mul_binomial(j, +1, 2);
    }
    return s[order];
}

namespace {

void check_budget(std::int64_t n, const char *what)
{
    if (n < 1 || n > count_table_budget) {
        throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(count_table_budget) + "]");
    }
}

} // namespace

std::vector<BigInt> count_table_u_m(std::int64_t n)
{
    check_budget(n, "count_table_u_m");
    const auto order = static_cast<std::size_t>(n - 1);
    std::vector<BigInt> table(static_cast<std::size_t>(n));
    TruncatedSeries inv = TruncatedSeries::one(order); // 1/(q)_m^2
    for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m) {
        if (m <= order) {
            inv.div_one_minus(m, 2);
        }
        table[m - 1] = inv[static_cast<std::size_t>(n) - m];
    }
    return table;
}

std::vector<BigInt> count_table_ustar_m(std::int64_t n)
{
    check_budget(n, "count_table_ustar_m");
    const auto order = static_cast<std::size_t>(n - 1);
    std::vector<BigInt> table(static_cast<std::size_t>(n));
    TruncatedSeries prod = TruncatedSeries::one(order); // (-q)_m^2
    for (std::size_t m = 0; m < static_cast<std::size_t>(n); ++m) {
        if (m >= 1 && m <= order) {
            prod.mul_binomial(m, +1, 2);
        }
        table[m] = prod[order - m];
    }
    return table;
}

BigInt count_p(std::int64_t n)
{
    if (n < 0) {
        return 0;
    }
    return partition_series(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

void write_count_table_csv(std::ostream &os, std::int64_t n, SequenceKind kind)
{
    os << "n,m,count\n";
    if (kind == SequenceKind::unimodal) {
        const auto table = count_table_u_m(n);
        for (std::size_t i = 0; i < table.size(); ++i) {
            os << n << ',' << i + 1 << ',' << table[i].get_str() << '\n';
        }
    } else {
        const auto table = count_table_ustar_m(n);
        for (std::size_t i = 0; i < table.size(); ++i) {
            os << n << ',' << i << ',' << table[i].get_str() << '\n';
        }
    }
}

} // namespace unimodal
