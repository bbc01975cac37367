#include <cmath>

#include "doctest.h"
#include "unimodal/stats.hpp"

using namespace unimodal;

TEST_CASE("statistics of a hand-made sequence")
{
    const UnimodalSequence s{{1, 1, 2, 4}, 5, {3, 3, 1}, SequenceKind::unimodal};
    const auto st = compute_stats(s);
    CHECK(st.pk == 5);
    CHECK(st.size == 20);
    CHECK(st.rank == 1);
    CHECK(st.mult(Side::left, 1) == 2);
    CHECK(st.mult(Side::left, 3) == 0);
    CHECK(st.mult(Side::right, 3) == 2);
    CHECK(st.mult(Side::right, 99) == 0);
    CHECK(st.mult(Side::left, 0) == 0);
    CHECK(st.largest(Side::left, 1) == 4);
    CHECK(st.largest(Side::left, 4) == 1);
    CHECK(st.largest(Side::left, 5) == 0);
    CHECK(st.largest(Side::right, 2) == 3);
    CHECK(st.total_small(Side::left, 2) == 3);
    CHECK(st.total_small(Side::right, 3) == 3);
}

TEST_CASE("swapping exchanges the sides")
{
    const UnimodalSequence s{{1, 2, 2}, 6, {4}, SequenceKind::unimodal};
    const auto a = compute_stats(s);
    const auto b = compute_stats(s.swapped());
    CHECK(b.rank == -a.rank);
    CHECK(b.y_left == a.y_right);
    CHECK(b.mult_left == a.mult_right);
}

TEST_CASE("empty sides")
{
    const auto st = compute_stats({{}, 7, {}, SequenceKind::strongly_unimodal});
    CHECK(st.rank == 0);
    CHECK(st.size == 7);
    CHECK(st.largest(Side::right, 1) == 0);
    CHECK(st.total_small(Side::left, 3) == 0);
}

TEST_CASE("normalizations")
{
    const double c = 0.5;
    const std::int64_t n = 400; // c sqrt n = 10
    CHECK(normalize(10.0 * std::log(20.0), n, c, NormalizeMode::peak_shift) == doctest::Approx(0.0));
    CHECK(normalize(10.0 * std::log(20.0) + 15.0, n, c, NormalizeMode::peak_shift) == doctest::Approx(1.5));
    CHECK(normalize(4.0, n, c, NormalizeMode::small_part_scale, 3) == doctest::Approx(1.2));
    CHECK(normalize(10.0 * std::log(7.0), n, c, NormalizeMode::total_small_shift, 7) == doctest::Approx(0.0));
    CHECK(normalize(-5.0, n, c, NormalizeMode::rank_scale) == doctest::Approx(-0.5));
    CHECK_THROWS(normalize(1.0, 0, c, NormalizeMode::rank_scale));
    CHECK_THROWS(normalize(1.0, n, c, NormalizeMode::total_small_shift, 0));
}
