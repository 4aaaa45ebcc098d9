#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "kgrass/partition.hpp"

using namespace kgrass;

namespace {

// All partitions fitting in rows x cols, by direct recursion.
std::vector<Partition> all_partitions(int rows, int cols) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_part) {
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = max_part; p >= 1; --p) {
            cur.push_back(p);
            out.emplace_back(cur);
            rec(p);
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

// Brute-force shape check: delete each single row/column, test rectangularity.
bool brute_is_near_rect_row(const Partition& p, int row) {
    std::vector<int> parts;
    for (int i = 1; i <= p.length(); ++i)
        if (i != row) parts.push_back(p.part(i));
    try {
        return is_rectangle(Partition(parts));
    } catch (const NonPartitionResult&) {
        return false;
    }
}

bool brute_is_near_rect_col(const Partition& p, int col) {
    std::vector<int> parts;
    for (int v : p.parts()) parts.push_back(v >= col ? v - 1 : v);
    std::sort(parts.rbegin(), parts.rend());
    return is_rectangle(Partition(parts));
}

} // namespace

TEST_CASE("conjugate examples and involution") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    for (const auto& p : all_partitions(8, 8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("fits_in_box") {
    CHECK(fits_in_box(Partition{3, 3, 1, 1}, {4, 3}));
    CHECK_FALSE(fits_in_box(Partition{4, 2}, {4, 3}));
    CHECK(fits_in_box(Partition{}, {1, 1}));
    for (const auto& p : all_partitions(5, 5))
        for (int k = 1; k <= 5; ++k)
            for (int c = 1; c <= 5; ++c)
                CHECK(fits_in_box(p, {k, c}) == fits_in_box(p.conjugate(), {c, k}));
}

TEST_CASE("containment") {
    CHECK(Partition{2, 1}.contains(Partition{1, 1}));
    CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), NonPartitionResult);
    CHECK_THROWS_AS(Partition({2, 0, 1}), NonPartitionResult);
}

TEST_CASE("classify_shape examples") {
    CHECK(classify_shape(Partition{}).kind == ShapeClass::Kind::Empty);
    CHECK(is_rectangle(Partition{}));

    auto r = classify_shape(Partition{3, 3, 3});
    CHECK(r.kind == ShapeClass::Kind::Rectangle);
    CHECK(r.k_line == 3);

    auto fh = classify_shape(Partition{4, 4, 3});
    CHECK(fh.kind == ShapeClass::Kind::FatHook);
    CHECK(fh.near_rectangle.count(NearRect::Bottom) == 1);
    CHECK(fh.near_rectangle.count(NearRect::Right) == 1); // (4,4,3) minus col 4 = (3,3,3)
    CHECK(fh.near_rectangle.count(NearRect::Top) == 0);

    auto right = classify_shape(Partition{5, 5, 4, 4});
    CHECK(right.kind == ShapeClass::Kind::FatHook);
    CHECK(right.near_rectangle == std::set<NearRect>{NearRect::Right});

    auto multi = classify_shape(Partition{2, 1});
    CHECK(multi.near_rectangle ==
          std::set<NearRect>{NearRect::Left, NearRect::Right, NearRect::Top, NearRect::Bottom});

    CHECK(classify_shape(Partition{3, 2, 1}).kind == ShapeClass::Kind::Generic);
}

TEST_CASE("classify_shape agrees with brute force on an 8x8 box") {
    for (const auto& p : all_partitions(8, 8)) {
        auto sc = classify_shape(p);
        if (sc.kind != ShapeClass::Kind::FatHook) continue;
        bool top = brute_is_near_rect_row(p, 1);
        bool bottom = brute_is_near_rect_row(p, p.length());
        bool left = brute_is_near_rect_col(p, 1);
        bool right = brute_is_near_rect_col(p, p.first());
        CHECK(sc.near_rectangle.count(NearRect::Top) == (top ? 1u : 0u));
        CHECK(sc.near_rectangle.count(NearRect::Bottom) == (bottom ? 1u : 0u));
        CHECK(sc.near_rectangle.count(NearRect::Left) == (left ? 1u : 0u));
        CHECK(sc.near_rectangle.count(NearRect::Right) == (right ? 1u : 0u));
        // Interior deletions of a fat hook never beat the boundary ones.
        for (int row = 2; row < p.length(); ++row)
            if (brute_is_near_rect_row(p, row))
                CHECK((brute_is_near_rect_row(p, 1) || brute_is_near_rect_row(p, p.length())));
    }
}

TEST_CASE("line rectangles") {
    CHECK(is_line_rectangle(Partition{5, 5}, 2));
    CHECK(is_line_rectangle(Partition{2, 2, 2}, 2));
    CHECK_FALSE(is_line_rectangle(Partition{3, 3, 3}, 2));
    CHECK(classify_shape(Partition{3, 3, 3}).k_line == 3); // square reports once
    CHECK(is_right_near_rectangle(Partition{2, 1}));
    CHECK_FALSE(is_right_near_rectangle(Partition{3, 1}));
}

TEST_CASE("content_sum") {
    CHECK(content_sum(Partition{2, 2}, Partition{1, 1, 1, 1}) == Partition{3, 3, 1, 1});
    CHECK(content_sum(Partition{}, Partition{2, 1}) == Partition{2, 1});
    CHECK_THROWS_AS(content_sum(std::vector<int>{1}, std::vector<int>{0, 2}),
                    NonPartitionResult);
}
