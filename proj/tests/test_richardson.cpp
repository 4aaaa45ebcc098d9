#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "kgrass/filling_poset.hpp"
#include "kgrass/grothendieck.hpp"
#include "kgrass/richardson.hpp"

using namespace kgrass;

namespace {

std::vector<Partition> all_partitions(int rows, int cols, int max_size = 64) {
    std::vector<Partition> out{Partition{}};
    std::vector<int> cur;
    int sum = 0;
    std::function<void(int)> rec = [&](int max_part) {
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = std::min(max_part, max_size - sum); p >= 1; --p) {
            cur.push_back(p);
            sum += p;
            out.emplace_back(cur);
            rec(p);
            sum -= p;
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

// Every maximal demolition order must reach the same basic quadruple.
void check_confluence(const RichardsonQuadruple& r, const RichardsonQuadruple& expect) {
    BasicCheck bc = is_basic(r);
    if (bc.basic) {
        CHECK(r == expect);
        return;
    }
    for (int row : bc.full_rows) check_confluence(demolish_row(r, row).after, expect);
    for (int col : bc.full_cols) check_confluence(demolish_column(r, col).after, expect);
}

} // namespace

TEST_CASE("is_basic examples") {
    auto b1 = is_basic({Partition{2, 2}, Partition{2, 1}, {3, 3}});
    CHECK_FALSE(b1.basic);
    CHECK(b1.full_rows == std::vector<int>{2}); // lambda_2 + mu_2 = 2 + 1 = 3

    auto b2 = is_basic({Partition{1}, Partition{1}, {2, 2}});
    CHECK(b2.basic);

    auto b3 = is_basic({Partition{2, 2}, Partition{2, 2}, {2, 2}});
    CHECK(b3.zero_product); // lambda and rotate(mu) tile and overlap the box
}

TEST_CASE("accessible word") {
    auto w0 = accessible_word(Partition{}, {3, 4});
    CHECK(w0 == std::vector<int>{1, 1, 1, 1});

    // Full-width rectangle: every column of lambda has r rows.
    auto wr = accessible_word(Partition{4, 4}, {5, 4});
    CHECK(wr == std::vector<int>{3, 3, 3, 3});

    // Forced top-row entries of ((2,2),(2,1),3x3): boxes (1,j) hold w_A(j).
    auto wa = accessible_word(Partition{2, 2}, {3, 3});
    auto fillings = enumerate_buch_tableaux(Partition{2, 2}, Partition{2, 1}, {3, 3});
    CHECK(!fillings.empty());
    for (const auto& t : fillings)
        for (int j = 1; j <= 2; ++j) CHECK(t.at(1, j) == ValueSet{wa[j - 1]});
}

TEST_CASE("row demolition of ((2,2),(2,1),3x3)") {
    RichardsonQuadruple r{Partition{2, 2}, Partition{2, 1}, {3, 3}};
    auto d = demolish_row(r, 2);
    CHECK(d.after == RichardsonQuadruple{Partition{2}, Partition{2}, {2, 3}});

    // Witness round trip on every filling.
    auto all = enumerate_buch_tableaux(r.lambda, r.mu, r.box);
    auto sub = enumerate_buch_tableaux(d.after.lambda, d.after.mu, d.after.box);
    CHECK(all.size() == sub.size());
    std::set<std::vector<std::vector<ValueSet>>> images;
    for (const auto& t : all) {
        auto f = d.witness.forward(t);
        CHECK(d.witness.backward(f) == t);
        images.insert(f.rows);
    }
    CHECK(images.size() == all.size());
    for (const auto& s : sub) CHECK(images.count(s.rows) == 1);
}

TEST_CASE("figure tydemo: two demolition paths to ((1),(1),2x2)") {
    RichardsonQuadruple r{Partition{2, 2}, Partition{2, 1}, {3, 3}};
    RichardsonQuadruple target{Partition{1}, Partition{1}, {2, 2}};

    // Row-first path.
    auto row_first = demolish_row(r, 2);
    CHECK(row_first.after == RichardsonQuadruple{Partition{2}, Partition{2}, {2, 3}});
    auto bc1 = is_basic(row_first.after);
    REQUIRE(bc1.full_cols.size() == 1);
    auto end1 = demolish_column(row_first.after, bc1.full_cols[0]);
    CHECK(end1.after == target);

    // Column-first path.
    auto bc0 = is_basic(r);
    REQUIRE(bc0.full_cols.size() == 1);
    auto col_first = demolish_column(r, bc0.full_cols[0]);
    auto bc2 = is_basic(col_first.after);
    REQUIRE(bc2.full_rows.size() == 1);
    auto end2 = demolish_row(col_first.after, bc2.full_rows[0]);
    CHECK(end2.after == target);

    check_confluence(r, target);

    auto bd = basic_demolition(r);
    CHECK(bd.basic == target);
    CHECK(bd.transcript.steps.size() == 2);
}

TEST_CASE("the worked example reduces to ((1),(1),2x2)") {
    RichardsonQuadruple r{Partition{4, 4, 2, 2, 1}, Partition{4, 3, 2, 1}, {5, 5}};
    auto bd = basic_demolition(r);
    CHECK(bd.basic == RichardsonQuadruple{Partition{1}, Partition{1}, {2, 2}});
    check_confluence(r, bd.basic);

    // Same endpoint with the roles exchanged.
    RichardsonQuadruple rs{Partition{4, 3, 2, 1}, Partition{4, 4, 2, 2, 1}, {5, 5}};
    CHECK(basic_demolition(rs).basic == RichardsonQuadruple{Partition{1}, Partition{1}, {2, 2}});
}

TEST_CASE("already-basic quadruple: empty transcript") {
    RichardsonQuadruple r{Partition{1}, Partition{1}, {2, 2}};
    auto bd = basic_demolition(r);
    CHECK(bd.basic == r);
    CHECK(bd.transcript.steps.empty());
}

TEST_CASE("column demolition agrees with the conjugate row route") {
    std::vector<RichardsonQuadruple> cases = {
        {Partition{2, 2}, Partition{2, 1}, {3, 3}},
        {Partition{2, 2}, Partition{2, 2}, {4, 3}},
        {Partition{3, 1}, Partition{2}, {3, 4}},
    };
    for (const auto& r : cases) {
        auto bc = is_basic(r);
        for (int c : bc.full_cols) {
            auto direct = demolish_column(r, c).after;
            RichardsonQuadruple conj{r.lambda.conjugate(), r.mu.conjugate(),
                                     {r.box.cols, r.box.rows}};
            auto via_rows = demolish_row(conj, c).after;
            CHECK(direct.lambda == via_rows.lambda.conjugate());
            CHECK(direct.mu == via_rows.mu.conjugate());
            CHECK(direct.box.rows == via_rows.box.cols);
            CHECK(direct.box.cols == via_rows.box.rows);
        }
    }
}

TEST_CASE("demolition transports posets and Moebius values") {
    std::vector<RichardsonQuadruple> cases = {
        {Partition{2, 2}, Partition{2, 1}, {3, 3}},
        {Partition{2, 2}, Partition{2, 2}, {4, 3}},
        {Partition{3, 3}, Partition{2, 2, 1, 1}, {6, 3}},
        {Partition{2, 1}, Partition{2, 2}, {4, 4}},
    };
    for (const auto& r : cases) {
        auto bd = basic_demolition(r);
        if (bd.zero_product || bd.transcript.steps.empty()) continue;
        auto all = enumerate_buch_tableaux(r.lambda, r.mu, r.box);
        if (all.empty()) continue;
        auto sub = enumerate_buch_tableaux(bd.basic.lambda, bd.basic.mu, bd.basic.box);
        REQUIRE(all.size() == sub.size());
        for (const auto& t : all) CHECK(bd.witness.backward(bd.witness.forward(t)) == t);

        auto p1 = ContentPoset::build(r.lambda, r.mu, r.box);
        auto p2 = ContentPoset::build(bd.basic.lambda, bd.basic.mu, bd.basic.box);
        REQUIRE(p1.vertices().size() == p2.vertices().size());
        auto m1 = mobius(p1);
        auto m2 = mobius(p2);
        // The forward map induces a vertex bijection; counts, covers and
        // Moebius values must transport along it.
        std::map<int, int> vmap;
        for (const auto& t : all) {
            int a = p1.find(content_of(t, false).counts);
            int b = p2.find(content_of(bd.witness.forward(t), false).counts);
            REQUIRE(a >= 0);
            REQUIRE(b >= 0);
            auto it = vmap.find(a);
            if (it != vmap.end())
                CHECK(it->second == b);
            else
                vmap[a] = b;
        }
        for (const auto& [a, b] : vmap) {
            CHECK(p1.vertices()[a].tableau_count == p2.vertices()[b].tableau_count);
            CHECK(m1.values[a] == m2.values[b]);
        }
        auto c1 = p1.covers();
        auto c2 = p2.covers();
        CHECK(c1.size() == c2.size());
        std::set<std::pair<int, int>> mapped;
        for (auto [lo, hi] : c1) mapped.insert({vmap[lo], vmap[hi]});
        for (auto e : c2) CHECK(mapped.count(e) == 1);
    }
}

TEST_CASE("demolition confluence over small boxes") {
    for (int k = 1; k <= 4; ++k) {
        for (int c = 1; c <= 4; ++c) {
            AmbientBox box{k, c};
            auto shapes = all_partitions(k, c, 6);
            for (const auto& lam : shapes) {
                for (const auto& mu : shapes) {
                    RichardsonQuadruple r{lam, mu, box};
                    auto bc = is_basic(r);
                    if (bc.zero_product || bc.basic) continue;
                    check_confluence(r, basic_demolition(r).basic);
                }
            }
        }
    }
}

TEST_CASE("forced-column fact is asserted during demolition") {
    RichardsonQuadruple r{Partition{2, 2}, Partition{2, 2}, {4, 3}};
    auto bc = is_basic(r);
    REQUIRE(!bc.full_cols.empty());
    auto d = demolish_column(r, bc.full_cols[0]);
    for (const auto& t : enumerate_buch_tableaux(r.lambda, r.mu, r.box))
        CHECK_NOTHROW(d.witness.forward(t));
}

TEST_CASE("multiplicity-freeness classifier examples") {
    auto v1 = is_multiplicity_free({Partition{3, 3, 3}, Partition{2, 2}, {8, 8}}, true);
    CHECK(v1.verdict);
    bool has_case1 = false;
    for (const auto& c : v1.cases)
        if (c.tag == StembridgeCase::C1) has_case1 = true;
    CHECK(has_case1);

    auto v2 = is_multiplicity_free({Partition{2, 1}, Partition{2, 2}, {8, 8}}, true);
    CHECK(v2.verdict);
    bool case3 = false, case4 = false;
    for (const auto& c : v2.cases) {
        if (c.tag == StembridgeCase::C3a || c.tag == StembridgeCase::C3b ||
            c.tag == StembridgeCase::C3c || c.tag == StembridgeCase::C3d)
            case3 = true;
        if (c.tag == StembridgeCase::C4a || c.tag == StembridgeCase::C4b) case4 = true;
    }
    CHECK(case3);
    CHECK(case4);

    auto v3 = is_multiplicity_free({Partition{2, 1}, Partition{2, 1}, {6, 6}}, true);
    CHECK_FALSE(v3.verdict);
}

TEST_CASE("classifier agrees with brute force on a small sweep") {
    for (int k = 2; k <= 4; ++k) {
        for (int c = 2; c <= 4; ++c) {
            AmbientBox box{k, c};
            auto shapes = all_partitions(k, c, 4);
            for (const auto& lam : shapes)
                for (const auto& mu : shapes)
                    CHECK_NOTHROW(is_multiplicity_free({lam, mu, box}, true));
        }
    }
}

TEST_CASE("K-multiplicity-freeness") {
    CHECK_FALSE(is_k_multiplicity_free({Partition{2, 1}, Partition{2, 2}, {8, 8}}, true));
    CHECK(is_k_multiplicity_free({Partition{2, 2}, Partition{3, 3}, {8, 8}}, true));
    CHECK(is_k_multiplicity_free({Partition{1}, Partition{3, 2, 1}, {8, 8}}, true));
    CHECK(is_k_multiplicity_free({Partition{}, Partition{3, 1}, {8, 8}}, true));

    // The figure witness: H-multiplicity-free but not K-multiplicity-free.
    auto v = is_multiplicity_free({Partition{2, 1}, Partition{2, 2}, {8, 8}});
    CHECK(v.verdict);
    CHECK_FALSE(is_k_multiplicity_free({Partition{2, 1}, Partition{2, 2}, {8, 8}}));
}
