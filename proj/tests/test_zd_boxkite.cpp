#include "doctest.h"
#include "zdkit/zd_boxkite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <set>

using namespace zdkit;

TEST_CASE("sedenion assessor census and membership") {
    const auto as = enumerate_assessors(4);
    CHECK(as.size() == 42);
    const auto has = [&](UnitIndex l, UnitIndex u) {
        return std::any_of(as.begin(), as.end(),
                           [&](const Assessor& a) { return a.l == l && a.u == u; });
    };
    CHECK(has(3, 10));
    CHECK(!has(3, 11));  // 11 = G ^ 3 is excluded
    CHECK_THROWS_AS(enumerate_assessors(3), std::domain_error);
}

TEST_CASE("pathion assessors: all index-legal pairs qualify") {
    CHECK(enumerate_assessors(5).size() == 210);
}

TEST_CASE("mutual zero-division basics") {
    const Assessor a(4, 3, 10), c(4, 5, 12), f(4, 2, 11);
    SUBCASE("zigzag edge carries opposite-slope currents") {
        CHECK(mutually_zero_divide({a, +1}, {c, -1}));
        CHECK(mutually_zero_divide({a, -1}, {c, +1}));
        CHECK(!mutually_zero_divide({a, +1}, {c, +1}));
    }
    SUBCASE("a diagonal never zero-divides itself or its partner") {
        CHECK(!mutually_zero_divide({a, +1}, {a, +1}));
        CHECK(!mutually_zero_divide({a, +1}, {a, -1}));
    }
    SUBCASE("strut opposites never mutually zero-divide") {
        for (int s1 : {+1, -1})
            for (int s2 : {+1, -1}) CHECK(!mutually_zero_divide({a, s1}, {f, s2}));
    }
}

TEST_CASE("the seven sedenion kites and their zigzags") {
    // zigzags frozen from the brute-force sweep; all Type I
    const std::pair<UnitIndex, Trip> want[] = {
        {1, {3, 6, 5}}, {2, {1, 7, 6}}, {3, {2, 5, 7}}, {4, {1, 2, 3}},
        {5, {2, 4, 6}}, {6, {3, 4, 7}}, {7, {1, 4, 5}},
    };
    for (const auto& [s, zz] : want) {
        const auto ks = enumerate_box_kites(s, 4);
        REQUIRE(ks.size() == 1);
        CHECK(ks[0].kind == KiteKind::TypeI);
        CHECK(ks[0].zigzag() == zz);
        CHECK(ks[0].x == 8 + s);
    }
}

TEST_CASE("build_box_kite normalises letters to the true zigzag") {
    // seeding with a trefoil of the s=1 kite still yields the canonical kite
    const BoxKite via_trefoil = build_box_kite(1, Trip(3, 4, 7), 4);
    const BoxKite via_zigzag = build_box_kite(1, Trip(3, 6, 5), 4);
    CHECK(via_trefoil.l == via_zigzag.l);
    CHECK(via_trefoil.kind == KiteKind::TypeI);
    CHECK(via_zigzag.l == std::array<UnitIndex, 6>{3, 6, 5, 4, 7, 2});
}

TEST_CASE("build_box_kite rejects strut collisions") {
    CHECK_THROWS_AS(build_box_kite(3, Trip(1, 2, 3), 4), std::domain_error);
    CHECK_THROWS_AS(build_box_kite(0, Trip(3, 6, 5), 4), std::invalid_argument);
    CHECK_THROWS_AS(build_box_kite(8, Trip(3, 6, 5), 4), std::invalid_argument);
}

TEST_CASE("edge sign census: six minus, six plus on every proper kite") {
    for (UnitIndex s = 1; s < 8; ++s) {
        const BoxKite k = enumerate_box_kites(s, 4).at(0);
        int minus = 0, plus = 0;
        for (char c : k.edge_signs) (c == '-' ? minus : plus)++;
        CHECK(minus == 6);
        CHECK(plus == 6);
        // zigzag and vent negative
        CHECK(k.edge_sign(0, 1) == '-');
        CHECK(k.edge_sign(0, 2) == '-');
        CHECK(k.edge_sign(1, 2) == '-');
        CHECK(k.edge_sign(3, 4) == '-');
        CHECK(k.edge_sign(3, 5) == '-');
        CHECK(k.edge_sign(4, 5) == '-');
    }
}

TEST_CASE("every assessor of a proper kite lies in exactly two sails") {
    const BoxKite k = enumerate_box_kites(1, 4).at(0);
    const int sails[4][3] = {{0, 1, 2}, {0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    for (int v = 0; v < kVertexCount; ++v) {
        int member = 0;
        for (const auto& sail : sails)
            member += std::count(std::begin(sail), std::end(sail), v);
        CHECK(member == 2);
    }
}

TEST_CASE("pathion censuses per strut constant") {
    int total = 0, t2_total = 0;
    for (UnitIndex s = 1; s < 16; ++s) {
        int t1 = 0, t2 = 0, hid = 0;
        for (const BoxKite& k : enumerate_box_kites(s, 5)) {
            ++total;
            if (k.kind == KiteKind::TypeI) ++t1;
            if (k.kind == KiteKind::TypeII) ++t2;
            if (k.kind == KiteKind::Hidden) ++hid;
        }
        t2_total += t2;
        if (s < 8) {
            CHECK(t1 == 4);
            CHECK(t2 == 3);
            CHECK(hid == 0);
        } else if (s == 8) {
            CHECK(t1 == 7);
        } else {
            CHECK(t1 == 3);
            CHECK(hid == 4);
        }
    }
    CHECK(total == 105);
    CHECK(t2_total == 21);
}

TEST_CASE("pathion s=8 kites inherit sedenion zigzags") {
    std::set<Trip> zigzags;
    for (const BoxKite& k : enumerate_box_kites(8, 5)) {
        CHECK(k.kind == KiteKind::TypeI);
        zigzags.insert(k.zigzag().canonical());
    }
    std::set<Trip> sedenion;
    for (UnitIndex s = 1; s < 8; ++s)
        sedenion.insert(enumerate_box_kites(s, 4).at(0).zigzag().canonical());
    CHECK(zigzags == sedenion);
}

TEST_CASE("Fig 4 Type II kite: s=1, zigzag (3,13,14)") {
    bool found = false;
    for (const BoxKite& k : enumerate_box_kites(1, 5)) {
        if (k.zigzag().canonical() == Trip(3, 13, 14)) {
            found = true;
            CHECK(k.kind == KiteKind::TypeII);
            CHECK(k.l == std::array<UnitIndex, 6>{3, 13, 14, 15, 12, 2});
        }
    }
    CHECK(found);
}

TEST_CASE("emanate returns the third sail assessor") {
    const BoxKite k = enumerate_box_kites(1, 4).at(0);
    SUBCASE("zigzag edge") {
        const Assessor third = emanate(k.assessor(0), k.assessor(1));
        CHECK(third == k.assessor(2));  // (3,10),(6,15) -> (5,12)
    }
    SUBCASE("trefoil edge") {
        const Assessor third = emanate(k.assessor(0), k.assessor(3));
        CHECK(third == k.assessor(4));  // (3,10),(4,13) -> (7,14)
    }
    SUBCASE("strut opposites never emanate") {
        CHECK_THROWS_AS(emanate(k.assessor(0), k.assessor(5)), std::domain_error);
    }
}

TEST_CASE("classify matches construction and refuses bad kinds") {
    const BoxKite k = enumerate_box_kites(1, 4).at(0);
    CHECK(classify(k) == KiteKind::TypeI);
    for (const BoxKite& p : enumerate_box_kites(9, 5)) CHECK(classify(p) == p.kind);
}

TEST_CASE("Roundabout: every hexad carries currents on all edges or none") {
    for (auto [s_max, n] : {std::pair<UnitIndex, int>{8, 4}, {16, 5}}) {
        for (UnitIndex s = 1; s < s_max; ++s) {
            for (const BoxKite& k : enumerate_box_kites(s, n)) {
                const int live = static_cast<int>(
                    std::count_if(k.edge_signs.begin(), k.edge_signs.end(),
                                  [](char c) { return c != '0'; }));
                CHECK((live == 0 || live == 12));
                CHECK((live == 0) == (k.kind == KiteKind::Hidden));
            }
        }
    }
}

TEST_CASE("zigzag uniqueness: exactly one all-negative sail per proper kite") {
    const int sails[4][3] = {{0, 1, 2}, {0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
    for (UnitIndex s = 1; s < 16; ++s) {
        for (const BoxKite& k : enumerate_box_kites(s, 5)) {
            if (k.kind == KiteKind::Hidden) continue;
            int all_neg = 0;
            for (const auto& sail : sails) {
                const bool neg = k.edge_sign(sail[0], sail[1]) == '-' &&
                                 k.edge_sign(sail[1], sail[2]) == '-' &&
                                 k.edge_sign(sail[0], sail[2]) == '-';
                all_neg += neg;
            }
            CHECK(all_neg == 1);
            // and it is the (A,B,C) triangle by construction
            CHECK(k.edge_sign(0, 1) == '-');
            CHECK(k.edge_sign(0, 2) == '-');
            CHECK(k.edge_sign(1, 2) == '-');
        }
    }
}

TEST_CASE("zigzag trip-sync: the four quaternion copies flow together") {
    // (a,b,c), (a,B,C), (A,b,C), (A,B,c) all CPO in every proper kite
    auto check_kite = [](const BoxKite& k) {
        const AlgebraContext& ctx = AlgebraContext::get(k.n);
        const UnitIndex a = k.l[0], b = k.l[1], c = k.l[2];
        const UnitIndex A = k.u_of(0), B = k.u_of(1), C = k.u_of(2);
        const UnitIndex copies[4][3] = {{a, b, c}, {a, B, C}, {A, b, C}, {A, B, c}};
        for (const auto& t : copies) {
            auto [idx, sg] = ctx.unit_product(t[0], t[1]);
            CHECK(idx == t[2]);
            CHECK(sg == +1);
        }
    };
    for (UnitIndex s = 1; s < 8; ++s) check_kite(enumerate_box_kites(s, 4).at(0));
    for (UnitIndex s = 1; s < 16; ++s)
        for (const BoxKite& k : enumerate_box_kites(s, 5))
            if (k.kind != KiteKind::Hidden) check_kite(k);
}
