#include "doctest.h"
#include "zdkit/fano.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <random>

using namespace zdkit;

namespace {
BoxKite sedenion_kite(UnitIndex s) { return enumerate_box_kites(s, 4).at(0); }

BoxKite fig4_type2() {
    for (const BoxKite& k : enumerate_box_kites(1, 5))
        if (k.kind == KiteKind::TypeII && k.zigzag().canonical() == Trip(3, 13, 14)) return k;
    throw std::logic_error("fig4 kite not found");
}
}  // namespace

TEST_CASE("standard presentations and reversal counts") {
    CHECK(reversed_count(from_box_kite(sedenion_kite(1))) == 0);
    CHECK(reversed_count(from_box_kite(sedenion_kite(4))) == 0);
    const FanoPresentation t2 = from_box_kite(fig4_type2());
    CHECK(reversed_count(t2) == 2);
    CHECK(!t2.preserved(FanoLine::StrutB));
    CHECK(!t2.preserved(FanoLine::StrutC));
    CHECK(t2.preserved(FanoLine::Circle));
}

TEST_CASE("PL fixes one line and reverses the other six") {
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    const FanoPresentation q = pl(p, FanoLine::Circle);
    CHECK(reversed_count(q) == 6);
    CHECK(q.preserved(FanoLine::Circle));
    CHECK(q.label(FanoNode::S) == 9);
    CHECK(q.label(FanoNode::A) == 3);   // circle nodes unloaded
    CHECK(q.label(FanoNode::D) == 12);  // off-line nodes gain g

    SUBCASE("a second complementary loading restores Type I") {
        const FanoPresentation r = pl(q, FanoLine::Circle);
        CHECK(reversed_count(r) == 0);
    }
    SUBCASE("Lemma 3 bookkeeping") {
        // fixed line preserved: posterior N(R) = prior N(P) - 1
        CHECK(reversed_count(q) == (7 - reversed_count(p)) - 1);
        // fixed line reversed: posterior N(R) = prior N(P) + 1
        const FanoPresentation t2 = from_box_kite(fig4_type2());
        const FanoPresentation after = pl(t2, FanoLine::StrutB);
        CHECK(reversed_count(after) == (7 - reversed_count(t2)) + 1);
    }
}

TEST_CASE("symbolic loadings accumulate") {
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    const FanoPresentation q = pl(pl(p, FanoLine::Circle), FanoLine::StrutA);
    CHECK(q.sym[static_cast<int>(FanoNode::D)].text() == "d+g+G");
    CHECK(q.sym[static_cast<int>(FanoNode::A)].text() == "a");
    CHECK(q.label(FanoNode::D) == 4 + 8 + 16);
}

TEST_CASE("DX Klein group on every line") {
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    for (int li = 0; li < kFanoLines; ++li) {
        const auto line = static_cast<FanoLine>(li);
        for (DxOp op : {DxOp::H, DxOp::V, DxOp::D})
            CHECK(dx(dx(p, line, op), line, op).node == p.node);
        CHECK(dx(dx(p, line, DxOp::H), line, DxOp::V).node == dx(p, line, DxOp::D).node);
        CHECK(dx(dx(p, line, DxOp::V), line, DxOp::H).node == dx(p, line, DxOp::D).node);
    }
}

TEST_CASE("DX on the vertical strut trades zigzag and bottom trefoil") {
    // Lemma 4's instantiation on the fixed line (c, S, d): V swaps a<->e, b<->f.
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    const FanoPresentation q = dx(p, FanoLine::StrutC, DxOp::V);
    CHECK(q.label(FanoNode::A) == p.label(FanoNode::E));
    CHECK(q.label(FanoNode::E) == p.label(FanoNode::A));
    CHECK(q.label(FanoNode::B) == p.label(FanoNode::F));
    CHECK(q.label(FanoNode::F) == p.label(FanoNode::B));
    // the moved zigzag keeps its orientation at the bottom-side position
    CHECK(q.preserved(FanoLine::SideC));
    CHECK(q.preserved(FanoLine::Circle));
    CHECK(q.preserved(FanoLine::StrutC));
    // H is the dihedral flip across (c, S, d)
    const FanoPresentation h = dx(p, FanoLine::StrutC, DxOp::H);
    CHECK(h.label(FanoNode::A) == p.label(FanoNode::B));
    CHECK(h.label(FanoNode::E) == p.label(FanoNode::F));
}

TEST_CASE("Lemma 6: flip plus loading on a strut gives the standard Type II") {
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    const FanoPresentation want = from_box_kite(fig4_type2());
    const FanoPresentation via1 = pl(dx(p, FanoLine::StrutA, DxOp::H), FanoLine::StrutA);
    const FanoPresentation via2 = dx(pl(p, FanoLine::StrutA), FanoLine::StrutA, DxOp::H);
    CHECK(via1.node == want.node);
    CHECK(via2.node == want.node);
    CHECK(via1.flags() == want.flags());
    CHECK(via2.flags() == want.flags());
}

TEST_CASE("explosion presentations and shapes, Type I spandrel") {
    const BoxKite k1 = sedenion_kite(1);
    SUBCASE("zigzag member: all lines but the circle reversed") {
        const Explosion ex = explode(k1, Sail::ABC);
        const ShapeReport rep = shape(zigzag_presentation(ex));
        CHECK(rep.shape == FanoShape::AllButZigzag);
    }
    SUBCASE("trefoil members: T-bars anchored at a, b, c") {
        const char* anchors[3] = {"midpoint a", "midpoint b", "midpoint c"};
        const Sail sails[3] = {Sail::ADE, Sail::DBF, Sail::EFC};
        // canonical zigzag rotation permutes the anchors of the last two
        const char* got[3];
        for (int i = 0; i < 3; ++i) {
            const ShapeReport rep = shape(zigzag_presentation(explode(k1, sails[i])));
            CHECK(rep.shape == FanoShape::TBar);
            got[i] = rep.detail == anchors[0] ? anchors[0]
                     : rep.detail == anchors[1] ? anchors[1]
                                                : anchors[2];
        }
        CHECK(got[0] == anchors[0]);
        CHECK(std::set<const char*>{got[0], got[1], got[2]}.size() == 3);
    }
    SUBCASE("own-trefoil displays: the four named Type II shapes") {
        CHECK(shape(trefoil_presentation(explode(k1, Sail::ABC))).shape == FanoShape::PupTent);
        CHECK(shape(trefoil_presentation(explode(k1, Sail::ADE))).shape ==
              FanoShape::SwallowsTail);
        CHECK(shape(trefoil_presentation(explode(k1, Sail::DBF))).shape ==
              FanoShape::Switchblade);
        CHECK(shape(trefoil_presentation(explode(k1, Sail::EFC))).shape ==
              FanoShape::ShrimpFork);
    }
}

TEST_CASE("Type II spandrel presentations mirror the Type I set") {
    const BoxKite t2 = fig4_type2();
    const BoxKite k1 = sedenion_kite(1);
    SUBCASE("own-zigzag displays give the named shapes") {
        CHECK(shape(zigzag_presentation(explode(t2, Sail::ABC))).shape == FanoShape::PupTent);
        CHECK(shape(zigzag_presentation(explode(t2, Sail::ADE))).shape ==
              FanoShape::SwallowsTail);
        CHECK(shape(zigzag_presentation(explode(t2, Sail::DBF))).shape == FanoShape::ShrimpFork);
        CHECK(shape(zigzag_presentation(explode(t2, Sail::EFC))).shape == FanoShape::Switchblade);
    }
    SUBCASE("flowmorphism relations") {
        CHECK(flowmorphic(zigzag_presentation(explode(k1, Sail::ABC)),
                          trefoil_presentation(explode(t2, Sail::ABC))));
        CHECK(flowmorphic(trefoil_presentation(explode(k1, Sail::ABC)),
                          zigzag_presentation(explode(t2, Sail::ABC))));
        CHECK(flowmorphic(zigzag_presentation(explode(k1, Sail::ADE)),
                          trefoil_presentation(explode(t2, Sail::ADE))));
        CHECK(!flowmorphic(from_box_kite(k1), from_box_kite(t2)));
    }
    SUBCASE("the eight zigzag/trefoil patterns coincide as sets") {
        std::set<std::array<bool, 7>> one, two;
        for (Sail s : {Sail::ABC, Sail::ADE, Sail::DBF, Sail::EFC}) {
            one.insert(zigzag_presentation(explode(k1, s)).flags());
            one.insert(trefoil_presentation(explode(k1, s)).flags());
            two.insert(zigzag_presentation(explode(t2, s)).flags());
            two.insert(trefoil_presentation(explode(t2, s)).flags());
        }
        CHECK(one == two);
        CHECK(one.size() == 8);
    }
}

TEST_CASE("parity of the reversed count under random PL/DX walks") {
    const FanoPresentation starts[2] = {from_box_kite(sedenion_kite(1)),
                                        from_box_kite(fig4_type2())};
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        FanoPresentation p = starts[trial % 2];
        int pls = 0;
        for (int step = 0; step < 8; ++step) {
            const auto line = static_cast<FanoLine>(rng() % 7);
            if (pls < 5 && rng() % 2 == 0) {
                p = pl(p, line);
                ++pls;
            } else {
                const DxOp op = static_cast<DxOp>(rng() % 3);
                p = dx(p, line, op);
            }
            CHECK(reversed_count(p) % 2 == 0);
        }
    }
}

TEST_CASE("exports") {
    const FanoPresentation p = from_box_kite(sedenion_kite(1));
    const std::string dot = fano_dot(p);
    CHECK(dot.find("digraph fano") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 21);  // three arrows per line
}
