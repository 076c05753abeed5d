#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zdkit/spandrel.hpp"
#include "zdkit/zd_boxkite.hpp"

namespace zdkit {

/// Node positions of the standard layout: center, the three zigzag midpoints,
/// and the three corners (strut opposites of c, b, a in that order).
enum class FanoNode { S = 0, A, B, C, D, E, F };

/// The seven lines in positional storage order.  Standard flow: the circle
/// and the triangle perimeter run clockwise, struts run midpoint -> center ->
/// corner, realising CPO on every line of a standard Type I presentation.
enum class FanoLine { Circle = 0, SideA, SideB, SideC, StrutA, StrutB, StrutC };

inline constexpr int kFanoLines = 7;

/// Node triple of each line in flow order.
std::array<FanoNode, 3> line_nodes(FanoLine line);
std::string to_string(FanoLine line);

/// Double label-exchange operators on a fixed line; each op pairs the four
/// off-line nodes through one of the line's points (H via the first stored
/// node, D via the middle, V via the third) and forms a Klein group.
enum class DxOp { H, V, D };

/// Symbolic node label: a base letter from {s,a,b,c,d,e,f} plus accumulated
/// generator loadings (bit k = the k-th loading g, G, Gamma, ...).
struct SymbolicLabel {
    char base{};
    std::uint8_t loadings{};
    [[nodiscard]] std::string text() const;
};

/// Oriented Fano presentation: numeric labels per position plus symbolic
/// provenance.  Line orientations are derived, not stored: a line is
/// preserved when its label triple is CPO along the standard flow.
struct FanoPresentation {
    std::array<UnitIndex, 7> node{};       // by FanoNode position
    std::array<SymbolicLabel, 7> sym{};
    int loads{};  // completed PL operations; next loading is 2^(base_n-1+loads)
    int base_n{};

    [[nodiscard]] UnitIndex label(FanoNode p) const { return node[static_cast<int>(p)]; }
    /// Orientation flags, true = preserved relative to the standard layout.
    [[nodiscard]] std::array<bool, 7> flags() const;
    [[nodiscard]] bool preserved(FanoLine line) const;
};

/// Zigzag on the circle, s at center, strut opposites at the corners.
FanoPresentation from_box_kite(const BoxKite& bk);

/// Generator loading: adds the next generator bit to the four nodes off the
/// fixed line.  The fixed line keeps its orientation, the other six reverse.
FanoPresentation pl(const FanoPresentation& p, FanoLine fixed_line);

/// Label double-exchange; line connectivity is preserved and each moved line
/// keeps its intrinsic orientation.
FanoPresentation dx(const FanoPresentation& p, FanoLine fixed_line, DxOp op);

/// Count of reversed lines relative to the standard Type I layout.
int reversed_count(const FanoPresentation& p);

/// Position-wise orientation agreement after label erasure.
bool flowmorphic(const FanoPresentation& p1, const FanoPresentation& p2);

enum class FanoShape {
    TypeI,          // nothing reversed
    TypeII,         // exactly two struts reversed
    AllButZigzag,   // every line but the circle reversed (zigzag explosion)
    TBar,           // one strut plus the side sharing its midpoint
    PupTent,        // all three sides plus one strut
    SwallowsTail,   // all three struts plus one side
    ShrimpFork,     // bottom side plus the b-strut (sharing corner e)
    Switchblade,    // right side plus the c-strut (sharing corner d)
    Unrecognized,
};

std::string to_string(FanoShape s);

struct ShapeReport {
    FanoShape shape{};
    std::string detail;                 // anchor letter or raw reversal set
    std::vector<FanoLine> reversed;
};

ShapeReport shape(const FanoPresentation& p);

/// Presentation of an exploded hidden box-kite with its own zigzag (the
/// inflated source sail) on the circle, in canonical CPO order.
FanoPresentation zigzag_presentation(const Explosion& ex);

/// Same hidden box-kite displayed with its own (a,d,e) trefoil on the circle,
/// in the CPO orientation that keeps the circle flowing clockwise.
FanoPresentation trefoil_presentation(const Explosion& ex);

/// DOT digraph of the oriented lines (three arrows per line).
std::string fano_dot(const FanoPresentation& p);

}  // namespace zdkit
