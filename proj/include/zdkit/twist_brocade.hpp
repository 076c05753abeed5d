#pragma once

#include <array>
#include <string>
#include <vector>

#include "zdkit/zd_boxkite.hpp"

namespace zdkit {

/// Index-swap across an edge: the two assessors trade L-indices, landing in
/// the box-kite whose strut constant is the L-index of the strut opposite of
/// the edge's emanated third assessor.
struct TwistResult {
    UnitIndex target_s{};
    std::array<Assessor, 2> pair;
};

/// Throws std::domain_error for strut (non-edge) vertex pairs and for kites
/// without edge currents.
TwistResult twist_edge(const BoxKite& bk, int v1, int v2);

/// Square of four assessors orthogonal to one strut.  The square cycle lists
/// vertices so consecutive entries share an edge; the two parallel edge
/// classes twist to the two target strut constants.  reversed_edge is the one
/// square edge whose L-trip flow runs against the other three.
struct Catamaran {
    int strut{};                      // 0 = AF, 1 = BE, 2 = CD
    std::array<int, 4> square{};      // vertex cycle
    std::array<std::array<int, 2>, 2> parallel_classes{};  // edge = index pair into square
    std::array<int, 2> reversed_edge{};                    // vertex pair
};

std::array<Catamaran, 3> catamarans(const BoxKite& bk);

/// Three-box Royal Hunt diagram: the start kite plus the two kites reached by
/// twisting the catamaran's parallel edge classes.  The three strut constants
/// form a trip; twisting the first target's square again along its other
/// parallels reaches the second target with identical assessor content.
struct RoyalHunt {
    UnitIndex start_s{};
    UnitIndex target_s[2] = {0, 0};
    std::array<std::vector<Assessor>, 2> twisted;  // four assessors per target
    bool strut_trip{};      // start_s ^ target_s[0] == target_s[1]
    bool second_twist_commutes{};
};

RoyalHunt royal_hunt(const BoxKite& bk, const Catamaran& cat);

/// The strut-half twists against the central (S, X) pair, which supply the
/// two assessors of each target kite that the square's own twists miss.
/// Returned per target: the completing strut-opposite pair.
std::array<std::array<Assessor, 2>, 2> mast_keel_completion(const BoxKite& bk,
                                                            const Catamaran& cat);

/// One cell of the 7-in-1 table: the strut constant and vertex letter of the
/// assessor (u, l), plus (for n > 4, where same-s kites share assessors) the
/// canonical key of the containing kite.
struct BrocadeEntry {
    UnitIndex s{};
    char letter{};
    std::array<UnitIndex, 6> kite_key{};
    KiteKind kind{};
};

struct Brocade {
    int n{};
    std::vector<UnitIndex> rows;  // U-indices ascending
    std::vector<UnitIndex> cols;  // L-indices ascending
    // cells[r][c]: empty exactly on the (s, G+s) anti-assessor diagonal
    std::vector<std::vector<std::vector<BrocadeEntry>>> cells;
};

Brocade brocade(int n);

/// Table-1 layout CSV for n = 4 (rows 9..15, cols 1..7, cells like "1A").
std::string brocade_csv(const Brocade& b);

}  // namespace zdkit
