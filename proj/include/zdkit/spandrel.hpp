#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdkit/zd_boxkite.hpp"

namespace zdkit {

enum class Sail { ABC, ADE, DBF, EFC };

std::string to_string(Sail s);
Sail sail_from_string(const std::string& name);

/// The sail's three vertices in the conventional letter order.
std::array<int, 3> sail_vertices(Sail s);

/// One sail inflated into a hidden box-kite of the next level: strut-opposite
/// L-pairs are the old L- and U-indices, new s = s + g, new G = 2g.
struct Explosion {
    BoxKite source;
    Sail sail{};
    Trip sail_trip;                    // L-trip in source letter order
    std::array<UnitIndex, 3> sail_u{};  // source U-indices, same order
    BoxKite hbk;                       // hidden kite at (s + g, n + 1)
};

/// Throws std::domain_error for hidden input (re-explosion is hide_fill).
Explosion explode(const BoxKite& bk, Sail sail);

/// Quartet of hidden box-kites, one per source sail.
struct Spandrel {
    BoxKite source;
    UnitIndex x_new{};  // the members' common X
    std::array<Explosion, 4> members;
};

Spandrel spandrel_of(const BoxKite& bk);

/// Text export in the published four-column layout, for golden comparison.
std::string table2_text(const Spandrel& sp);

/// Concrete zero product (e_i + si e_j)(e_k + sj e_l) = 0 exhibited by a
/// failed egg candidate.
struct ZeroWitness {
    UnitIndex i{}, j{};
    int si{};
    UnitIndex k{}, l{};
    int sj{};
};

/// Octet {0, sail L-units, their U-partners, X}; when verified it is a
/// zero-divisor-free octonion copy, relabeled onto 0..7 with X -> 4.
struct EggOctet {
    int n{};
    std::array<UnitIndex, 8> indices{};
    std::array<UnitIndex, 8> mapping{};  // indices[k] -> mapping[k] in 0..7
};

struct EggReport {
    bool xor_closed{};
    bool trips_associative{};          // all 7 internal trips span quaternion copies
    std::optional<ZeroWitness> zd_witness;  // set when some diagonal pair vanishes
    bool mapping_found{};
    bool pass{};
};

/// Full verification: XOR closure, associativity of the seven internal trips,
/// exhaustive diagonal-pair products nonzero, and the relabeling search.
/// Fills octet.mapping when found.
EggReport verify_egg(EggOctet& octet);

/// Candidate octet read off one sail of a hidden box-kite.
EggOctet egg_candidate(const BoxKite& hbk, Sail sail);

struct SailCandidate {
    Sail sail{};
    EggOctet octet;
    EggReport report;
};

/// All four sails of a hidden box-kite, each candidate fully verified.
std::array<SailCandidate, 4> egg_candidates(const BoxKite& hbk);

/// The egg in the designated habitat sail: zigzag for Type I spandrels, ADE
/// for Type II.  Returns nullopt when verification fails there.  Throws
/// std::domain_error when hbk is not hidden.
std::optional<EggOctet> find_egg(const BoxKite& hbk, KiteKind spandrel_kind);

/// Proper (non-hidden) box-kites of the (s, n) table plus strut sharing.
struct Triptych {
    std::vector<BoxKite> kites;
    std::map<std::array<UnitIndex, 2>, int> strut_use;  // sorted L-pair -> kite count
    std::vector<std::array<UnitIndex, 2>> common_struts;  // shared by every kite
};

Triptych triptych(UnitIndex s, int n);

/// Mutual zero-division status of the assessor pairing with L-indices l1, l2
/// after 0..augmentations high-bit augmentations of s (levels n, n+1, ...).
std::vector<bool> hide_fill_sequence(UnitIndex l1, UnitIndex l2, UnitIndex s, int n,
                                     int augmentations);

/// Final state after the given number of augmentations.
bool hide_fill(UnitIndex l1, UnitIndex l2, UnitIndex s, int n, int augmentations);

}  // namespace zdkit
