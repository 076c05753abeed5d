#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zdkit/cdp_core.hpp"

namespace zdkit {

/// Plane spanned by e_l (l below the generator) and e_u (u above it) whose
/// diagonals e_u +- e_l are zero divisors.  For a box-kite of strut constant
/// s the U-index is forced: u = G + (l ^ s).
struct Assessor {
    int n{};
    UnitIndex l{}, u{};

    Assessor() = default;
    Assessor(int n_, UnitIndex l_, UnitIndex u_);

    /// Strut constant this pair lives under: l ^ (u - G).
    [[nodiscard]] UnitIndex strut_constant() const;
    auto operator<=>(const Assessor&) const = default;
};

/// One of the two zero-divisor lines of an assessor: e_u + slope * e_l.
struct Diagonal {
    Assessor assessor;
    int slope{+1};  // +1 = "/", -1 = "\"

    [[nodiscard]] HyperNum representative() const;
};

enum class KiteKind { TypeI, TypeII, Hidden };

std::string to_string(KiteKind k);

/// Vertex letters A..F as indices 0..5.  Strut pairs: (A,F), (B,E), (C,D).
inline constexpr int kVertexCount = 6;
inline constexpr char kVertexLetter[kVertexCount] = {'A', 'B', 'C', 'D', 'E', 'F'};

/// The 12 octahedral edges in canonical order (strut pairs excluded).
inline constexpr std::array<std::pair<int, int>, 12> kEdges = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
    {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
}};

/// Octahedral hexad of assessors for one strut constant.  Letters follow the
/// standard convention: the zigzag (the unique all-negative sail when currents
/// exist) is (A,B,C) in CPO order with the smallest L-index at A; D,E,F are
/// the strut opposites of C,B,A.  Hidden hexads carry the construction sail
/// as their designated zigzag.
struct BoxKite {
    int n{};
    UnitIndex s{}, x{};               // x = G + s
    std::array<UnitIndex, 6> l{};     // L-indices by vertex A..F
    std::array<char, 12> edge_signs{};  // '+', '-', or '0' (no current), kEdges order
    KiteKind kind{};

    [[nodiscard]] UnitIndex u_of(int vertex) const;
    [[nodiscard]] Assessor assessor(int vertex) const;
    [[nodiscard]] Trip zigzag() const { return {l[0], l[1], l[2]}; }
    /// Canonical identity: the sorted L-index set (plus s, n).
    [[nodiscard]] std::array<UnitIndex, 6> key() const;
    [[nodiscard]] char edge_sign(int v1, int v2) const;
};

/// All (l, u) planes at level n whose diagonals mutually zero-divide with some
/// partner.  Throws std::domain_error for n < 4 (no zero divisors below 16-D).
std::vector<Assessor> enumerate_assessors(int n);

/// True iff the product of the two diagonal representatives is exactly zero.
bool mutually_zero_divide(const Diagonal& d1, const Diagonal& d2);

/// Edge current between the assessors with L-indices l1, l2 under strut s:
/// '+' when same-slope pairings vanish, '-' when opposite-slope ones do,
/// nullopt when no pairing vanishes.
std::optional<char> edge_current(UnitIndex l1, UnitIndex l2, UnitIndex s, int n);

/// Assemble the hexad seeded by a zigzag L-trip.  Edge signs come from the
/// oracle; when currents exist the true all-negative sail is located and the
/// letters normalised to it.  Throws std::domain_error when s collides with
/// the trip or the hexad is neither proper nor hidden.
BoxKite build_box_kite(UnitIndex s, const Trip& zigzag_l_trip, int n);

/// Re-derives the kind from strut-trip orientations and edge currents.
/// Lemma 7 realised: one or three reversed struts on a current-carrying kite
/// throws std::domain_error.
KiteKind classify(const BoxKite& bk);

/// All canonical hexads for strut constant s: proper box-kites plus hexads
/// that pass the operational hidden test (every sail re-fills after one more
/// high-bit augmentation of s).  Deduplicated by sorted L-index set and
/// returned in key order.
std::vector<BoxKite> enumerate_box_kites(UnitIndex s, int n);

/// Third sail assessor emanated by two edge-adjacent assessors; its L-index
/// is l_p ^ l_q.  Throws std::domain_error when the inputs do not mutually
/// zero-divide (e.g. strut opposites).
Assessor emanate(const Assessor& p, const Assessor& q);

}  // namespace zdkit
