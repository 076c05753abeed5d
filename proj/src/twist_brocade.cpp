#include "zdkit/twist_brocade.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zdkit {

namespace {

bool is_strut(int v1, int v2) {
    return (v1 + v2 == 5) && v1 != v2;  // A-F, B-E, C-D
}

// Square cycles orthogonal to struts AF, BE, CD, oriented so that the L-trip
// flow runs with the cycle on three edges; the reversed edges are DE, FD, EF.
constexpr std::array<std::array<int, 4>, 3> kSquares = {{
    {1, 2, 4, 3},  // B C E D
    {0, 3, 5, 2},  // A D F C
    {0, 1, 5, 4},  // A B F E
}};
constexpr std::array<std::array<int, 2>, 3> kReversedEdges = {{{3, 4}, {5, 3}, {4, 5}}};

}  // namespace

TwistResult twist_edge(const BoxKite& bk, int v1, int v2) {
    if (v1 < 0 || v1 >= kVertexCount || v2 < 0 || v2 >= kVertexCount || v1 == v2 || is_strut(v1, v2))
        throw std::domain_error("twist_edge: vertex pair is not an octahedral edge");
    if (bk.kind == KiteKind::Hidden)
        throw std::domain_error("twist_edge: hidden hexads carry no edge currents to twist");
    const UnitIndex l1 = bk.l[v1], l2 = bk.l[v2];
    const UnitIndex third = l1 ^ l2;
    const UnitIndex target = third ^ bk.s;  // L-index of the third assessor's strut opposite
    TwistResult out;
    out.target_s = target;
    out.pair = {Assessor{bk.n, l2, bk.u_of(v1)}, Assessor{bk.n, l1, bk.u_of(v2)}};
    return out;
}

std::array<Catamaran, 3> catamarans(const BoxKite& bk) {
    (void)bk;
    std::array<Catamaran, 3> out;
    for (int strut = 0; strut < 3; ++strut) {
        Catamaran c;
        c.strut = strut;
        c.square = kSquares[strut];
        c.parallel_classes = {{{0, 2}, {1, 3}}};
        c.reversed_edge = kReversedEdges[strut];
        out[strut] = c;
    }
    return out;
}

namespace {

// Twist both edges of one parallel class; returns target strut constant and
// the four swapped assessors.
std::pair<UnitIndex, std::vector<Assessor>> twist_class(const BoxKite& bk, const Catamaran& cat,
                                                        int cls) {
    UnitIndex target = 0;
    std::vector<Assessor> quad;
    for (int e : cat.parallel_classes[cls]) {
        const int v1 = cat.square[e], v2 = cat.square[(e + 1) % 4];
        const TwistResult t = twist_edge(bk, v1, v2);
        if (target == 0) target = t.target_s;
        else if (target != t.target_s)
            throw std::logic_error("royal_hunt: parallel edges twist to different strut constants");
        quad.push_back(t.pair[0]);
        quad.push_back(t.pair[1]);
    }
    std::sort(quad.begin(), quad.end());
    return {target, quad};
}

const BoxKite& kite_containing(std::vector<BoxKite>& pool, const std::vector<Assessor>& quad) {
    for (const BoxKite& k : pool) {
        std::set<UnitIndex> ls(k.l.begin(), k.l.end());
        if (std::all_of(quad.begin(), quad.end(),
                        [&](const Assessor& a) { return ls.count(a.l) != 0; }))
            return k;
    }
    throw std::logic_error("royal_hunt: twisted assessors not contained in any target kite");
}

}  // namespace

RoyalHunt royal_hunt(const BoxKite& bk, const Catamaran& cat) {
    RoyalHunt rh;
    rh.start_s = bk.s;
    for (int cls = 0; cls < 2; ++cls) {
        auto [target, quad] = twist_class(bk, cat, cls);
        rh.target_s[cls] = target;
        rh.twisted[cls] = std::move(quad);
    }
    rh.strut_trip = (rh.start_s ^ rh.target_s[0]) == rh.target_s[1];

    // Second twist: in the first target kite, locate the square made of the
    // four incoming assessors and twist its other parallel class.
    auto pool = enumerate_box_kites(rh.target_s[0], bk.n);
    const BoxKite& k1 = kite_containing(pool, rh.twisted[0]);
    std::set<UnitIndex> incoming;
    for (const Assessor& a : rh.twisted[0]) incoming.insert(a.l);
    rh.second_twist_commutes = false;
    for (const Catamaran& c1 : catamarans(k1)) {
        std::set<UnitIndex> verts;
        for (int v : c1.square) verts.insert(k1.l[v]);
        if (verts != incoming) continue;
        for (int cls = 0; cls < 2; ++cls) {
            auto [target, quad] = twist_class(k1, c1, cls);
            if (target == rh.start_s) continue;  // the way back
            rh.second_twist_commutes =
                (target == rh.target_s[1]) && (quad == rh.twisted[1]);
        }
    }
    return rh;
}

std::array<std::array<Assessor, 2>, 2> mast_keel_completion(const BoxKite& bk,
                                                            const Catamaran& cat) {
    const int vp = cat.strut;  // strut k joins vertices k and 5-k
    const int vq = 5 - vp;
    // Twist (l, U) against the central (S, X) pair: each strut half yields one
    // assessor per target kite.
    const Assessor from_p_center{bk.n, bk.s, bk.u_of(vp)};   // target = l_p
    const Assessor from_p_label{bk.n, bk.l[vp], bk.x};       // target = l_p ^ s
    const Assessor from_q_center{bk.n, bk.s, bk.u_of(vq)};   // target = l_q
    const Assessor from_q_label{bk.n, bk.l[vq], bk.x};       // target = l_q ^ s
    std::array<std::array<Assessor, 2>, 2> out;
    for (int cls = 0; cls < 2; ++cls) {
        const int e = cat.parallel_classes[cls][0];
        const TwistResult t = twist_edge(bk, cat.square[e], cat.square[(e + 1) % 4]);
        std::vector<Assessor> match;
        for (const Assessor& a : {from_p_center, from_p_label, from_q_center, from_q_label})
            if (a.strut_constant() == t.target_s) match.push_back(a);
        if (match.size() != 2)
            throw std::logic_error("mast_keel_completion: expected one assessor per strut half");
        out[cls] = {match[0], match[1]};
    }
    return out;
}

Brocade brocade(int n) {
    if (n < 4) throw std::invalid_argument("brocade: need n >= 4");
    const UnitIndex g = UnitIndex{1} << (n - 1);
    Brocade b;
    b.n = n;
    for (UnitIndex u = g + 1; u < 2 * g; ++u) b.rows.push_back(u);
    for (UnitIndex l = 1; l < g; ++l) b.cols.push_back(l);

    std::map<UnitIndex, std::vector<BoxKite>> kites;
    b.cells.resize(b.rows.size());
    for (std::size_t ri = 0; ri < b.rows.size(); ++ri) {
        b.cells[ri].resize(b.cols.size());
        const UnitIndex u = b.rows[ri];
        for (std::size_t ci = 0; ci < b.cols.size(); ++ci) {
            const UnitIndex l = b.cols[ci];
            if (u == (g ^ l)) continue;  // the (S, X) anti-assessor diagonal
            const UnitIndex s = l ^ (u - g);
            auto it = kites.find(s);
            if (it == kites.end()) it = kites.emplace(s, enumerate_box_kites(s, n)).first;
            for (const BoxKite& k : it->second) {
                for (int v = 0; v < kVertexCount; ++v) {
                    if (k.l[v] == l)
                        b.cells[ri][ci].push_back({s, kVertexLetter[v], k.key(), k.kind});
                }
            }
        }
    }
    return b;
}

std::string brocade_csv(const Brocade& b) {
    std::ostringstream out;
    for (UnitIndex c : b.cols) out << "," << c;
    out << "\n";
    for (std::size_t ri = 0; ri < b.rows.size(); ++ri) {
        out << b.rows[ri];
        for (std::size_t ci = 0; ci < b.cols.size(); ++ci) {
            out << ",";
            bool first = true;
            for (const BrocadeEntry& e : b.cells[ri][ci]) {
                if (!first) out << " ";
                out << e.s << e.letter;
                first = false;
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace zdkit
