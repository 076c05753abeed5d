#include "zdkit/zd_boxkite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace zdkit {

namespace {

UnitIndex g_of(int n) { return UnitIndex{1} << (n - 1); }

UnitIndex forced_u(UnitIndex l, UnitIndex s, int n) { return g_of(n) + (l ^ s); }

// Product of (e_u1 + s1 e_l1)(e_u2 + s2 e_l2) restricted to a zero test;
// four signed unit products, no vector allocation.
bool pairing_zero(UnitIndex l1, UnitIndex u1, UnitIndex l2, UnitIndex u2, int s1, int s2,
                  const AlgebraContext& ctx) {
    std::map<UnitIndex, long long> acc;
    const UnitIndex is[2] = {u1, l1};
    const long long cs[2] = {1, s1};
    const UnitIndex js[2] = {u2, l2};
    const long long ds[2] = {1, s2};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto [k, sg] = ctx.unit_product(is[a], js[b]);
            acc[k] += sg * cs[a] * ds[b];
        }
    for (auto& [k, v] : acc)
        if (v != 0) return false;
    return true;
}

}  // namespace

Assessor::Assessor(int n_, UnitIndex l_, UnitIndex u_) : n(n_), l(l_), u(u_) {
    const UnitIndex g = g_of(n);
    if (n < 4 || l == 0 || l >= g || u <= g || u >= 2 * g || u == (g ^ l))
        throw std::invalid_argument("Assessor: indices violate l < G < u, u != G^l");
}

UnitIndex Assessor::strut_constant() const { return l ^ (u - g_of(n)); }

HyperNum Diagonal::representative() const {
    HyperNum h = HyperNum::zero(assessor.n);
    h.c[assessor.u] = 1;
    h.c[assessor.l] = slope;
    return h;
}

std::string to_string(KiteKind k) {
    switch (k) {
        case KiteKind::TypeI: return "TypeI";
        case KiteKind::TypeII: return "TypeII";
        default: return "Hidden";
    }
}

UnitIndex BoxKite::u_of(int vertex) const { return forced_u(l[vertex], s, n); }

Assessor BoxKite::assessor(int vertex) const { return {n, l[vertex], u_of(vertex)}; }

std::array<UnitIndex, 6> BoxKite::key() const {
    auto k = l;
    std::sort(k.begin(), k.end());
    return k;
}

char BoxKite::edge_sign(int v1, int v2) const {
    for (std::size_t i = 0; i < kEdges.size(); ++i) {
        auto [a, b] = kEdges[i];
        if ((a == v1 && b == v2) || (a == v2 && b == v1)) return edge_signs[i];
    }
    throw std::invalid_argument("edge_sign: not an octahedral edge");
}

bool mutually_zero_divide(const Diagonal& d1, const Diagonal& d2) {
    if (d1.assessor.n != d2.assessor.n)
        throw std::invalid_argument("mutually_zero_divide: dimension mismatch");
    const AlgebraContext& ctx = AlgebraContext::get(d1.assessor.n);
    if (d1.assessor == d2.assessor) return false;  // same-assessor diagonals never do
    return pairing_zero(d1.assessor.l, d1.assessor.u, d2.assessor.l, d2.assessor.u, d1.slope,
                        d2.slope, ctx);
}

std::optional<char> edge_current(UnitIndex l1, UnitIndex l2, UnitIndex s, int n) {
    const AlgebraContext& ctx = AlgebraContext::get(n);
    const UnitIndex u1 = forced_u(l1, s, n), u2 = forced_u(l2, s, n);
    const bool same = pairing_zero(l1, u1, l2, u2, +1, +1, ctx);
    const bool opp = pairing_zero(l1, u1, l2, u2, +1, -1, ctx);
    if (same && !opp) return '+';
    if (opp && !same) return '-';
    if (!same && !opp) return std::nullopt;
    throw std::logic_error("edge_current: both pairings vanish");
}

std::vector<Assessor> enumerate_assessors(int n) {
    if (n < 4) throw std::domain_error("enumerate_assessors: no zero divisors below n=4");
    const UnitIndex g = g_of(n);
    std::vector<Assessor> out;
    for (UnitIndex l = 1; l < g; ++l) {
        for (UnitIndex u = g + 1; u < 2 * g; ++u) {
            if (u == (g ^ l)) continue;
            const UnitIndex s = l ^ (u - g);
            bool found = false;
            for (UnitIndex l2 = 1; l2 < g && !found; ++l2) {
                if (l2 == l || l2 == s || l2 == (l ^ s)) continue;
                found = edge_current(l, l2, s, n).has_value();
            }
            if (found) out.emplace_back(n, l, u);
        }
    }
    return out;
}

namespace {

// Strut-trip orientation count: reversals of (z, s, v) CPO over z in {a,b,c}.
int reversed_struts(const std::array<UnitIndex, 6>& l, UnitIndex s, const AlgebraContext& ctx) {
    int rev = 0;
    for (int i = 0; i < 3; ++i) {
        auto [idx, sg] = ctx.unit_product(l[i], s);
        (void)idx;
        if (sg != +1) ++rev;
    }
    return rev;
}

std::array<UnitIndex, 6> hexad_from(const Trip& zz, UnitIndex s) {
    return {zz.p, zz.q, zz.r, zz.r ^ s, zz.q ^ s, zz.p ^ s};
}

// The four sail L-trips of the hexad seeded by zz: zigzag plus trefoils
// (a,d,e), (d,b,f), (e,f,c).
std::array<Trip, 4> sails_of(const Trip& zz, UnitIndex s) {
    const auto h = hexad_from(zz, s);
    return {Trip{h[0], h[1], h[2]}, Trip{h[0], h[3], h[4]}, Trip{h[3], h[1], h[5]},
            Trip{h[4], h[5], h[2]}};
}

bool hexad_has_current(const Trip& zz, UnitIndex s, int n) {
    const auto h = hexad_from(zz, s);
    for (auto [a, b] : kEdges)
        if (edge_current(h[a], h[b], s, n).has_value()) return true;
    return false;
}

// Operational hidden test: every sail of a current-free hexad must seed a
// proper box-kite once s gains the next high bit.
bool refills_at_next_level(const Trip& zz, UnitIndex s, int n) {
    const UnitIndex s2 = s + g_of(n);
    for (const Trip& t : sails_of(zz, s)) {
        if (!hexad_has_current(t, s2, n + 1)) return false;
    }
    return true;
}

}  // namespace

BoxKite build_box_kite(UnitIndex s, const Trip& zigzag_l_trip, int n) {
    const UnitIndex g = g_of(n);
    if (s == 0 || s >= g) throw std::invalid_argument("build_box_kite: need 0 < s < G");
    Trip zz = zigzag_l_trip.canonical();
    if (zz.contains(s)) throw std::domain_error("build_box_kite: strut constant collides with zigzag");
    if (zz.p >= g || zz.q >= g || zz.r >= g)
        throw std::invalid_argument("build_box_kite: zigzag indices must lie below G");
    const AlgebraContext& ctx = AlgebraContext::get(n);

    BoxKite bk;
    bk.n = n;
    bk.s = s;
    bk.x = g + s;
    bk.l = hexad_from(zz, s);

    // Edge currents for the seeded letter assignment.
    auto fill_signs = [&](BoxKite& k) {
        for (std::size_t i = 0; i < kEdges.size(); ++i) {
            auto [a, b] = kEdges[i];
            auto c = edge_current(k.l[a], k.l[b], s, n);
            k.edge_signs[i] = c.value_or('0');
        }
    };
    fill_signs(bk);

    const bool carries = std::any_of(bk.edge_signs.begin(), bk.edge_signs.end(),
                                     [](char c) { return c != '0'; });
    if (carries) {
        // Locate the unique all-negative sail and normalise letters to it.
        Trip found{};
        bool have = false;
        for (const Trip& t : sails_of(zz, s)) {
            if (edge_current(t.p, t.q, s, n) == '-' && edge_current(t.q, t.r, s, n) == '-' &&
                edge_current(t.r, t.p, s, n) == '-') {
                found = t.canonical();
                have = true;
                break;
            }
        }
        if (!have) throw std::logic_error("build_box_kite: currents exist but no all-negative sail");
        bk.l = hexad_from(found, s);
        fill_signs(bk);
        const int rev = reversed_struts(bk.l, s, ctx);
        if (rev == 0) bk.kind = KiteKind::TypeI;
        else if (rev == 2) bk.kind = KiteKind::TypeII;
        else
            throw std::domain_error("build_box_kite: impossible type (" + std::to_string(rev) +
                                    " reversed struts on a current-carrying kite)");
    } else {
        if (!refills_at_next_level(zz, s, n))
            throw std::domain_error("build_box_kite: current-free hexad fails the hide/fill test");
        bk.kind = KiteKind::Hidden;
    }
    return bk;
}

KiteKind classify(const BoxKite& bk) {
    const AlgebraContext& ctx = AlgebraContext::get(bk.n);
    const bool carries = std::any_of(bk.edge_signs.begin(), bk.edge_signs.end(),
                                     [](char c) { return c != '0'; });
    if (!carries) return KiteKind::Hidden;
    const int rev = reversed_struts(bk.l, bk.s, ctx);
    if (rev == 0) return KiteKind::TypeI;
    if (rev == 2) return KiteKind::TypeII;
    throw std::domain_error("classify: impossible type (Lemma 7)");
}

std::vector<BoxKite> enumerate_box_kites(UnitIndex s, int n) {
    const UnitIndex g = g_of(n);
    if (s == 0 || s >= g) throw std::invalid_argument("enumerate_box_kites: need 0 < s < G");
    const AlgebraContext& lower = AlgebraContext::get(n - 1);
    std::map<std::array<UnitIndex, 6>, Trip> seeds;  // hexad key -> smallest seed sail
    for (const Trip& t : lower.trips()) {
        if (t.contains(s)) continue;
        const auto hex = hexad_from(t, s);
        auto key = hex;
        std::sort(key.begin(), key.end());
        auto it = seeds.find(key);
        if (it == seeds.end() || t < it->second) seeds[key] = t;
    }
    std::vector<BoxKite> out;
    out.reserve(seeds.size());
    for (const auto& [key, seed] : seeds) {
        try {
            out.push_back(build_box_kite(s, seed, n));
        } catch (const std::domain_error&) {
            // hexad is neither proper nor hidden: rejected from enumeration
        }
    }
    return out;
}

Assessor emanate(const Assessor& p, const Assessor& q) {
    if (p.n != q.n) throw std::invalid_argument("emanate: dimension mismatch");
    const UnitIndex s = p.strut_constant();
    if (s != q.strut_constant())
        throw std::domain_error("emanate: assessors live under different strut constants");
    if (!edge_current(p.l, q.l, s, p.n).has_value())
        throw std::domain_error("emanate: assessors do not mutually zero-divide");
    const UnitIndex l3 = p.l ^ q.l;
    return {p.n, l3, forced_u(l3, s, p.n)};
}

}  // namespace zdkit
