#include "zdkit/spandrel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zdkit {

std::string to_string(Sail s) {
    switch (s) {
        case Sail::ABC: return "abc";
        case Sail::ADE: return "ade";
        case Sail::DBF: return "dbf";
        default: return "efc";
    }
}

Sail sail_from_string(const std::string& name) {
    if (name == "abc") return Sail::ABC;
    if (name == "ade") return Sail::ADE;
    if (name == "dbf") return Sail::DBF;
    if (name == "efc") return Sail::EFC;
    throw std::invalid_argument("sail_from_string: expected abc|ade|dbf|efc");
}

std::array<int, 3> sail_vertices(Sail s) {
    switch (s) {
        case Sail::ABC: return {0, 1, 2};
        case Sail::ADE: return {0, 3, 4};
        case Sail::DBF: return {3, 1, 5};
        default: return {4, 5, 2};
    }
}

Explosion explode(const BoxKite& bk, Sail sail) {
    if (bk.kind == KiteKind::Hidden)
        throw std::domain_error("explode: hidden input (re-explosion is hide_fill)");
    const auto verts = sail_vertices(sail);
    Explosion ex;
    ex.source = bk;
    ex.sail = sail;
    ex.sail_trip = Trip{bk.l[verts[0]], bk.l[verts[1]], bk.l[verts[2]]};
    ex.sail_u = {bk.u_of(verts[0]), bk.u_of(verts[1]), bk.u_of(verts[2])};
    const UnitIndex g = UnitIndex{1} << (bk.n - 1);
    ex.hbk = build_box_kite(bk.s + g, ex.sail_trip, bk.n + 1);
    if (ex.hbk.kind != KiteKind::Hidden)
        throw std::logic_error("explode: exploded hexad failed to hide");
    return ex;
}

Spandrel spandrel_of(const BoxKite& bk) {
    Spandrel sp{bk, 0, {explode(bk, Sail::ABC), explode(bk, Sail::ADE), explode(bk, Sail::DBF),
                        explode(bk, Sail::EFC)}};
    sp.x_new = sp.members[0].hbk.x;
    return sp;
}

std::string table2_text(const Spandrel& sp) {
    const BoxKite& src = sp.source;
    const BoxKite& h = sp.members[0].hbk;
    const UnitIndex g1 = UnitIndex{1} << (src.n - 1);
    const UnitIndex g2 = UnitIndex{1} << (h.n - 1);
    const UnitIndex s2 = h.s;

    std::ostringstream out;
    out << "(S,X,G = " << src.s << ", " << src.x << ", " << g1 << ") => (S,X,G = " << s2 << ", "
        << h.x << ", " << g2 << ")\n";
    out << "(a,b,c) | (a,d,e) | (d,b,f) | (e,f,c)\n";

    const auto trip_at = [](const Explosion& ex, int i) {
        return i == 0 ? ex.sail_trip.p : i == 1 ? ex.sail_trip.q : ex.sail_trip.r;
    };
    auto row = [&](auto get) {
        std::ostringstream line;
        for (int m = 0; m < 4; ++m) {
            if (m) line << " | ";
            line << "(";
            for (int i = 0; i < 3; ++i) {
                if (i) line << ",";
                char buf[8];
                std::snprintf(buf, sizeof buf, "%02u", get(sp.members[m], i));
                line << buf;
            }
            line << ")";
        }
        return line.str();
    };
    out << row([&](const Explosion& ex, int i) { return trip_at(ex, i); }) << "\n";
    out << row([&](const Explosion& ex, int i) { return g2 + (trip_at(ex, i) ^ s2); }) << "\n";
    out << row([&](const Explosion& ex, int i) { return trip_at(ex, i) ^ s2; }) << "\n";
    out << row([&](const Explosion& ex, int i) { return g2 + trip_at(ex, i); }) << "\n";
    return out.str();
}

namespace {

bool octet_xor_closed(const std::array<UnitIndex, 8>& idx) {
    std::set<UnitIndex> s(idx.begin(), idx.end());
    if (s.size() != 8) return false;
    for (UnitIndex a : s)
        for (UnitIndex b : s)
            if (!s.count(a ^ b)) return false;
    return true;
}

}  // namespace

EggOctet egg_candidate(const BoxKite& hbk, Sail sail) {
    if (hbk.kind != KiteKind::Hidden)
        throw std::domain_error("egg_candidate: kite is not hidden");
    const auto verts = sail_vertices(sail);
    EggOctet egg;
    egg.n = hbk.n;
    egg.indices = {0,
                   hbk.l[verts[0]],
                   hbk.l[verts[1]],
                   hbk.l[verts[2]],
                   hbk.u_of(verts[0]),
                   hbk.u_of(verts[1]),
                   hbk.u_of(verts[2]),
                   hbk.x};
    return egg;
}

EggReport verify_egg(EggOctet& egg) {
    EggReport rep;
    rep.xor_closed = octet_xor_closed(egg.indices);
    const AlgebraContext& ctx = AlgebraContext::get(egg.n);

    // Associativity: every internal trip spans a quaternion copy; check all
    // triple products over each {0, p, q, r} span.
    rep.trips_associative = true;
    std::vector<UnitIndex> imag(egg.indices.begin() + 1, egg.indices.end());
    std::set<UnitIndex> members(egg.indices.begin(), egg.indices.end());
    for (UnitIndex p : imag)
        for (UnitIndex q : imag) {
            if (p >= q || !members.count(p ^ q)) continue;
            const UnitIndex span[4] = {0, p, q, p ^ q};
            for (UnitIndex a : span)
                for (UnitIndex b : span)
                    for (UnitIndex c : span) {
                        auto [ab, s1] = ctx.unit_product(a, b);
                        auto [abc, s2] = ctx.unit_product(ab, c);
                        auto [bc, s3] = ctx.unit_product(b, c);
                        auto [abc2, s4] = ctx.unit_product(a, bc);
                        if (abc != abc2 || s1 * s2 != s3 * s4) rep.trips_associative = false;
                    }
        }

    // Exhaustive diagonal-pair products: every sum/difference pairing of every
    // index pair must be nonzero.
    for (std::size_t a = 0; a < imag.size() && !rep.zd_witness; ++a)
        for (std::size_t b = a + 1; b < imag.size() && !rep.zd_witness; ++b)
            for (std::size_t c = 0; c < imag.size() && !rep.zd_witness; ++c)
                for (std::size_t d = c + 1; d < imag.size() && !rep.zd_witness; ++d)
                    for (int s1 : {+1, -1})
                        for (int s2 : {+1, -1}) {
                            if (a == c && b == d && s1 == s2) continue;
                            HyperNum x = HyperNum::unit(egg.n, imag[a]) +
                                         HyperNum::unit(egg.n, imag[b], s1);
                            HyperNum y = HyperNum::unit(egg.n, imag[c]) +
                                         HyperNum::unit(egg.n, imag[d], s2);
                            if (mul(x, y, ctx).is_zero()) {
                                rep.zd_witness =
                                    ZeroWitness{imag[a], imag[b], s1, imag[c], imag[d], s2};
                                break;
                            }
                        }

    // Relabeling onto the standard octonions with X -> 4, extended by oriented
    // trip preservation.
    rep.mapping_found = false;
    if (rep.xor_closed && rep.trips_associative && !rep.zd_witness) {
        const AlgebraContext& oct = AlgebraContext::get(3);
        std::array<UnitIndex, 6> rest{};  // imaginaries other than X
        int k = 0;
        for (UnitIndex v : imag)
            if (v != egg.indices[7]) rest[k++] = v;
        std::array<UnitIndex, 6> targets = {1, 2, 3, 5, 6, 7};
        std::sort(targets.begin(), targets.end());
        do {
            std::map<UnitIndex, UnitIndex> phi;
            phi[0] = 0;
            phi[egg.indices[7]] = 4;
            for (int i = 0; i < 6; ++i) phi[rest[i]] = targets[i];
            bool ok = true;
            for (UnitIndex p : imag) {
                for (UnitIndex q : imag) {
                    if (p == q) continue;
                    auto [pq, sg] = ctx.unit_product(p, q);
                    auto [pq2, sg2] = oct.unit_product(phi[p], phi[q]);
                    if (phi[pq] != pq2 || sg != sg2) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                for (int i = 0; i < 8; ++i) egg.mapping[i] = phi[egg.indices[i]];
                rep.mapping_found = true;
                break;
            }
        } while (std::next_permutation(targets.begin(), targets.end()));
    }
    rep.pass = rep.xor_closed && rep.trips_associative && !rep.zd_witness && rep.mapping_found;
    return rep;
}

std::array<SailCandidate, 4> egg_candidates(const BoxKite& hbk) {
    std::array<SailCandidate, 4> out;
    const Sail sails[4] = {Sail::ABC, Sail::ADE, Sail::DBF, Sail::EFC};
    for (int i = 0; i < 4; ++i) {
        out[i].sail = sails[i];
        out[i].octet = egg_candidate(hbk, sails[i]);
        out[i].report = verify_egg(out[i].octet);
    }
    return out;
}

std::optional<EggOctet> find_egg(const BoxKite& hbk, KiteKind spandrel_kind) {
    if (hbk.kind != KiteKind::Hidden) throw std::domain_error("find_egg: kite is not hidden");
    if (spandrel_kind == KiteKind::Hidden)
        throw std::invalid_argument("find_egg: spandrel kind must be TypeI or TypeII");
    const Sail habitat = spandrel_kind == KiteKind::TypeI ? Sail::ABC : Sail::ADE;
    EggOctet egg = egg_candidate(hbk, habitat);
    if (verify_egg(egg).pass) return egg;
    return std::nullopt;
}

Triptych triptych(UnitIndex s, int n) {
    Triptych t;
    for (BoxKite& k : enumerate_box_kites(s, n))
        if (k.kind != KiteKind::Hidden) t.kites.push_back(std::move(k));
    for (const BoxKite& k : t.kites) {
        for (auto [a, b] : {std::pair{0, 5}, {1, 4}, {2, 3}}) {
            std::array<UnitIndex, 2> strut = {std::min(k.l[a], k.l[b]), std::max(k.l[a], k.l[b])};
            ++t.strut_use[strut];
        }
    }
    for (const auto& [strut, count] : t.strut_use)
        if (count == static_cast<int>(t.kites.size())) t.common_struts.push_back(strut);
    return t;
}

std::vector<bool> hide_fill_sequence(UnitIndex l1, UnitIndex l2, UnitIndex s, int n,
                                     int augmentations) {
    if (augmentations < 0) throw std::invalid_argument("hide_fill: negative augmentation count");
    std::vector<bool> states;
    UnitIndex cur_s = s;
    int cur_n = n;
    for (int k = 0; k <= augmentations; ++k) {
        states.push_back(edge_current(l1, l2, cur_s, cur_n).has_value());
        cur_s += UnitIndex{1} << (cur_n - 1);
        ++cur_n;
    }
    return states;
}

bool hide_fill(UnitIndex l1, UnitIndex l2, UnitIndex s, int n, int augmentations) {
    return hide_fill_sequence(l1, l2, s, n, augmentations).back();
}

}  // namespace zdkit
