#include "zdkit/fano.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zdkit {

namespace {

constexpr int ni(FanoNode p) { return static_cast<int>(p); }
constexpr int li(FanoLine l) { return static_cast<int>(l); }

constexpr std::array<std::array<FanoNode, 3>, 7> kLines = {{
    {FanoNode::A, FanoNode::B, FanoNode::C},  // circle
    {FanoNode::A, FanoNode::D, FanoNode::E},  // left side, midpoint a
    {FanoNode::D, FanoNode::B, FanoNode::F},  // right side, midpoint b
    {FanoNode::E, FanoNode::F, FanoNode::C},  // bottom side, midpoint c
    {FanoNode::A, FanoNode::S, FanoNode::F},
    {FanoNode::B, FanoNode::S, FanoNode::E},
    {FanoNode::C, FanoNode::S, FanoNode::D},
}};

constexpr const char* kLineNames[7] = {"circle", "side_a", "side_b", "side_c",
                                       "strut_a", "strut_b", "strut_c"};
constexpr char kNodeNames[7] = {'s', 'a', 'b', 'c', 'd', 'e', 'f'};

bool on_line(FanoLine line, FanoNode p) {
    const auto& pts = kLines[li(line)];
    return pts[0] == p || pts[1] == p || pts[2] == p;
}

}  // namespace

std::array<FanoNode, 3> line_nodes(FanoLine line) { return kLines[li(line)]; }

std::string to_string(FanoLine line) { return kLineNames[li(line)]; }

std::string to_string(FanoShape s) {
    switch (s) {
        case FanoShape::TypeI: return "TypeI";
        case FanoShape::TypeII: return "TypeII";
        case FanoShape::AllButZigzag: return "AllButZigzag";
        case FanoShape::TBar: return "TBar";
        case FanoShape::PupTent: return "PupTent";
        case FanoShape::SwallowsTail: return "SwallowsTail";
        case FanoShape::ShrimpFork: return "ShrimpFork";
        case FanoShape::Switchblade: return "Switchblade";
        default: return "Unrecognized";
    }
}

std::string SymbolicLabel::text() const {
    static const char* kLoadNames[] = {"g", "G", "Gamma"};
    std::string out(1, base);
    for (int k = 0; k < 8; ++k)
        if (loadings & (1u << k)) {
            out += '+';
            out += k < 3 ? kLoadNames[k] : ("g" + std::to_string(k));
        }
    return out;
}

std::array<bool, 7> FanoPresentation::flags() const {
    std::array<bool, 7> out{};
    for (int i = 0; i < kFanoLines; ++i) {
        const auto& pts = kLines[i];
        const UnitIndex x = node[ni(pts[0])], y = node[ni(pts[1])], z = node[ni(pts[2])];
        auto [idx, sg] = oracle_unit_product(x, y);
        if (idx != z) throw std::logic_error("FanoPresentation: line not XOR-closed");
        out[i] = sg == +1;
    }
    return out;
}

bool FanoPresentation::preserved(FanoLine line) const { return flags()[li(line)]; }

FanoPresentation from_box_kite(const BoxKite& bk) {
    FanoPresentation p;
    p.base_n = bk.n;
    p.node = {bk.s, bk.l[0], bk.l[1], bk.l[2], bk.l[3], bk.l[4], bk.l[5]};
    for (int i = 0; i < 7; ++i) p.sym[i] = {kNodeNames[i], 0};
    return p;
}

FanoPresentation pl(const FanoPresentation& p, FanoLine fixed_line) {
    FanoPresentation q = p;
    const UnitIndex g = UnitIndex{1} << (p.base_n - 1 + p.loads);
    for (int i = 0; i < 7; ++i) {
        const auto pos = static_cast<FanoNode>(i);
        if (!on_line(fixed_line, pos)) {
            q.node[i] += g;
            q.sym[i].loadings |= static_cast<std::uint8_t>(1u << p.loads);
        }
    }
    q.loads = p.loads + 1;
    return q;
}

FanoPresentation dx(const FanoPresentation& p, FanoLine fixed_line, DxOp op) {
    const auto& pts = kLines[li(fixed_line)];
    const FanoNode via = op == DxOp::H ? pts[0] : op == DxOp::D ? pts[1] : pts[2];
    // The two other lines through `via` each hold two off-line nodes; swap
    // within each.
    FanoPresentation q = p;
    for (int i = 0; i < kFanoLines; ++i) {
        const auto line = static_cast<FanoLine>(i);
        if (line == fixed_line || !on_line(line, via)) continue;
        std::array<FanoNode, 2> pair{};
        int k = 0;
        for (FanoNode nd : kLines[i])
            if (nd != via) pair[k++] = nd;
        std::swap(q.node[ni(pair[0])], q.node[ni(pair[1])]);
        std::swap(q.sym[ni(pair[0])], q.sym[ni(pair[1])]);
    }
    return q;
}

int reversed_count(const FanoPresentation& p) {
    const auto f = p.flags();
    return static_cast<int>(std::count(f.begin(), f.end(), false));
}

bool flowmorphic(const FanoPresentation& p1, const FanoPresentation& p2) {
    return p1.flags() == p2.flags();
}

ShapeReport shape(const FanoPresentation& p) {
    ShapeReport rep;
    const auto f = p.flags();
    for (int i = 0; i < kFanoLines; ++i)
        if (!f[i]) rep.reversed.push_back(static_cast<FanoLine>(i));

    const auto rev = [&](FanoLine l) { return !f[li(l)]; };
    const int sides = rev(FanoLine::SideA) + rev(FanoLine::SideB) + rev(FanoLine::SideC);
    const int struts = rev(FanoLine::StrutA) + rev(FanoLine::StrutB) + rev(FanoLine::StrutC);
    const int nrev = static_cast<int>(rep.reversed.size());

    std::ostringstream raw;
    for (const FanoLine l : rep.reversed) raw << to_string(l) << " ";

    if (nrev == 0) {
        rep.shape = FanoShape::TypeI;
    } else if (nrev == 2 && struts == 2 && !rev(FanoLine::Circle)) {
        rep.shape = FanoShape::TypeII;
        rep.detail = raw.str();
    } else if (nrev == 6 && !rev(FanoLine::Circle)) {
        rep.shape = FanoShape::AllButZigzag;
    } else if (nrev == 2 && rev(FanoLine::SideC) && rev(FanoLine::StrutB)) {
        rep.shape = FanoShape::ShrimpFork;
        rep.detail = "corner e";
    } else if (nrev == 2 && rev(FanoLine::SideB) && rev(FanoLine::StrutC)) {
        rep.shape = FanoShape::Switchblade;
        rep.detail = "corner d";
    } else if (nrev == 2 && sides == 1 && struts == 1) {
        // matched-letter side/strut pair shares the midpoint node
        for (char c : {'a', 'b', 'c'}) {
            const auto side = static_cast<FanoLine>(li(FanoLine::SideA) + (c - 'a'));
            const auto strut = static_cast<FanoLine>(li(FanoLine::StrutA) + (c - 'a'));
            if (rev(side) && rev(strut)) {
                rep.shape = FanoShape::TBar;
                rep.detail = std::string("midpoint ") + c;
            }
        }
        if (rep.shape != FanoShape::TBar) {
            rep.shape = FanoShape::Unrecognized;
            rep.detail = raw.str();
        }
    } else if (nrev == 4 && sides == 3 && struts == 1 && !rev(FanoLine::Circle)) {
        rep.shape = FanoShape::PupTent;
        for (char c : {'a', 'b', 'c'})
            if (rev(static_cast<FanoLine>(li(FanoLine::StrutA) + (c - 'a'))))
                rep.detail = std::string("strut ") + c;
    } else if (nrev == 4 && struts == 3 && sides == 1 && !rev(FanoLine::Circle)) {
        rep.shape = FanoShape::SwallowsTail;
        for (char c : {'a', 'b', 'c'})
            if (rev(static_cast<FanoLine>(li(FanoLine::SideA) + (c - 'a'))))
                rep.detail = std::string("side ") + c;
    } else {
        rep.shape = FanoShape::Unrecognized;
        rep.detail = raw.str();
    }
    return rep;
}

namespace {

// CPO rotation of an XOR-closed triple with the given lead index first.
Trip cpo_with_lead(UnitIndex lead, UnitIndex x, UnitIndex y) {
    auto [idx, sg] = oracle_unit_product(lead, x);
    Trip t = sg == +1 && idx == y ? Trip{lead, x, y} : Trip{lead, y, x};
    auto [i2, s2] = oracle_unit_product(t.p, t.q);
    if (i2 != t.r || s2 != +1) throw std::logic_error("cpo_with_lead: triple is not a trip");
    return t;
}

FanoPresentation present_circle(const BoxKite& hbk, const Trip& circle) {
    FanoPresentation p;
    p.base_n = hbk.n;
    p.node[ni(FanoNode::S)] = hbk.s;
    p.node[ni(FanoNode::A)] = circle.p;
    p.node[ni(FanoNode::B)] = circle.q;
    p.node[ni(FanoNode::C)] = circle.r;
    p.node[ni(FanoNode::D)] = circle.r ^ hbk.s;
    p.node[ni(FanoNode::E)] = circle.q ^ hbk.s;
    p.node[ni(FanoNode::F)] = circle.p ^ hbk.s;
    for (int i = 0; i < 7; ++i) p.sym[i] = {kNodeNames[i], 0};
    return p;
}

}  // namespace

FanoPresentation zigzag_presentation(const Explosion& ex) {
    return present_circle(ex.hbk, ex.hbk.zigzag().canonical());
}

FanoPresentation trefoil_presentation(const Explosion& ex) {
    const Trip zz = ex.hbk.zigzag().canonical();
    const UnitIndex a = zz.p;
    const UnitIndex d = zz.r ^ ex.hbk.s, e = zz.q ^ ex.hbk.s;
    return present_circle(ex.hbk, cpo_with_lead(a, d, e));
}

std::string fano_dot(const FanoPresentation& p) {
    std::ostringstream out;
    out << "digraph fano {\n";
    for (int i = 0; i < 7; ++i)
        out << "  n" << i << " [label=\"" << kNodeNames[i] << "=" << p.node[i] << "\"];\n";
    const auto f = p.flags();
    for (int i = 0; i < kFanoLines; ++i) {
        auto pts = kLines[i];
        if (!f[i]) std::reverse(pts.begin(), pts.end());
        for (int k = 0; k < 3; ++k)
            out << "  n" << ni(pts[k]) << " -> n" << ni(pts[(k + 1) % 3]) << " [label=\""
                << kLineNames[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace zdkit
