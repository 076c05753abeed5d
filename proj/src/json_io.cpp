#include "zdkit/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace zdkit {

using Json = nlohmann::ordered_json;

namespace {

Json trip_json(const Trip& t) { return Json::array({t.p, t.q, t.r}); }

Json kite_json_obj(const BoxKite& bk) {
    Json j;
    j["n"] = bk.n;
    j["s"] = bk.s;
    j["x"] = bk.x;
    Json verts;
    for (int v = 0; v < kVertexCount; ++v)
        verts[std::string(1, kVertexLetter[v])] = Json::array({bk.l[v], bk.u_of(v)});
    j["vertices"] = verts;
    Json signs;
    for (std::size_t e = 0; e < kEdges.size(); ++e) {
        std::string name{kVertexLetter[kEdges[e].first]};
        name += kVertexLetter[kEdges[e].second];
        signs[name] = std::string(1, bk.edge_signs[e]);
    }
    j["edge_signs"] = signs;
    j["kind"] = to_string(bk.kind);
    return j;
}

Json assessor_json_obj(const Assessor& a) { return Json::array({a.l, a.u}); }

Json key_json(const std::array<UnitIndex, 6>& key) {
    Json j = Json::array();
    for (UnitIndex k : key) j.push_back(k);
    return j;
}

}  // namespace

std::string trips_json(const std::vector<Trip>& trips) {
    Json j = Json::array();
    for (const Trip& t : trips) j.push_back(trip_json(t));
    return j.dump();
}

std::string trips_csv(const std::vector<Trip>& trips) {
    std::ostringstream out;
    out << "p,q,r\n";
    for (const Trip& t : trips) out << t.p << "," << t.q << "," << t.r << "\n";
    return out.str();
}

std::string assessors_csv(const std::vector<Assessor>& as) {
    std::ostringstream out;
    out << "l,u,s\n";
    for (const Assessor& a : as) out << a.l << "," << a.u << "," << a.strut_constant() << "\n";
    return out.str();
}

std::string assessors_json(const std::vector<Assessor>& as) {
    Json j = Json::array();
    for (const Assessor& a : as)
        j.push_back(Json{{"l", a.l}, {"u", a.u}, {"s", a.strut_constant()}});
    return j.dump();
}

std::string boxkite_json(const BoxKite& bk) { return kite_json_obj(bk).dump(2); }

std::string boxkites_json(const std::vector<BoxKite>& ks) {
    Json j = Json::array();
    for (const BoxKite& k : ks) j.push_back(kite_json_obj(k));
    return j.dump(2);
}

std::string spandrel_json(const Spandrel& sp) {
    Json j;
    j["source_key"] = key_json(sp.source.key());
    j["source_s"] = sp.source.s;
    j["n"] = sp.source.n;
    j["x_new"] = sp.x_new;
    Json members = Json::array();
    Json eggs = Json::array();
    for (const Explosion& ex : sp.members) {
        Json m;
        m["sail"] = to_string(ex.sail);
        m["sail_l_trip"] = trip_json(ex.sail_trip);
        m["sail_u"] = Json::array({ex.sail_u[0], ex.sail_u[1], ex.sail_u[2]});
        m["hbk"] = kite_json_obj(ex.hbk);
        members.push_back(m);
        auto egg = find_egg(ex.hbk, sp.source.kind);
        if (egg) {
            EggOctet e = *egg;
            EggReport rep = verify_egg(e);
            Json je;
            je["sail"] = to_string(ex.sail);
            je["indices"] = Json(e.indices);
            je["mapping"] = Json(e.mapping);
            je["pass"] = rep.pass;
            eggs.push_back(je);
        }
    }
    j["members"] = members;
    j["eggs"] = eggs;
    return j.dump(2);
}

std::string egg_json(const EggOctet& egg, const EggReport& rep) {
    Json j;
    j["n"] = egg.n;
    j["indices"] = Json(egg.indices);
    j["mapping"] = Json(egg.mapping);
    j["xor_closed"] = rep.xor_closed;
    j["trips_associative"] = rep.trips_associative;
    if (rep.zd_witness) {
        const ZeroWitness& w = *rep.zd_witness;
        j["zero_witness"] = Json{{"i", w.i}, {"j", w.j}, {"si", w.si},
                                 {"k", w.k}, {"l", w.l}, {"sj", w.sj}};
    }
    j["mapping_found"] = rep.mapping_found;
    j["pass"] = rep.pass;
    return j.dump(2);
}

std::string twist_json(const TwistResult& t, int n) {
    Json j;
    j["n"] = n;
    j["target_s"] = t.target_s;
    j["pair"] = Json::array({assessor_json_obj(t.pair[0]), assessor_json_obj(t.pair[1])});
    return j.dump(2);
}

std::string royal_hunt_json(const RoyalHunt& rh) {
    Json j;
    j["start_s"] = rh.start_s;
    j["targets"] = Json::array({rh.target_s[0], rh.target_s[1]});
    for (int k = 0; k < 2; ++k) {
        Json quad = Json::array();
        for (const Assessor& a : rh.twisted[k]) quad.push_back(assessor_json_obj(a));
        j[k == 0 ? "twisted_first" : "twisted_second"] = quad;
    }
    j["strut_trip"] = rh.strut_trip;
    j["second_twist_commutes"] = rh.second_twist_commutes;
    return j.dump(2);
}

std::string fano_json(const FanoPresentation& p) {
    Json j;
    static constexpr const char* kNodes[7] = {"s", "a", "b", "c", "d", "e", "f"};
    Json nodes;
    for (int i = 0; i < 7; ++i) {
        nodes[kNodes[i]] = Json{{"index", p.node[i]}, {"symbol", p.sym[i].text()}};
    }
    j["nodes"] = nodes;
    const auto f = p.flags();
    Json lines = Json::array();
    for (int i = 0; i < kFanoLines; ++i) {
        const auto line = static_cast<FanoLine>(i);
        const auto pts = line_nodes(line);
        Json trip = Json::array();
        for (FanoNode nd : pts) trip.push_back(p.node[static_cast<int>(nd)]);
        lines.push_back(Json{{"line", to_string(line)}, {"trip", trip}, {"preserved", f[i]}});
    }
    j["lines"] = lines;
    j["reversed_count"] = reversed_count(p);
    const ShapeReport rep = shape(p);
    j["shape"] = to_string(rep.shape);
    if (!rep.detail.empty()) j["shape_detail"] = rep.detail;
    return j.dump(2);
}

std::string brocade_json(const Brocade& b) {
    Json j;
    j["n"] = b.n;
    j["rows"] = Json(b.rows);
    j["cols"] = Json(b.cols);
    Json cells = Json::array();
    for (std::size_t ri = 0; ri < b.rows.size(); ++ri) {
        Json row = Json::array();
        for (std::size_t ci = 0; ci < b.cols.size(); ++ci) {
            Json cell = Json::array();
            for (const BrocadeEntry& e : b.cells[ri][ci]) {
                cell.push_back(Json{{"s", e.s},
                                    {"letter", std::string(1, e.letter)},
                                    {"kite_key", key_json(e.kite_key)},
                                    {"kind", to_string(e.kind)}});
            }
            row.push_back(cell);
        }
        cells.push_back(row);
    }
    j["cells"] = cells;
    return j.dump(2);
}

}  // namespace zdkit
