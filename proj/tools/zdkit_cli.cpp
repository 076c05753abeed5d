#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zdkit/emanation.hpp"
#include "zdkit/fano.hpp"
#include "zdkit/json_io.hpp"
#include "zdkit/spandrel.hpp"
#include "zdkit/twist_brocade.hpp"
#include "zdkit/verify.hpp"
#include "zdkit/zd_boxkite.hpp"

namespace {

using namespace zdkit;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << text;
    }
}

// Kite selection: canonical enumeration order, optionally pinned by zigzag.
BoxKite pick_kite(int n, UnitIndex s, const std::string& zigzag) {
    if (!zigzag.empty()) {
        UnitIndex a, b, c;
        if (std::sscanf(zigzag.c_str(), "%u,%u,%u", &a, &b, &c) != 3)
            throw CLI::ValidationError("--zigzag expects a,b,c");
        return build_box_kite(s, Trip(a, b, c), n);
    }
    auto ks = enumerate_box_kites(s, n);
    if (ks.empty()) throw std::domain_error("no box-kites for this strut constant");
    return ks.front();
}

Shading parse_shading(const std::string& s) {
    if (s == "plain") return Shading::Plain;
    if (s == "classes") return Shading::Classes;
    if (s == "skybox") return Shading::Skybox;
    throw CLI::ValidationError("--shading expects plain|classes|skybox");
}

int edge_index(const std::string& name) {
    if (name.size() != 2) throw CLI::ValidationError("--edge expects two vertex letters, e.g. AB");
    auto vert = [](char c) {
        const char* letters = "ABCDEF";
        const char* p = std::strchr(letters, std::toupper(c));
        if (!p) throw CLI::ValidationError("--edge letters must be A..F");
        return static_cast<int>(p - letters);
    };
    return vert(name[0]) * 8 + vert(name[1]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor apparatus of the Cayley-Dickson 2^N-ions"};
    app.require_subcommand(1);

    int n = 4;
    unsigned s = 1;
    std::string format = "csv";
    std::string out_path;
    std::string zigzag;
    std::string sail = "abc";
    std::string shading = "plain";
    bool census = false, count_only = false;

    auto add_common = [&](CLI::App* cmd, bool with_s) {
        cmd->add_option("--n", n, "dimension exponent N");
        if (with_s) cmd->add_option("--s", s, "strut constant");
        cmd->add_option("--format", format, "output format (csv|json|pgm|table2|dot)");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        return cmd;
    };

    auto* cmd_trips = add_common(app.add_subcommand("trips", "canonical trip system"), false);
    cmd_trips->add_flag("--count", count_only, "print only the census");

    auto* cmd_mul = app.add_subcommand("mul", "signed unit product");
    UnitIndex mi = 0, mj = 0;
    cmd_mul->add_option("--n", n, "dimension exponent N");
    cmd_mul->add_option("i", mi, "left unit index")->required();
    cmd_mul->add_option("j", mj, "right unit index")->required();

    auto* cmd_assessors = add_common(app.add_subcommand("assessors", "zero-divisor planes"), false);
    cmd_assessors->add_flag("--census", census, "print only the count");

    auto* cmd_boxkite = add_common(app.add_subcommand("boxkite", "box-kites for one strut constant"), true);
    cmd_boxkite->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");

    auto* cmd_et = add_common(app.add_subcommand("et", "emanation table"), true);
    cmd_et->add_flag("--census", census, "print filled/empty counts");
    cmd_et->add_option("--shading", shading, "pgm shading (plain|classes|skybox)");

    auto* cmd_flip = app.add_subcommand("flipbook", "PGM sequence over a strut-constant range");
    unsigned smin = 9, smax = 15;
    cmd_flip->add_option("--n", n, "dimension exponent N");
    cmd_flip->add_option("--smin", smin, "first strut constant")->required();
    cmd_flip->add_option("--smax", smax, "last strut constant")->required();
    cmd_flip->add_option("--out", out_path, "output directory")->required();
    cmd_flip->add_option("--shading", shading, "pgm shading (plain|classes|skybox)");

    auto* cmd_brocade = add_common(app.add_subcommand("brocade", "7-in-1 assessor table"), false);

    auto* cmd_twist = add_common(app.add_subcommand("twist", "catamaran twist products"), true);
    std::string edge;
    bool hunt = false;
    cmd_twist->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");
    cmd_twist->add_option("--edge", edge, "edge to twist, e.g. AB");
    cmd_twist->add_flag("--hunt", hunt, "emit the three Royal Hunt diagrams");

    auto* cmd_explode = add_common(app.add_subcommand("explode", "inflate one sail into a hidden box-kite"), true);
    cmd_explode->add_option("--sail", sail, "sail (abc|ade|dbf|efc)");
    cmd_explode->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");

    auto* cmd_spandrel = add_common(app.add_subcommand("spandrel", "the four-sail explosion quartet"), true);
    cmd_spandrel->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");

    auto* cmd_egg = add_common(app.add_subcommand("egg", "cowbird egg of one explosion"), true);
    cmd_egg->add_option("--sail", sail, "source sail (abc|ade|dbf|efc)");
    cmd_egg->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");

    auto* cmd_fano = add_common(app.add_subcommand("fano", "oriented Fano presentation"), true);
    cmd_fano->add_option("--zigzag", zigzag, "seed zigzag L-trip a,b,c");

    auto* cmd_verify = app.add_subcommand("verify", "run the acceptance suites");
    std::string suite = "all";
    std::string cli_path;
    cmd_verify->add_option("--suite", suite, "all|tables|cowbird|fano|et");
    cmd_verify->add_option("--cli", cli_path, "CLI binary for the determinism criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (n > max_dimension_exponent() || n < 1) {
        std::cerr << "error: --n " << n << " outside 1.." << max_dimension_exponent()
                  << " (cap set by ZDKIT_MAX_N)\n";
        return 2;
    }

    try {
        if (cmd_trips->parsed()) {
            auto trips = generate_trips(n);
            if (count_only) emit(std::to_string(trips.size()), out_path);
            else emit(format == "json" ? trips_json(trips) : trips_csv(trips), out_path);
        } else if (cmd_mul->parsed()) {
            auto [k, sg] = AlgebraContext::get(n).unit_product(mi, mj);
            std::ostringstream o;
            o << "e" << mi << " * e" << mj << " = " << (sg < 0 ? "-" : "") << "e" << k;
            emit(o.str(), out_path);
        } else if (cmd_assessors->parsed()) {
            auto as = enumerate_assessors(n);
            if (census) emit(std::to_string(as.size()), out_path);
            else emit(format == "json" ? assessors_json(as) : assessors_csv(as), out_path);
        } else if (cmd_boxkite->parsed()) {
            if (!zigzag.empty()) emit(boxkite_json(pick_kite(n, s, zigzag)), out_path);
            else emit(boxkites_json(enumerate_box_kites(s, n)), out_path);
        } else if (cmd_et->parsed()) {
            const EmanationTable et = build_et(s, n);
            if (census) {
                emit("filled=" + std::to_string(et.filled) +
                         " empty=" + std::to_string(et.empty_count()),
                     out_path);
            } else if (format == "pgm") {
                if (out_path.empty()) throw CLI::ValidationError("pgm output needs --out");
                render_et(et, parse_shading(shading), out_path);
            } else if (format == "json") {
                emit(et_census_json(et), out_path);
            } else {
                emit(et_csv(et), out_path);
            }
        } else if (cmd_flip->parsed()) {
            auto files = flipbook(smin, smax, n, out_path, parse_shading(shading));
            std::ostringstream o;
            for (const auto& f : files) o << f.string() << "\n";
            std::cout << o.str();
        } else if (cmd_brocade->parsed()) {
            const Brocade b = brocade(n);
            emit(format == "json" ? brocade_json(b) : brocade_csv(b), out_path);
        } else if (cmd_twist->parsed()) {
            const BoxKite bk = pick_kite(n, s, zigzag);
            if (hunt) {
                std::ostringstream o;
                for (const Catamaran& cat : catamarans(bk))
                    o << royal_hunt_json(royal_hunt(bk, cat)) << "\n";
                emit(o.str(), out_path);
            } else {
                if (edge.empty()) throw CLI::ValidationError("twist needs --edge or --hunt");
                const int code = edge_index(edge);
                emit(twist_json(twist_edge(bk, code / 8, code % 8), bk.n), out_path);
            }
        } else if (cmd_explode->parsed()) {
            const Explosion ex = explode(pick_kite(n, s, zigzag), sail_from_string(sail));
            emit(boxkite_json(ex.hbk), out_path);
        } else if (cmd_spandrel->parsed()) {
            const Spandrel sp = spandrel_of(pick_kite(n, s, zigzag));
            emit(format == "table2" ? table2_text(sp) : spandrel_json(sp), out_path);
        } else if (cmd_egg->parsed()) {
            const BoxKite bk = pick_kite(n, s, zigzag);
            const Explosion ex = explode(bk, sail_from_string(sail));
            EggOctet egg = egg_candidate(ex.hbk, bk.kind == KiteKind::TypeII ? Sail::ADE : Sail::ABC);
            const EggReport rep = verify_egg(egg);
            emit(egg_json(egg, rep), out_path);
        } else if (cmd_fano->parsed()) {
            const FanoPresentation p = from_box_kite(pick_kite(n, s, zigzag));
            emit(format == "dot" ? fano_dot(p) : fano_json(p), out_path);
        } else if (cmd_verify->parsed()) {
            if (cli_path.empty() && argv && argv[0]) cli_path = argv[0];
            const auto results = run_acceptance(suite, cli_path);
            const int failures = report_acceptance(results);
            if (failures > 0) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
