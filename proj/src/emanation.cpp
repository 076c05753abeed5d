#include "zdkit/emanation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zdkit {

namespace {

std::vector<UnitIndex> et_labels(UnitIndex s, int n) {
    const UnitIndex g = UnitIndex{1} << (n - 1);
    std::vector<UnitIndex> small;
    for (UnitIndex l = 1; l < g; ++l)
        if (l != s && l < (l ^ s)) small.push_back(l);
    std::vector<UnitIndex> labels(small);
    for (auto it = small.rbegin(); it != small.rend(); ++it) labels.push_back(*it ^ s);
    return labels;
}

int label_pos(const std::vector<UnitIndex>& labels, UnitIndex l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw std::invalid_argument("emanation: not a table label");
    return static_cast<int>(it - labels.begin());
}

}  // namespace

std::int32_t EmanationTable::at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * labels.size() + col];
}

bool EmanationTable::tautological(int row, int col) const {
    return row == col || labels[row] == (labels[col] ^ s);
}

std::int32_t EmanationTable::at_labels(UnitIndex r, UnitIndex c) const {
    return at(label_pos(labels, r), label_pos(labels, c));
}

EmanationTable build_et(UnitIndex s, int n) {
    const UnitIndex g = UnitIndex{1} << (n - 1);
    if (s == 0 || s >= g) throw std::invalid_argument("build_et: need 0 < s < G");
    EmanationTable et;
    et.n = n;
    et.s = s;
    et.labels = et_labels(s, n);
    const int m = et.size();
    et.cells.assign(static_cast<std::size_t>(m) * m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (et.tautological(i, j)) continue;
            const UnitIndex r = et.labels[i], c = et.labels[j];
            if (edge_current(r, c, s, n).has_value()) {
                et.cells[static_cast<std::size_t>(i) * m + j] = static_cast<std::int32_t>(r ^ c);
                ++et.filled;
            }
        }
    }
    return et;
}

bool formula_band(UnitIndex s, int n) {
    if (n < 5) return false;
    const UnitIndex g = UnitIndex{1} << (n - 2);
    return s > g && s < 2 * g && (s - g) <= 8;
}

bool predict_fill(UnitIndex r, UnitIndex c, UnitIndex s, int n) {
    if (!formula_band(s, n))
        throw std::domain_error("predict_fill: strut constant outside the single-extra-bit band");
    const UnitIndex g = UnitIndex{1} << (n - 2);
    const UnitIndex top = UnitIndex{1} << (n - 1);
    if (r == 0 || r >= top || c == 0 || c >= top || r == s || c == s)
        throw std::invalid_argument("predict_fill: labels out of range");
    if (r == c || r == (c ^ s)) return false;
    const UnitIndex m = s % g;
    const UnitIndex p = r ^ c;
    return r == g || r == m || c == g || c == m || p == g || p == m;
}

bool skybox_check(const EmanationTable& small, const EmanationTable& big) {
    if (small.s != big.s) throw std::invalid_argument("skybox_check: strut constants differ");
    if (big.n != small.n + 1) throw std::invalid_argument("skybox_check: levels not consecutive");
    const UnitIndex g = UnitIndex{1} << (small.n - 1);
    const UnitIndex s = small.s;

    // New-half labels must occupy one contiguous central block.
    const int m = small.size();
    for (int k = 0; k < big.size(); ++k) {
        const bool central = k >= m / 2 && k < m / 2 + m + 2;
        if ((big.labels[k] >= g) != central) return false;
    }

    // Nested copy: the g-shifted block repeats the small fill pattern, small
    // contents becoming big cell values verbatim.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (small.tautological(i, j)) continue;
            const UnitIndex r = small.labels[i], c = small.labels[j];
            const std::int32_t lo = small.at(i, j);
            const std::int32_t hi = big.at_labels(g + r, g + c);
            if ((lo < 0) != (hi < 0)) return false;
            if (lo >= 0 && lo != hi) return false;
        }
    }

    // Label lines: row/col g carries the small labels as values, row/col g+s
    // the same values in strut-opposite (reversed) order.
    for (UnitIndex y : small.labels) {
        if (big.at_labels(g, g + y) != static_cast<std::int32_t>(y)) return false;
        if (big.at_labels(g + y, g) != static_cast<std::int32_t>(y)) return false;
        if (big.at_labels(g + s, g + y) != static_cast<std::int32_t>(s ^ y)) return false;
        if (big.at_labels(g + y, g + s) != static_cast<std::int32_t>(s ^ y)) return false;
    }
    return true;
}

namespace {

unsigned char pixel_value(const EmanationTable& et, int i, int j, Shading shading) {
    const std::int32_t v = et.at(i, j);
    if (v < 0) return 255;
    switch (shading) {
        case Shading::Plain: return 0;
        case Shading::Classes: {
            const UnitIndex g = UnitIndex{1} << (et.n - 2);
            const UnitIndex m = et.s % g;
            const UnitIndex r = et.labels[i], c = et.labels[j];
            const auto in_class = [&](UnitIndex k) { return k == g || k == m; };
            if (in_class(static_cast<UnitIndex>(v))) return 0;
            if (in_class(r) || in_class(c)) return 96;
            return 160;
        }
        case Shading::Skybox: {
            const UnitIndex g = UnitIndex{1} << (et.n - 2);
            const UnitIndex r = et.labels[i], c = et.labels[j];
            if (r == g || c == g || r == (g ^ et.s) || c == (g ^ et.s)) return 160;
            return 0;
        }
    }
    return 0;
}

}  // namespace

void render_et(const EmanationTable& et, Shading shading, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_et: cannot open " + path.string());
    const int m = et.size();
    out << "P5\n" << m << " " << m << "\n255\n";
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.put(static_cast<char>(pixel_value(et, i, j, shading)));
    if (!out) throw std::runtime_error("render_et: write failed for " + path.string());
}

std::vector<std::filesystem::path> flipbook(UnitIndex s_lo, UnitIndex s_hi, int n,
                                            const std::filesystem::path& dir, Shading shading) {
    std::vector<std::filesystem::path> files;
    if (s_lo > s_hi) return files;
    std::filesystem::create_directories(dir);
    for (UnitIndex s = s_lo; s <= s_hi; ++s) {
        char name[32];
        std::snprintf(name, sizeof name, "et_n%d_s%02u.pgm", n, s);
        const auto path = dir / name;
        render_et(build_et(s, n), shading, path);
        files.push_back(path);
    }
    return files;
}

std::string et_csv(const EmanationTable& et) {
    std::ostringstream out;
    for (UnitIndex l : et.labels) out << "," << l;
    out << "\n";
    const int m = et.size();
    for (int i = 0; i < m; ++i) {
        out << et.labels[i];
        for (int j = 0; j < m; ++j) {
            out << ",";
            if (const auto v = et.at(i, j); v >= 0) out << v;
        }
        out << "\n";
    }
    return out.str();
}

std::string et_census_json(const EmanationTable& et) {
    std::ostringstream out;
    out << "{\"n\":" << et.n << ",\"s\":" << et.s << ",\"filled\":" << et.filled
        << ",\"empty\":" << et.empty_count() << "}";
    return out.str();
}

}  // namespace zdkit
