#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "zdkit/zd_boxkite.hpp"

namespace zdkit {

/// Square multiplication table of mutual zero-divisions for fixed s and n.
/// Labels are the 2^(n-1)-2 L-indices != s in nested-parentheses order:
/// strut pairs sorted by smaller member, smaller members ascending on the
/// left, their partners mirrored on the right, so position k and size-1-k
/// are strut opposites.
struct EmanationTable {
    int n{};
    UnitIndex s{};
    std::vector<UnitIndex> labels;
    std::vector<std::int32_t> cells;  // row-major; emanated L-index, -1 empty
    int filled{};

    [[nodiscard]] int size() const { return static_cast<int>(labels.size()); }
    [[nodiscard]] std::int32_t at(int row, int col) const;
    /// Tautologically empty: main diagonal and strut-opposite diagonal.
    [[nodiscard]] bool tautological(int row, int col) const;
    /// Value for a label pair (rows/cols addressed by L-index, not position).
    [[nodiscard]] std::int32_t at_labels(UnitIndex r, UnitIndex c) const;
    [[nodiscard]] int empty_count() const { return size() * size() - filled; }
};

/// Brute-force construction: cell(r,c) = r^c when the two assessors mutually
/// zero-divide on some diagonal pairing, empty otherwise.
EmanationTable build_et(UnitIndex s, int n);

/// Sand-mandala fill formula, valid in the single-extra-high-bit band
/// (g < s <= g+8 with g = 2^(n-2), s not a power of two): a cell is filled
/// iff row, column, or their XOR equals g or s mod g.  Throws
/// std::domain_error outside the band; fall back to build_et there.
bool predict_fill(UnitIndex r, UnitIndex c, UnitIndex s, int n);

/// True iff the supported band of predict_fill covers (s, n).
bool formula_band(UnitIndex s, int n);

/// Nesting check between consecutive levels at the same s: the smaller
/// table's fill pattern recurs in the bigger one on the g-shifted label
/// block, and the g / g+s label lines carry the small labels as cell values,
/// the latter in strut-opposite (reversed) order.
/// Throws std::invalid_argument on mismatched s or non-consecutive n.
bool skybox_check(const EmanationTable& et_small, const EmanationTable& et_big);

enum class Shading { Plain, Classes, Skybox };

/// Binary PGM (P5, maxval 255) render, one pixel per cell.  Gray tiers:
/// 255 empty, 0 filled (Plain) or g/s-class content (Classes), 96 parallel
/// label class, 160 other filled / skybox border lines.
void render_et(const EmanationTable& et, Shading shading, const std::filesystem::path& path);

/// One render per s in [s_lo, s_hi]; files named et_n<n>_s<ss>.pgm.
std::vector<std::filesystem::path> flipbook(UnitIndex s_lo, UnitIndex s_hi, int n,
                                            const std::filesystem::path& dir,
                                            Shading shading = Shading::Plain);

/// CSV with labels as header row/column; empty cells blank.
std::string et_csv(const EmanationTable& et);

/// {"n":..,"s":..,"filled":..,"empty":..} with empty = all non-filled cells.
std::string et_census_json(const EmanationTable& et);

}  // namespace zdkit
