#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zdkit {

using UnitIndex = std::uint32_t;

/// Dimension-exponent cap for AlgebraContext construction.
/// Read once from ZDKIT_MAX_N (default 12).
int max_dimension_exponent();

/// Oriented associative triple of unit indices: e_p * e_q = +e_r, with
/// p ^ q == r.  Cyclic rotations denote the same trip; canonical storage
/// rotates the smallest index into the first slot.
struct Trip {
    UnitIndex p{}, q{}, r{};

    constexpr Trip() = default;
    Trip(UnitIndex p_, UnitIndex q_, UnitIndex r_);

    [[nodiscard]] Trip canonical() const;
    [[nodiscard]] bool contains(UnitIndex i) const { return i == p || i == q || i == r; }
    /// True if (x, y) occurs in this trip's cyclic order (so e_x * e_y = +e_xy).
    [[nodiscard]] bool cyclic_pair(UnitIndex x, UnitIndex y) const;

    auto operator<=>(const Trip&) const = default;
};

/// All canonical trips of the 2^n-ions, built by the three production rules:
/// inherit the previous level, adjoin (L, G, G+L) for 0 < L < G, and for every
/// inherited trip fix each index in turn, add G to the other two and swap them.
/// Throws std::invalid_argument for n < 2.
std::vector<Trip> generate_trips(int n);

/// Immutable per-level algebra data: the trip system plus the full signed
/// unit-product table.  Instances are cached and shareable across threads.
class AlgebraContext {
  public:
    /// Cached accessor; builds the context on first use.
    /// Throws std::invalid_argument if n < 1 or n exceeds the configured cap.
    static const AlgebraContext& get(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] UnitIndex dim() const { return UnitIndex{1} << n_; }
    /// Generator index 2^(n-1).
    [[nodiscard]] UnitIndex g_top() const { return UnitIndex{1} << (n_ - 1); }
    [[nodiscard]] const std::vector<Trip>& trips() const { return trips_; }

    /// Signed product of basis units: returns (i ^ j, sign).
    /// e_0 is a two-sided identity; e_i * e_i = -e_0 for i != 0.
    /// Throws std::invalid_argument for out-of-range indices.
    [[nodiscard]] std::pair<UnitIndex, int> unit_product(UnitIndex i, UnitIndex j) const;

  private:
    explicit AlgebraContext(int n);

    int n_;
    std::vector<Trip> trips_;
    std::vector<std::int8_t> sign_;  // dim x dim, row-major, imaginaries only
};

/// Exact-integer element of the 2^n-ions.
struct HyperNum {
    int n{};
    std::vector<std::int64_t> c;

    static HyperNum zero(int n);
    static HyperNum unit(int n, UnitIndex i, std::int64_t coeff = 1);

    [[nodiscard]] bool is_zero() const;
    bool operator==(const HyperNum&) const = default;
};

HyperNum operator+(const HyperNum& x, const HyperNum& y);
HyperNum operator-(const HyperNum& x, const HyperNum& y);

/// Conjugate: negates every imaginary coefficient.
HyperNum conjugate(const HyperNum& x);

/// Bilinear product through the trip-derived sign table.
/// Throws std::invalid_argument on dimension mismatch.
HyperNum mul(const HyperNum& x, const HyperNum& y, const AlgebraContext& ctx);

/// Independent product by recursive Cayley-Dickson doubling on coefficient
/// halves, bottoming out at the reals.  The doubling variant is calibrated
/// once against the trip system (see oracle_variant).
HyperNum oracle_mul(const HyperNum& x, const HyperNum& y);

/// Doubling recursion specialised to basis units; works at any level without
/// building a context, so it also serves deep generator-loading chains.
std::pair<UnitIndex, int> oracle_unit_product(UnitIndex i, UnitIndex j);

/// Identifier of the calibrated doubling variant.  The 16 candidates differ in
/// conjugate placement; exactly one reproduces the Rule-0/1/2 trip sets at
/// N = 3 and N = 4.  Throws std::logic_error if none (or several) match.
int oracle_variant();

}  // namespace zdkit
