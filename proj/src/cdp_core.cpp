#include "zdkit/cdp_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>

namespace zdkit {

int max_dimension_exponent() {
    static const int cap = [] {
        if (const char* env = std::getenv("ZDKIT_MAX_N")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 12;
    }();
    return cap;
}

Trip::Trip(UnitIndex p_, UnitIndex q_, UnitIndex r_) : p(p_), q(q_), r(r_) {
    if (p == 0 || q == 0 || r == 0 || (p ^ q) != r)
        throw std::invalid_argument("Trip: indices must be nonzero with p^q==r");
}

Trip Trip::canonical() const {
    Trip t = *this;
    const UnitIndex m = std::min({p, q, r});
    while (t.p != m) t = Trip(t.q, t.r, t.p);
    return t;
}

bool Trip::cyclic_pair(UnitIndex x, UnitIndex y) const {
    return (x == p && y == q) || (x == q && y == r) || (x == r && y == p);
}

std::vector<Trip> generate_trips(int n) {
    if (n < 2) throw std::invalid_argument("generate_trips: n must be >= 2");
    std::vector<Trip> cur{Trip(1, 2, 3)};
    for (int level = 3; level <= n; ++level) {
        const UnitIndex g = UnitIndex{1} << (level - 1);
        std::vector<Trip> next = cur;  // Rule 0
        next.reserve(cur.size() * 4 + g);
        for (UnitIndex l = 1; l < g; ++l)  // Rule 1
            next.push_back(Trip(l, g, g + l).canonical());
        for (const Trip& t : cur) {  // Rule 2: fix each index, add g and swap
            next.push_back(Trip(t.p, t.r + g, t.q + g).canonical());
            next.push_back(Trip(t.r + g, t.q, t.p + g).canonical());
            next.push_back(Trip(t.q + g, t.p + g, t.r).canonical());
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    const std::size_t d = std::size_t{1} << n;
    const std::size_t expect = (d - 1) * (d - 2) / 6;
    if (cur.size() != expect)
        throw std::logic_error("generate_trips: census mismatch at n=" + std::to_string(n));
    return cur;
}

AlgebraContext::AlgebraContext(int n) : n_(n) {
    if (n >= 2) trips_ = generate_trips(n);
    const std::size_t d = dim();
    sign_.assign(d * d, 0);
    for (const Trip& t : trips_) {
        const UnitIndex v[3] = {t.p, t.q, t.r};
        for (int k = 0; k < 3; ++k) {
            const UnitIndex x = v[k], y = v[(k + 1) % 3];
            sign_[x * d + y] = 1;
            sign_[y * d + x] = -1;
        }
    }
}

const AlgebraContext& AlgebraContext::get(int n) {
    if (n < 1) throw std::invalid_argument("AlgebraContext: n must be >= 1");
    if (n > max_dimension_exponent())
        throw std::invalid_argument("AlgebraContext: n exceeds ZDKIT_MAX_N cap of " +
                                    std::to_string(max_dimension_exponent()));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<AlgebraContext>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::unique_ptr<AlgebraContext>(new AlgebraContext(n));
    return *slot;
}

std::pair<UnitIndex, int> AlgebraContext::unit_product(UnitIndex i, UnitIndex j) const {
    const UnitIndex d = dim();
    if (i >= d || j >= d) throw std::invalid_argument("unit_product: index out of range");
    if (i == 0) return {j, 1};
    if (j == 0) return {i, 1};
    if (i == j) return {0, -1};
    return {i ^ j, sign_[static_cast<std::size_t>(i) * d + j]};
}

HyperNum HyperNum::zero(int n) {
    HyperNum h;
    h.n = n;
    h.c.assign(std::size_t{1} << n, 0);
    return h;
}

HyperNum HyperNum::unit(int n, UnitIndex i, std::int64_t coeff) {
    HyperNum h = zero(n);
    if (i >= h.c.size()) throw std::invalid_argument("HyperNum::unit: index out of range");
    h.c[i] = coeff;
    return h;
}

bool HyperNum::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

static void check_same(const HyperNum& x, const HyperNum& y) {
    if (x.n != y.n || x.c.size() != y.c.size())
        throw std::invalid_argument("HyperNum: dimension mismatch");
}

HyperNum operator+(const HyperNum& x, const HyperNum& y) {
    check_same(x, y);
    HyperNum out = x;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += y.c[i];
    return out;
}

HyperNum operator-(const HyperNum& x, const HyperNum& y) {
    check_same(x, y);
    HyperNum out = x;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= y.c[i];
    return out;
}

HyperNum conjugate(const HyperNum& x) {
    HyperNum out = x;
    for (std::size_t i = 1; i < out.c.size(); ++i) out.c[i] = -out.c[i];
    return out;
}

HyperNum mul(const HyperNum& x, const HyperNum& y, const AlgebraContext& ctx) {
    check_same(x, y);
    if (ctx.n() != x.n) throw std::invalid_argument("mul: context dimension mismatch");
    HyperNum out = HyperNum::zero(x.n);
    for (UnitIndex i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        for (UnitIndex j = 0; j < y.c.size(); ++j) {
            if (y.c[j] == 0) continue;
            auto [k, s] = ctx.unit_product(i, j);
            out.c[k] += s * x.c[i] * y.c[j];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Doubling oracle.  The candidate products are
//   (a,b)(c,d) = (ac - T1, T2a + T2b)
// with T1 in {conj(d)b, d conj(b), conj(b)d, b conj(d)} and
// T2a in {da, ad}, T2b in {b conj(c), conj(c) b}; variant id packs the three
// choices as t1*4 + t2a*2 + t2b.
// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<std::int64_t>;
using Span = std::span<const std::int64_t>;

bool all_zero(Span v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Vec conj_half(Span v) {
    Vec out(v.begin(), v.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

Vec cd_mul_rec(Span x, Span y, int variant) {
    const std::size_t d = x.size();
    if (d == 1) return {x[0] * y[0]};
    Vec out(d, 0);
    if (all_zero(x) || all_zero(y)) return out;
    const std::size_t h = d / 2;
    const Span a = x.first(h), b = x.subspan(h);
    const Span c = y.first(h), dd = y.subspan(h);
    const int t1 = variant >> 2, t2a = (variant >> 1) & 1, t2b = variant & 1;

    Vec f1 = cd_mul_rec(a, c, variant);
    Vec t1v;
    switch (t1) {
        case 0: t1v = cd_mul_rec(conj_half(dd), b, variant); break;
        case 1: t1v = cd_mul_rec(dd, conj_half(b), variant); break;
        case 2: t1v = cd_mul_rec(conj_half(b), dd, variant); break;
        default: t1v = cd_mul_rec(b, conj_half(dd), variant); break;
    }
    Vec t2av = t2a == 0 ? cd_mul_rec(dd, a, variant) : cd_mul_rec(a, dd, variant);
    Vec t2bv = t2b == 0 ? cd_mul_rec(b, conj_half(c), variant) : cd_mul_rec(conj_half(c), b, variant);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = f1[i] - t1v[i];
        out[h + i] = t2av[i] + t2bv[i];
    }
    return out;
}

// Basis-unit specialisation of the same recursion.
std::pair<UnitIndex, int> cd_unit(UnitIndex i, UnitIndex j, int depth, int variant) {
    if (depth == 0) return {0, 1};
    const UnitIndex h = UnitIndex{1} << (depth - 1);
    const bool xhi = i >= h, yhi = j >= h;
    const UnitIndex a = xhi ? i - h : i;
    const UnitIndex c = yhi ? j - h : j;
    const int t1 = variant >> 2, t2a = (variant >> 1) & 1, t2b = variant & 1;
    const auto csign = [](UnitIndex k) { return k == 0 ? 1 : -1; };

    if (!xhi && !yhi) return cd_unit(a, c, depth - 1, variant);
    if (!xhi && yhi) {  // x low, y = (0, e_c): result lands high via T2a
        auto r = t2a == 0 ? cd_unit(c, a, depth - 1, variant) : cd_unit(a, c, depth - 1, variant);
        return {r.first + h, r.second};
    }
    if (xhi && !yhi) {  // x = (0, e_a), y low: high via T2b (c conjugated)
        auto r = t2b == 0 ? cd_unit(a, c, depth - 1, variant) : cd_unit(c, a, depth - 1, variant);
        return {r.first + h, r.second * csign(c)};
    }
    // both high: result low, equals -T1 with b = e_a, d = e_c
    std::pair<UnitIndex, int> r;
    switch (t1) {
        case 0: r = cd_unit(c, a, depth - 1, variant); r.second *= csign(c); break;
        case 1: r = cd_unit(c, a, depth - 1, variant); r.second *= csign(a); break;
        case 2: r = cd_unit(a, c, depth - 1, variant); r.second *= csign(a); break;
        default: r = cd_unit(a, c, depth - 1, variant); r.second *= csign(c); break;
    }
    return {r.first, -r.second};
}

int bit_depth(UnitIndex i, UnitIndex j) {
    int d = 1;
    while ((std::max(i, j) >> d) != 0) ++d;
    return d;
}

int calibrate_variant() {
    std::vector<int> matches;
    for (int v = 0; v < 16; ++v) {
        bool ok = true;
        for (int n = 3; n <= 4 && ok; ++n) {
            const AlgebraContext& ctx = AlgebraContext::get(n);
            const UnitIndex d = ctx.dim();
            for (UnitIndex i = 0; i < d && ok; ++i)
                for (UnitIndex j = 0; j < d; ++j)
                    if (cd_unit(i, j, n, v) != ctx.unit_product(i, j)) {
                        ok = false;
                        break;
                    }
        }
        if (ok) matches.push_back(v);
    }
    if (matches.size() != 1)
        throw std::logic_error("oracle calibration: expected exactly one doubling variant to "
                               "reproduce the trip system, found " +
                               std::to_string(matches.size()));
    return matches.front();
}

}  // namespace

int oracle_variant() {
    static const int v = calibrate_variant();
    return v;
}

HyperNum oracle_mul(const HyperNum& x, const HyperNum& y) {
    check_same(x, y);
    HyperNum out;
    out.n = x.n;
    out.c = cd_mul_rec(Span(x.c), Span(y.c), oracle_variant());
    return out;
}

std::pair<UnitIndex, int> oracle_unit_product(UnitIndex i, UnitIndex j) {
    if (i == 0) return {j, 1};
    if (j == 0) return {i, 1};
    return cd_unit(i, j, bit_depth(i, j), oracle_variant());
}

}  // namespace zdkit
