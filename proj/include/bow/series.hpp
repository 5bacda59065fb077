#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bow/brane.hpp"
#include "bow/maya.hpp"
#include "bow/util.hpp"

namespace bow {

// Truncated integer power series in q; coeffs[d] is the q^d coefficient,
// d = 0..order.
struct QSeries {
    i64 order = 0;
    std::vector<i64> coeffs;

    static QSeries zero(i64 order) { return {order, std::vector<i64>(order + 1, 0)}; }
    bool operator==(const QSeries&) const = default;
    std::string str() const;
};

// q-series whose coefficients are polynomials in t with nonnegative even
// exponents; coeffs[d] maps t-exponent to integer coefficient.
struct QTSeries {
    i64 order = 0;
    std::vector<std::map<i64, i64>> coeffs;

    static QTSeries zero(i64 order) {
        return {order, std::vector<std::map<i64, i64>>(order + 1)};
    }
    void add(i64 d, i64 t_exp, i64 c);
    QSeries at_t1() const;  // specialization t = 1
    bool operator==(const QTSeries&) const = default;
    std::string str() const;
};

// multiply truncated series (orders must agree)
QSeries mul(const QSeries& x, const QSeries& y);
QTSeries mul(const QTSeries& x, const QTSeries& y);

enum class CellSign { minus, plus };

// Z_0(q): sum over contingency tables with margins (e, f) of
// q^{sum c(c-1)/2}, truncated at `order`.
QSeries z0(const std::vector<i64>& e, const std::vector<i64>& f, i64 order);

// Z(q) both ways: closed formula z0 * prod (1-q^l)^{-nm}, and direct
// fixed point counts.
QSeries euler_series_formula(const std::vector<i64>& e, const std::vector<i64>& f, i64 order);
QSeries euler_series_enum(const std::vector<i64>& e, const std::vector<i64>& f, i64 order);

// Z^-(q,t) (sign=minus) or Z^+(q,t) (sign=plus): per fixed point the
// attracting/repelling cell dimension read off from gamma signs.
QTSeries poincare_series(const std::vector<i64>& e, const std::vector<i64>& f, i64 order,
                         CellSign sign);

// m = 1 closed products:
//   Z^- = q^A t^{2B} prod_{i<=n, l>=1} (1 - t^{2(nl-i)} q^l)^{-1},
//   Z^+ likewise with t^{2(nl+i)},
// with A = sum e(e-1)/2; B is the charge-dependent minimal cell dimension (see m1_B).
QTSeries product_formula_m1(const std::vector<i64>& e, i64 order, CellSign sign);
i64 m1_A(const std::vector<i64>& e);
i64 m1_B(const std::vector<i64>& e, CellSign sign);

// n = 1 closed products: returns (Z^-, Z^+) with A = sum f(f-1)/2.
std::pair<QTSeries, QTSeries> product_formula_n1(const std::vector<i64>& f, i64 order);

struct CoveringReport {
    bool margins_match = false;
    bool bounded_nondecreasing = false;  // e itself is (m+1)-bounded non-decreasing
    bool quiver_like = false;            // some [move-1] rotation is
    std::optional<BraneTriple> rotated;  // that rotation, when it differs from the input
    bool fixed_points_exist = false;
    bool witness_exists = false;  // a fixed point with dim_minus = 0
    std::string str() const;
};

// Checks the covering criterion for M(d, e, f): whether the charge vector
// is (m+1)-bounded non-decreasing (possibly after [move-1] rotations) and
// whether a zero-dimensional (-)-cell exists.  When the input vector is
// itself bounded non-decreasing and fixed points exist, the witness is
// asserted.
CoveringReport covering_check(i64 d, const std::vector<i64>& e, const std::vector<i64>& f);

struct StabilizationReport {
    i64 base_degree = 0;      // first q-degree with a nonzero coefficient
    i64 t_offset = 0;         // t-power factored out of that coefficient
    std::vector<std::map<i64, i64>> P;  // P_s(t), s = 0..s_max
    std::vector<i64> match_degree;      // largest 2k with P_s == prod (1-t^{2r})^{-m} below it
    std::string str() const;
};

// Observational: how far P_s(t) agrees with prod_{r>=1} (1-t^{2r})^{-m}.
StabilizationReport stabilization_report(const std::vector<i64>& e, const std::vector<i64>& f,
                                         i64 s_max, CellSign sign = CellSign::minus);

}  // namespace bow
