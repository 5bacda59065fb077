#include "bow/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bow/tangent.hpp"

namespace bow {

namespace {

int env_threads() {
    const char* v = std::getenv("BOW_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t < 1 ? 1 : t;
}

// Folds a per-diagram integer-keyed count over all fixed points of degree
// d.  The stream is partitioned by core when several threads are
// requested; integer sums commute, so the result does not depend on the
// partition.
std::map<i64, i64> fold_degree(i64 d, const std::vector<i64>& e, const std::vector<i64>& f,
                               const std::function<i64(const MayaDiagram&)>& key) {
    const int threads = env_threads();
    const int n = static_cast<int>(e.size());
    const int m = static_cast<int>(f.size());
    const std::vector<CoreMatrix> cores = enumerate_cores(e, f, d);
    std::vector<std::map<i64, i64>> partial(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    auto work = [&](int tid) {
        try {
            for (std::size_t ci = tid; ci < cores.size(); ci += threads) {
                const i64 rest = d - core_degree(cores[ci]);
                for_each_partition_tuple(n * m, rest, [&](const QuotientTuple& lambda) {
                    partial[tid][key(compose(n, m, cores[ci], lambda))] += 1;
                });
            }
        } catch (...) {
            errors[tid] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    std::map<i64, i64> out;
    for (const auto& part : partial)
        for (const auto& [k, c] : part) out[k] = checked_add(out[k], c);
    return out;
}

}  // namespace

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (i64 d = 0; d <= order; ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) os << " + ";
        os << coeffs[d] << "*q^" << d;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << order + 1 << ")";
    return os.str();
}

void QTSeries::add(i64 d, i64 t_exp, i64 c) {
    if (d < 0 || d > order) return;
    auto& slot = coeffs[d][t_exp];
    slot = checked_add(slot, c);
    if (slot == 0) coeffs[d].erase(t_exp);
}

QSeries QTSeries::at_t1() const {
    QSeries out = QSeries::zero(order);
    for (i64 d = 0; d <= order; ++d)
        for (const auto& [te, c] : coeffs[d]) out.coeffs[d] = checked_add(out.coeffs[d], c);
    return out;
}

std::string QTSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (i64 d = 0; d <= order; ++d) {
        if (coeffs[d].empty()) continue;
        if (!first) os << " + ";
        os << "q^" << d << "*(";
        bool ft = true;
        for (const auto& [te, c] : coeffs[d]) {
            if (!ft) os << " + ";
            if (c != 1 || te == 0) os << c;
            if (c != 1 && te != 0) os << "*";
            if (te != 0) os << "t^" << te;
            ft = false;
        }
        os << ")";
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << order + 1 << ")";
    return os.str();
}

QSeries mul(const QSeries& x, const QSeries& y) {
    if (x.order != y.order) throw std::invalid_argument("mul: order mismatch");
    QSeries out = QSeries::zero(x.order);
    for (i64 a = 0; a <= x.order; ++a) {
        if (x.coeffs[a] == 0) continue;
        for (i64 b = 0; a + b <= x.order; ++b)
            out.coeffs[a + b] =
                checked_add(out.coeffs[a + b], checked_mul(x.coeffs[a], y.coeffs[b]));
    }
    return out;
}

QTSeries mul(const QTSeries& x, const QTSeries& y) {
    if (x.order != y.order) throw std::invalid_argument("mul: order mismatch");
    QTSeries out = QTSeries::zero(x.order);
    for (i64 a = 0; a <= x.order; ++a)
        for (const auto& [ta, ca] : x.coeffs[a])
            for (i64 b = 0; a + b <= x.order; ++b)
                for (const auto& [tb, cb] : y.coeffs[b])
                    out.add(a + b, ta + tb, checked_mul(ca, cb));
    return out;
}

namespace {

// prod_{l=1}^{order} (1 - t^{tc(l)} q^l)^{-power} as a QTSeries
QTSeries inv_euler_product(i64 order, i64 power, const std::function<i64(i64)>& tc) {
    QTSeries out = QTSeries::zero(order);
    out.add(0, 0, 1);
    for (i64 l = 1; l <= order; ++l) {
        // single factor (1 - t^{tc} q^l)^{-1} = sum_j t^{j tc} q^{jl}
        QTSeries factor = QTSeries::zero(order);
        for (i64 jl = 0, j = 0; jl <= order; jl += l, ++j) factor.add(jl, j * tc(l), 1);
        for (i64 p = 0; p < power; ++p) out = mul(out, factor);
    }
    return out;
}

}  // namespace

QSeries z0(const std::vector<i64>& e, const std::vector<i64>& f, i64 order) {
    QSeries out = QSeries::zero(order);
    for (const CoreMatrix& c : enumerate_cores(e, f, order)) {
        i64 d = core_degree(c);
        out.coeffs[d] = checked_add(out.coeffs[d], 1);
    }
    return out;
}

QSeries euler_series_formula(const std::vector<i64>& e, const std::vector<i64>& f,
                             i64 order) {
    const i64 nm = static_cast<i64>(e.size()) * static_cast<i64>(f.size());
    QTSeries eta = inv_euler_product(order, nm, [](i64) { return 0; });
    return mul(z0(e, f, order), eta.at_t1());
}

QSeries euler_series_enum(const std::vector<i64>& e, const std::vector<i64>& f, i64 order) {
    QSeries out = QSeries::zero(order);
    for (i64 d = 0; d <= order; ++d)
        for (const auto& [k, c] : fold_degree(d, e, f, [](const MayaDiagram&) { return 0; }))
            out.coeffs[d] = checked_add(out.coeffs[d], c);
    return out;
}

QTSeries poincare_series(const std::vector<i64>& e, const std::vector<i64>& f, i64 order,
                         CellSign sign) {
    QTSeries out = QTSeries::zero(order);
    for (i64 d = 0; d <= order; ++d) {
        auto dims = fold_degree(d, e, f, [sign](const MayaDiagram& M) {
            auto [minus, plus] = cell_dims(M);
            return 2 * (sign == CellSign::minus ? minus : plus);
        });
        for (const auto& [texp, c] : dims) out.add(d, texp, c);
    }
    return out;
}

i64 m1_A(const std::vector<i64>& e) {
    i64 A = 0;
    for (i64 x : e) A += x * (x - 1) / 2;
    return A;
}

i64 m1_B(const std::vector<i64>& e, CellSign sign) {
    const int n = static_cast<int>(e.size());
    i64 B = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (sign == CellSign::minus) {
                i64 x = std::abs(e[b] - e[a] - 1);
                B += x * (x - 1) / 2;
            } else {
                i64 l = e[a] - e[b];
                B += l >= 0 ? (l + 1) * l / 2 : (l - 1) * l / 2 - 1;
            }
        }
    return B;
}

QTSeries product_formula_m1(const std::vector<i64>& e, i64 order, CellSign sign) {
    const i64 n = static_cast<i64>(e.size());
    const i64 A = m1_A(e);
    const i64 B = m1_B(e, sign);
    QTSeries prod = QTSeries::zero(order);
    prod.add(0, 0, 1);
    for (i64 i = 1; i <= n; ++i) {
        QTSeries fac = inv_euler_product(order, 1, [&](i64 l) {
            return 2 * (sign == CellSign::minus ? n * l - i : n * l + i);
        });
        prod = mul(prod, fac);
    }
    // shift by q^A t^{2B}
    QTSeries out = QTSeries::zero(order);
    for (i64 d = 0; d + A <= order; ++d)
        for (const auto& [te, c] : prod.coeffs[d]) out.add(d + A, te + 2 * B, c);
    return out;
}

std::pair<QTSeries, QTSeries> product_formula_n1(const std::vector<i64>& f, i64 order) {
    const i64 m = static_cast<i64>(f.size());
    i64 A = 0;
    for (i64 x : f) A += x * (x - 1) / 2;
    auto build = [&](i64 first_exp_shift) {
        QTSeries prod = inv_euler_product(order, 1, [&](i64 l) { return 2 * l + first_exp_shift; });
        QTSeries rest = inv_euler_product(order, m - 1, [](i64 l) { return 2 * l; });
        prod = mul(prod, rest);
        QTSeries out = QTSeries::zero(order);
        for (i64 d = 0; d + A <= order; ++d)
            for (const auto& [te, c] : prod.coeffs[d]) out.add(d + A, te, c);
        return out;
    };
    return {build(-2), build(+2)};
}

std::string CoveringReport::str() const {
    std::ostringstream os;
    os << "margins: " << (margins_match ? "ok" : "MISMATCH")
       << "; (m+1)-bounded non-decreasing: " << (bounded_nondecreasing ? "yes" : "no")
       << "; quiver-like (via rotation): " << (quiver_like ? "yes" : "no");
    if (rotated)
        os << " [rotated form d=" << rotated->d << ", e=(" << join_ints(rotated->e)
           << "), f=(" << join_ints(rotated->f) << ")]";
    os << "; fixed points: " << (fixed_points_exist ? "yes" : "no")
       << "; zero-dimensional (-)-cell: " << (witness_exists ? "yes" : "no");
    return os.str();
}

namespace {

bool bounded_nondecr(const std::vector<i64>& e, i64 bound) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] > e[i + 1]) return false;
    return e.back() <= e.front() + bound;
}

}  // namespace

CoveringReport covering_check(i64 d, const std::vector<i64>& e, const std::vector<i64>& f) {
    const int m = static_cast<int>(f.size());
    CoveringReport rep;
    i64 se = 0, sf = 0;
    for (i64 x : e) se += x;
    for (i64 x : f) sf += x;
    rep.margins_match = se == sf;
    if (!rep.margins_match) return rep;

    rep.bounded_nondecreasing = bounded_nondecr(e, m + 1);
    rep.quiver_like = is_quiver_like(e, m);
    if (rep.quiver_like && !rep.bounded_nondecreasing) {
        // find the [move-1] rotation that is (m+1)-bounded non-decreasing
        BraneTriple t{d, e, f};
        for (int k = 0; k < static_cast<int>(e.size()); ++k) {
            t = move1(t);
            if (bounded_nondecr(t.e, m + 1)) {
                rep.rotated = t;
                break;
            }
        }
    }

    i64 best_minus = -1;
    for_each_fixed_point(d, e, f, [&](const MayaDiagram& M) {
        auto [minus, plus] = cell_dims(M);
        (void)plus;
        if (best_minus < 0 || minus < best_minus) best_minus = minus;
    });
    rep.fixed_points_exist = best_minus >= 0;
    rep.witness_exists = best_minus == 0;
    if (rep.bounded_nondecreasing && rep.fixed_points_exist && !rep.witness_exists)
        throw std::logic_error(
            "covering_check: bounded non-decreasing charge vector without a "
            "zero-dimensional (-)-cell");
    return rep;
}

std::string StabilizationReport::str() const {
    std::ostringstream os;
    os << "base q-degree " << base_degree << ", t-offset " << t_offset << "\n";
    for (std::size_t s = 0; s < P.size(); ++s) {
        os << "P_" << s << "(t) = ";
        bool first = true;
        for (const auto& [te, c] : P[s]) {
            if (!first) os << " + ";
            if (c != 1 || te == 0) os << c;
            if (c != 1 && te != 0) os << "*";
            if (te != 0) os << "t^" << te;
            first = false;
        }
        if (first) os << "0";
        os << "   [matches eta^{-m} up to t-degree " << match_degree[s] << "]\n";
    }
    return os.str();
}

StabilizationReport stabilization_report(const std::vector<i64>& e, const std::vector<i64>& f,
                                         i64 s_max, CellSign sign) {
    const i64 m = static_cast<i64>(f.size());
    // find the first nonzero q-degree
    i64 base = -1;
    for (i64 d = 0; base < 0; ++d) {
        if (count_fixed_points(d, e, f) > 0) base = d;
        if (d > 512) throw std::logic_error("stabilization_report: no fixed points found");
    }
    QTSeries Z = poincare_series(e, f, base + s_max, sign);
    StabilizationReport rep;
    rep.base_degree = base;
    rep.t_offset = Z.coeffs[base].begin()->first;
    const i64 t_order = 2 * (s_max + 1);
    QTSeries target = inv_euler_product(t_order / 2, m, [](i64 l) { return 2 * l; });
    // collapse target (a series in q with t-powers) into a plain t-series:
    // coefficient of t^{2r} in prod (1-t^{2r})^{-m}
    std::map<i64, i64> eta_inv;
    for (i64 dq = 0; dq <= t_order / 2; ++dq)
        for (const auto& [te, c] : target.coeffs[dq]) eta_inv[te] = checked_add(eta_inv[te], c);
    for (i64 s = 0; s <= s_max; ++s) {
        std::map<i64, i64> Ps;
        for (const auto& [te, c] : Z.coeffs[base + s]) Ps[te - rep.t_offset] = c;
        rep.P.push_back(Ps);
        i64 match = -2;
        for (i64 deg = 0;; deg += 2) {
            auto a = Ps.find(deg);
            auto b = eta_inv.find(deg);
            i64 va = a == Ps.end() ? 0 : a->second;
            i64 vb = b == eta_inv.end() ? 0 : b->second;
            if (va != vb || deg > t_order) break;
            match = deg;
        }
        rep.match_degree.push_back(match);
    }
    return rep;
}

}  // namespace bow
