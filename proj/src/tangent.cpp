#include "bow/tangent.hpp"

#include <stdexcept>

namespace bow {

i64 prefix_sum(const MayaDiagram& M, i64 two_k, int i, int j) {
    i64 s = 0;
    for (i64 tk = std::min(M.two_k_lo(), two_k); tk < two_k; tk += 2)
        for (int col = 1; col <= M.m(); ++col) s += M.entry(tk, i, col);
    for (int col = 1; col <= j; ++col) s += M.entry(two_k, i, col);
    return s;
}

std::vector<Pair01> list_01_pairs(const MayaDiagram& M) {
    // Both members of a pair lie in the stored block range: there are no
    // 0s right of it and no 1s left of it.
    std::vector<Pair01> pairs;
    const i64 lo = M.two_k_lo();
    const i64 hi = lo + 2 * M.stored_blocks();
    for (int j = 1; j <= M.m(); ++j) {
        for (i64 tk1 = lo; tk1 < hi; tk1 += 2)
            for (int i1 = 1; i1 <= M.n(); ++i1) {
                if (M.entry(tk1, i1, j) != 1) continue;
                // 0s strictly later, or in the same block at smaller row index
                for (int i0 = 1; i0 < i1; ++i0)
                    if (M.entry(tk1, i0, j) == 0)
                        pairs.push_back({tk1, i1, tk1, i0, j});
                for (i64 tk0 = tk1 + 2; tk0 < hi; tk0 += 2)
                    for (int i0 = 1; i0 <= M.n(); ++i0)
                        if (M.entry(tk0, i0, j) == 0)
                            pairs.push_back({tk1, i1, tk0, i0, j});
            }
    }
    return pairs;
}

KClass tangent_via_pairs(const MayaDiagram& M) {
    const int n = M.n(), m = M.m();
    KClass T(n);
    for (const Pair01& p : list_01_pairs(M)) {
        const i64 s1 = prefix_sum(M, p.two_k1, p.i1, p.j);
        const i64 s0 = prefix_sum(M, p.two_k0, p.i0, p.j);
        const i64 dk = (p.two_k0 - p.two_k1) / 2;
        std::vector<i64> w(n, 0);
        if (p.i0 != p.i1) {
            w[p.i0 - 1] += 1;
            w[p.i1 - 1] -= 1;
        }
        T.add_monomial(s1 - s0 + m * dk, s1 - s0, w);
        for (auto& x : w) x = -x;
        T.add_monomial(1 - s1 + s0 - m * dk, 1 - s1 + s0, std::move(w));
    }
    return T;
}

KClass tangent_via_eyd(const MayaDiagram& M) {
    const int n = M.n(), m = M.m();
    std::vector<ExtendedYoungDiagram> B(n);
    for (int i = 1; i <= n; ++i) B[i - 1] = row_to_eyd(M, i);

    // Every delta condition is the single congruence a = b mod m on the
    // exponents of t1, t2: for a box s of Y_alpha the candidate monomial
    // has a - b = (e_beta - e_alpha) - relative_hook(Y_alpha, Y_beta, s),
    // for a box t of Y_beta it is (e_beta - e_alpha) plus the mirrored
    // hook, and on the R-region it is s1 - s2.  Only the same-column
    // blocks of the flattened diagram survive this filter, which is what
    // ties the formula back to the 01-pair sum.
    auto keep = [m](i64 a, i64 b) { return (a - b) % m == 0; };

    KClass T(n);
    for (int alpha = 1; alpha <= n; ++alpha)
        for (int beta = 1; beta <= n; ++beta) {
            const Partition& Ya = B[alpha - 1].Y;
            const Partition& Yb = B[beta - 1].Y;
            const i64 ea = B[alpha - 1].charge;
            const i64 eb = B[beta - 1].charge;
            std::vector<i64> w(n, 0);
            if (alpha != beta) {
                w[beta - 1] += 1;
                w[alpha - 1] -= 1;
            }
            for (i64 row = 1; row <= static_cast<i64>(Ya.size()); ++row)
                for (i64 col = 1; col <= Ya[row - 1]; ++col) {
                    const i64 a = eb - ea - leg(Yb, row, col);
                    const i64 b = arm(Ya, row, col) + 1;
                    if (keep(a, b)) T.add_monomial(a, b, w);
                }
            for (i64 row = 1; row <= static_cast<i64>(Yb.size()); ++row)
                for (i64 col = 1; col <= Yb[row - 1]; ++col) {
                    const i64 a = eb - ea + leg(Ya, row, col) + 1;
                    const i64 b = -arm(Yb, row, col);
                    if (keep(a, b)) T.add_monomial(a, b, w);
                }
            for (const auto& [s1, s2] : r_region(alpha, beta, ea, eb))
                if (keep(s1, s2)) T.add_monomial(s1, s2, w);
        }
    return T;
}

std::pair<KClass, KClass> d5_swap_delta(const MayaDiagram& M, int j) {
    if (j < 1 || j > M.n() - 1)
        throw std::invalid_argument("d5_swap_delta: index out of range");
    const int n = M.n();
    const Charges c = charges(M);
    const i64 de = c.e[j] - c.e[j - 1];

    KClass lhs = tangent_via_pairs(M) - tangent_via_pairs(swap_rows(M, j)).swap_u(j);

    KClass W(n);
    std::vector<i64> w(n, 0);
    w[j] = 1;
    w[j - 1] = -1;
    if (de >= 0) {
        for (i64 i = 1; i <= de; ++i) W.add_monomial(i, i, w, -1);
    } else {
        for (i64 i = de + 1; i <= 0; ++i) W.add_monomial(i, i, w, +1);
    }
    KClass rhs = W + W.dual().shifted(1, 1);
    return {lhs, rhs};
}

std::pair<i64, i64> cell_dims(const MayaDiagram& M) {
    i64 minus = 0, plus = 0;
    const KClass T = tangent_via_pairs(M);
    for (const auto& [mon, coeff] : T.terms()) {
        const int s = gamma_sign(mon);
        if (s == 0)
            throw std::logic_error("cell_dims: zero-weight tangent monomial " + mon.str());
        (s < 0 ? minus : plus) += coeff;
    }
    return {minus, plus};
}

}  // namespace bow
