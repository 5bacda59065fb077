#include "bow/eyd.hpp"

#include <cassert>

namespace bow {

ExtendedYoungDiagram row_to_eyd(const MayaDiagram& M, int i) {
    const int m = M.m();
    ExtendedYoungDiagram out;
    // flattened window covering every stored entry
    const i64 lo_blk = std::min<i64>((M.two_k_lo() - 1) / 2, 0);
    const i64 hi_blk = std::max<i64>((M.two_k_lo() - 1) / 2 + M.stored_blocks(), 0);
    const i64 phi_lo = lo_blk * m;
    const i64 phi_hi = hi_blk * m;  // exclusive
    // charge of the flattened row
    i64 charge = 0;
    for (i64 phi = phi_lo; phi < phi_hi; ++phi) {
        int v = row_entry_flat(M, i, phi);
        if (phi >= 0 && v == 0) ++charge;
        if (phi < 0 && v == 1) --charge;
    }
    out.charge = charge;
    // lambda_t = (charge + t - 1) - (flattened position of the t-th leftmost 1)
    i64 t = 0;
    for (i64 phi = std::min(phi_lo, charge); phi < phi_hi; ++phi) {
        if (row_entry_flat(M, i, phi) == 1) {
            ++t;
            i64 shift = charge + t - 1 - phi;
            assert(shift >= 0);
            if (shift > 0) out.Y.push_back(shift);
        }
    }
    assert(is_partition(out.Y));
    return out;
}

LatticeRegion triangle_points(i64 l) {
    LatticeRegion pts;
    if (l > 0) {
        for (i64 s1 = 1; s1 <= l; ++s1)
            for (i64 s2 = 1; s2 <= s1; ++s2) pts.emplace_back(s1, s2);
    } else if (l < 0) {
        for (i64 s1 = l + 1; s1 <= 0; ++s1)
            for (i64 s2 = s1; s2 <= 0; ++s2) pts.emplace_back(s1, s2);
    }
    return pts;
}

LatticeRegion r_region(int alpha, int beta, i64 e_alpha, i64 e_beta) {
    i64 l = e_beta - e_alpha;
    i64 shift = 0;
    if (alpha <= beta && e_alpha < e_beta) {
        l -= 1;
        shift = 1;
    } else if (alpha >= beta && e_alpha > e_beta) {
        l += 1;
        shift = -1;
    }
    LatticeRegion pts = triangle_points(l);
    for (auto& [s1, s2] : pts) s1 += shift;
    return pts;
}

i64 relative_hook(const Partition& Y_alpha, const Partition& Y_beta, i64 row, i64 col) {
    return leg(Y_beta, row, col) + arm(Y_alpha, row, col) + 1;
}

std::vector<i64> row_weights(const MayaDiagram& M, int i) {
    const Charges rc = row_charges(M, i);
    const int m = M.m();
    std::vector<i64> out;
    out.reserve(m + 1);
    // [F_j F_{j+1}] = d + f_{j+1} + ... + f_m
    for (int j = 1; j <= m - 1; ++j) {
        i64 s = rc.d;
        for (int a = j + 1; a <= m; ++a) s += rc.f[a - 1];
        out.push_back(s);
    }
    out.push_back(rc.d);            // [F_m E]
    out.push_back(rc.d + rc.e[0]);  // wrap [E F1]
    return out;
}

}  // namespace bow
