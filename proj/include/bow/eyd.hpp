#pragma once

#include <utility>
#include <vector>

#include "bow/maya.hpp"
#include "bow/partition.hpp"
#include "bow/util.hpp"

namespace bow {

// A charge together with a classical Young diagram; the combinatorial
// code of one row of a Maya diagram.
struct ExtendedYoungDiagram {
    i64 charge = 0;
    Partition Y;

    bool operator==(const ExtendedYoungDiagram&) const = default;
};

// Finite set of (s1, s2) exponent pairs in the (t1, t2) basis.
using LatticeRegion = std::vector<std::pair<i64, i64>>;

// Row i of M read as a single bi-infinite 01 sequence (columns of
// consecutive blocks in left-to-right order) and decoded into
// charge e_i plus the left-shift partition.
ExtendedYoungDiagram row_to_eyd(const MayaDiagram& M, int i);

// Lattice points of the triangle T_l:
//   l > 0: (s1, s2) with  1 <= s2 <= s1 <= l,
//   l < 0: (s1, s2) with  l+1 <= s1 <= s2 <= 0,
//   l = 0: empty.
// The point sets of the degenerate triangles T_{±1} are single points,
// pinned by the 01-pair computation on pure cores (see tests).
LatticeRegion triangle_points(i64 l);

// The region R^{e_alpha, e_beta}_{alpha, beta}:
//   alpha <= beta, e_alpha >= e_beta :       T_{e_beta - e_alpha}
//   alpha <= beta, e_alpha <  e_beta : t1  * T_{e_beta - e_alpha - 1}
//   alpha >= beta, e_alpha <= e_beta :       T_{e_beta - e_alpha}
//   alpha >= beta, e_alpha >  e_beta : t1^-1 T_{e_beta - e_alpha + 1}
// with t1^{±1} acting as translation by (±1, 0).
LatticeRegion r_region(int alpha, int beta, i64 e_alpha, i64 e_beta);

// l_{Y_beta}(s) + a_{Y_alpha}(s) + 1 at s = (row, col), 1-based.
i64 relative_hook(const Partition& Y_alpha, const Partition& Y_beta, i64 row, i64 col);

// Multiplicities of the m+1 D3 segments of the one-D5 brane diagram cut
// out by row i, in the order [F1F2], ..., [F_{m-1}F_m], [F_m E], [E F1 wrap].
// Summed over rows these match the corresponding segments of the full
// diagram's multiplicity list.
std::vector<i64> row_weights(const MayaDiagram& M, int i);

}  // namespace bow
