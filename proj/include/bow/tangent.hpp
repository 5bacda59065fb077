#pragma once

#include <utility>
#include <vector>

#include "bow/eyd.hpp"
#include "bow/kclass.hpp"
#include "bow/maya.hpp"
#include "bow/util.hpp"

namespace bow {

// A 01-pair: an entry 1 at (block k1, row i1) and an entry 0 at
// (block k0, row i0) in the same column j, with k0 > k1, or k0 = k1 and
// i0 < i1.  Block indices are stored doubled.
struct Pair01 {
    i64 two_k1 = 0;
    int i1 = 0;
    i64 two_k0 = 0;
    int i0 = 0;
    int j = 0;

    bool operator==(const Pair01&) const = default;
};

// Sum of all entries of row i left of column j of block two_k, including
// the (two_k, i, j) entry itself.
i64 prefix_sum(const MayaDiagram& M, i64 two_k, int i, int j);

std::vector<Pair01> list_01_pairs(const MayaDiagram& M);

// Tangent K-class at the fixed point of M, as the sum over 01-pairs of
//   u_{i0} u_{i1}^{-1} t1^{s1-s0+m(k0-k1)} t2^{s1-s0}
// + u_{i1} u_{i0}^{-1} t1^{1-s1+s0-m(k0-k1)} t2^{1-s1+s0}.
KClass tangent_via_pairs(const MayaDiagram& M);

// The same class from the extended-Young-diagram formula: the double sum
// of arm/leg monomials filtered by mod-m relative-hook congruences plus
// the R-region sum filtered by s1 = s2 mod m.
KClass tangent_via_eyd(const MayaDiagram& M);

// lhs = tangent(M) - swap_u(tangent(swap_rows(M, j)), j) and the closed
// form rhs = W + t1 t2 W^* with
//   W = -u_{j+1}/u_j * sum_{i=1}^{de} (t1 t2)^i        (de >= 0)
//   W = +u_{j+1}/u_j * sum_{i=de+1}^{0} (t1 t2)^i      (de < 0),
// de = e_{j+1} - e_j.  The contract lhs == rhs is the D5-swap relation.
std::pair<KClass, KClass> d5_swap_delta(const MayaDiagram& M, int j);

// Numbers of tangent monomials (with multiplicity) of negative and
// positive gamma weight.  Throws if a monomial has zero weight.
std::pair<i64, i64> cell_dims(const MayaDiagram& M);

}  // namespace bow
