#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bow/brane.hpp"
#include "bow/partition.hpp"
#include "bow/util.hpp"

namespace bow {

// A generalized Maya diagram: a bi-infinite sequence of n x m binary
// blocks indexed by half-integers k, eventually all-0 to the left and
// all-1 to the right.  Block indices are stored doubled (two_k = 2k is
// an odd integer), so block 1/2 has two_k = 1 and block -1/2 has
// two_k = -1.
//
// Storage is canonical: blocks below two_k_lo are implicitly all-0,
// blocks at or above two_k_lo + 2*blocks.size() are implicitly all-1,
// the first stored block is not all-0 and the last is not all-1.  When
// no block is stored, two_k_lo is the boundary: all-0 strictly below it,
// all-1 from it on.
class MayaDiagram {
public:
    // Builds the canonical diagram from raw block data.  blocks[b] is the
    // n x m block at two_k = two_k_lo + 2b, row-major.
    static MayaDiagram from_blocks(int n, int m, i64 two_k_lo,
                                   std::vector<std::vector<std::uint8_t>> blocks);

    int n() const { return n_; }
    int m() const { return m_; }
    i64 two_k_lo() const { return two_k_lo_; }
    int stored_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::uint8_t>& block(int b) const { return blocks_[b]; }

    // Entry at block two_k (odd), row i, column j (both 1-based); resolves
    // the implicit tails.
    int entry(i64 two_k, int i, int j) const;

    bool operator==(const MayaDiagram&) const = default;
    bool operator<(const MayaDiagram& o) const;

private:
    int n_ = 1;
    int m_ = 1;
    i64 two_k_lo_ = 1;
    std::vector<std::vector<std::uint8_t>> blocks_;
};

struct Charges {
    i64 d = 0;
    std::vector<i64> e;
    std::vector<i64> f;
};

// An (e,f)-core: the n x m integer matrix c with row sums e and column
// sums f; the Maya diagram it encodes has 1s at entry (i,j) exactly in
// blocks >= (2c_ij + 1)/2.
using CoreMatrix = std::vector<std::vector<i64>>;

// nm-tuple of partitions, indexed row-major by (i,j).
using QuotientTuple = std::vector<Partition>;

// Charges (d, e, f) of a canonical diagram, per the counting rules
//   e_i = #{0s in row i, positive blocks} - #{1s in row i, negative blocks}
//   f_j likewise per column,
//   d   = sum over negative blocks of (1 + distance from block -1/2) * #1s
//       + sum over positive blocks of (distance from block 1/2) * #0s.
Charges charges(const MayaDiagram& M);

// Inverse bijections of the core-quotient decomposition.
std::pair<CoreMatrix, QuotientTuple> core_decompose(const MayaDiagram& M);
MayaDiagram compose(int n, int m, const CoreMatrix& c, const QuotientTuple& lambda);

i64 core_degree(const CoreMatrix& c);  // sum c(c-1)/2

// Rows j and j+1 (1-based) exchanged in every block; the fixed point
// bijection of a D5 swap.
MayaDiagram swap_rows(const MayaDiagram& M, int j);

// All integer matrices with row sums e, column sums f and
// sum c(c-1)/2 <= d_max, each exactly once, in a fixed order.
std::vector<CoreMatrix> enumerate_cores(const std::vector<i64>& e,
                                        const std::vector<i64>& f, i64 d_max);

// All Maya diagrams of M(d, e, f), each exactly once, in a fixed order.
std::vector<MayaDiagram> enumerate_fixed_points(i64 d, const std::vector<i64>& e,
                                                const std::vector<i64>& f);
void for_each_fixed_point(i64 d, const std::vector<i64>& e, const std::vector<i64>& f,
                          const std::function<void(const MayaDiagram&)>& fn);
i64 count_fixed_points(i64 d, const std::vector<i64>& e, const std::vector<i64>& f);

// Row i (1-based) flattened into a single bi-infinite 01 sequence;
// position phi = m*(two_k - 1)/2 + (j - 1), preserving left-to-right
// order.  Returns entry at flattened position phi.
int row_entry_flat(const MayaDiagram& M, int i, i64 phi);

// Per-row charges: d, e and f of the one-D5 diagram cut out by row i.
Charges row_charges(const MayaDiagram& M, int i);

}  // namespace bow
