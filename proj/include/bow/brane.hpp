#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bow/util.hpp"

namespace bow {

// A brane diagram in standard form: m NS5 branes F_1..F_m followed by
// n D5 branes E_1..E_n on the top arc of a circle.  d is the multiplicity
// of the D3 segment between F_m and E_1; e and f are the local charges
//   e_i = d_{E_i^+} - d_{E_i^-},   f_j = d_{F_j^-} - d_{F_j^+}.
struct BraneTriple {
    i64 d = 0;
    std::vector<i64> e;  // length n >= 1
    std::vector<i64> f;  // length m >= 1

    int n() const { return static_cast<int>(e.size()); }
    int m() const { return static_cast<int>(f.size()); }

    i64 sum_e() const;
    i64 sum_f() const;

    bool operator==(const BraneTriple&) const = default;
};

struct TripleDiagnostics {
    bool margins_match = false;       // sum e == sum f
    bool all_nonnegative = false;     // every derived multiplicity >= 0
    std::vector<i64> multiplicities;  // empty when margins mismatch
};

// The framed affine quiver extracted from an m-bounded non-decreasing
// charge vector.  framing is (w_{m-1}, ..., w_1, w_0) where w_l counts
// occurrences of -l in the normalized charge vector, and node_dims lists
// the matching dimensions d' + f'_{m-l+1} + ... + f'_m (the l = 0 node
// carries d' + sum f').
struct QuiverData {
    std::vector<i64> node_dims;  // length m
    std::vector<i64> framing;    // length m
    BraneTriple normalized;      // the representative with -m < e_1 <= ... <= e_n <= 0

    bool operator==(const QuiverData&) const = default;
};

TripleDiagnostics validate_triple(const BraneTriple& t);

// Multiplicities of all n+m D3 segments in the order
// [F1F2], ..., [F_{m-1}F_m], [F_m E1], [E1E2], ..., [E_{n-1}E_n], [E_n F1 wrap].
// Requires sum e == sum f.
std::vector<i64> multiplicities(const BraneTriple& t);

// Hanany-Witten moves on standard triples and their inverses.
BraneTriple move1(const BraneTriple& t);
BraneTriple move2(const BraneTriple& t);
BraneTriple move1_inv(const BraneTriple& t);
BraneTriple move2_inv(const BraneTriple& t);

// Swap the D5 branes E_j and E_{j+1} (1-based j, 1 <= j <= n-1):
// exchanges e_j and e_{j+1}.
BraneTriple d5_swap_charges(const BraneTriple& t, int j);

// e is an m-bounded non-decreasing sequence: e_1 <= ... <= e_n <= e_1 + m.
bool is_quiver(const std::vector<i64>& e, int m);

// Some [move-1] rotation of e is an (m+1)-bounded non-decreasing sequence:
// with delta_i = e_{i+1} - e_i and delta_n = e_1 + m - e_n, there is a j
// with delta_j >= -1 and delta_i >= 0 for all i != j.
bool is_quiver_like(const std::vector<i64>& e, int m);

// Normalizes by [move-1] until -m < e_1 <= ... <= e_n <= 0 and reads off
// the associated framed affine quiver.  Requires is_quiver(e, m).
QuiverData to_quiver(const BraneTriple& t);

}  // namespace bow
