#include "bow/maya.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bow {

namespace {

bool all_of_value(const std::vector<std::uint8_t>& block, std::uint8_t v) {
    return std::all_of(block.begin(), block.end(), [v](std::uint8_t x) { return x == v; });
}

}  // namespace

MayaDiagram MayaDiagram::from_blocks(int n, int m, i64 two_k_lo,
                                     std::vector<std::vector<std::uint8_t>> blocks) {
    if (n < 1 || m < 1) throw std::invalid_argument("MayaDiagram: need n, m >= 1");
    if (two_k_lo % 2 == 0) throw std::invalid_argument("MayaDiagram: two_k_lo must be odd");
    for (const auto& b : blocks) {
        if (static_cast<int>(b.size()) != n * m)
            throw std::invalid_argument("MayaDiagram: block of wrong size");
        for (auto x : b)
            if (x > 1) throw std::invalid_argument("MayaDiagram: entries must be 0/1");
    }
    std::size_t lo = 0, hi = blocks.size();
    while (lo < hi && all_of_value(blocks[lo], 0)) ++lo;
    while (hi > lo && all_of_value(blocks[hi - 1], 1)) --hi;
    MayaDiagram M;
    M.n_ = n;
    M.m_ = m;
    M.blocks_.assign(blocks.begin() + lo, blocks.begin() + hi);
    // With nothing stored, two_k_lo marks the 0|1 boundary.  Trimming an
    // all-0 prefix moves it right; trimming an all-1 suffix does not.
    M.two_k_lo_ = two_k_lo + 2 * static_cast<i64>(lo);
    return M;
}

int MayaDiagram::entry(i64 two_k, int i, int j) const {
    assert(two_k % 2 != 0 && i >= 1 && i <= n_ && j >= 1 && j <= m_);
    if (two_k < two_k_lo_) return 0;
    i64 b = (two_k - two_k_lo_) / 2;
    if (b >= static_cast<i64>(blocks_.size())) return 1;
    return blocks_[static_cast<std::size_t>(b)][(i - 1) * m_ + (j - 1)];
}

bool MayaDiagram::operator<(const MayaDiagram& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (m_ != o.m_) return m_ < o.m_;
    if (two_k_lo_ != o.two_k_lo_) return two_k_lo_ < o.two_k_lo_;
    return blocks_ < o.blocks_;
}

Charges charges(const MayaDiagram& M) {
    const int n = M.n(), m = M.m();
    Charges c;
    c.e.assign(n, 0);
    c.f.assign(m, 0);
    // The sweep must reach block 1/2 from both sides: all-0 blocks below
    // the stored range still count as 0s when positive, and all-1 blocks
    // above it count as 1s when negative.
    const i64 lo = std::min<i64>(M.two_k_lo(), 1);
    const i64 hi = std::max<i64>(M.two_k_lo() + 2 * M.stored_blocks(), 1);
    for (i64 two_k = lo; two_k < hi; two_k += 2)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j) {
                const int v = M.entry(two_k, i, j);
                if (two_k > 0 && v == 0) {
                    ++c.e[i - 1];
                    ++c.f[j - 1];
                    c.d += (two_k - 1) / 2;  // distance from block 1/2
                } else if (two_k < 0 && v == 1) {
                    --c.e[i - 1];
                    --c.f[j - 1];
                    c.d += (-two_k + 1) / 2;  // distance from block -1/2, plus one
                }
            }
    return c;
}

std::pair<CoreMatrix, QuotientTuple> core_decompose(const MayaDiagram& M) {
    const int n = M.n(), m = M.m();
    CoreMatrix c(n, std::vector<i64>(m, 0));
    QuotientTuple lambda(static_cast<std::size_t>(n) * m);
    const i64 lo = M.two_k_lo();
    const i64 hi = lo + 2 * M.stored_blocks();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            // per-entry charge: #0s at positive blocks - #1s at negative ones
            i64 chi = 0;
            for (i64 two_k = std::min<i64>(lo, 1); two_k < std::max<i64>(hi, 1); two_k += 2) {
                int v = M.entry(two_k, i, j);
                if (two_k > 0 && v == 0) ++chi;
                if (two_k < 0 && v == 1) --chi;
            }
            c[i - 1][j - 1] = chi;
            // lambda_t = (chi + t - 1) - (position of t-th leftmost 1)
            Partition& lam = lambda[(i - 1) * m + (j - 1)];
            i64 t = 0;
            for (i64 two_k = std::min<i64>(lo, 2 * chi + 1); two_k < hi; two_k += 2) {
                if (M.entry(two_k, i, j) == 1) {
                    ++t;
                    i64 shift = (chi + t - 1) - (two_k - 1) / 2;
                    assert(shift >= 0);
                    if (shift > 0) lam.push_back(shift);
                }
            }
            assert(is_partition(lam));
        }
    return {c, lambda};
}

i64 core_degree(const CoreMatrix& c) {
    i64 d = 0;
    for (const auto& row : c)
        for (i64 x : row) d += x * (x - 1) / 2;
    return d;
}

MayaDiagram compose(int n, int m, const CoreMatrix& c, const QuotientTuple& lambda) {
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("compose: core has wrong row count");
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != m)
            throw std::invalid_argument("compose: core has wrong column count");
    if (lambda.size() != static_cast<std::size_t>(n) * m)
        throw std::invalid_argument("compose: quotient tuple has wrong length");
    for (const auto& lam : lambda)
        if (!is_partition(lam)) throw std::invalid_argument("compose: invalid partition");

    // 1s of entry (i,j) sit at block positions x = c_ij + t - 1 - lambda_t,
    // so block x is occupied iff x is among those values.
    i64 x_min = 0, x_max = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const Partition& lam = lambda[i * m + j];
            i64 first = c[i][j] - (lam.empty() ? 0 : lam[0]);
            i64 last = c[i][j] + static_cast<i64>(lam.size());
            x_min = std::min(x_min, first);
            x_max = std::max(x_max, last + 1);
        }
    const i64 nblocks = x_max - x_min;
    std::vector<std::vector<std::uint8_t>> blocks(
        static_cast<std::size_t>(nblocks),
        std::vector<std::uint8_t>(static_cast<std::size_t>(n) * m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const Partition& lam = lambda[i * m + j];
            for (i64 x = x_min; x < x_max; ++x) {
                i64 t = x - c[i][j] + 1;  // vacuum index of this slot
                bool one;
                if (t > static_cast<i64>(lam.size())) {
                    one = true;  // unshifted tail
                } else {
                    // occupied iff x == c + s - 1 - lam_s for some s
                    one = false;
                    for (std::size_t s = 0; s < lam.size(); ++s)
                        if (x == c[i][j] + static_cast<i64>(s) - lam[s]) {
                            one = true;
                            break;
                        }
                }
                if (one) blocks[x - x_min][i * m + j] = 1;
            }
        }
    return MayaDiagram::from_blocks(n, m, 2 * x_min + 1, std::move(blocks));
}

MayaDiagram swap_rows(const MayaDiagram& M, int j) {
    if (j < 1 || j > M.n() - 1) throw std::invalid_argument("swap_rows: index out of range");
    const int n = M.n(), m = M.m();
    std::vector<std::vector<std::uint8_t>> blocks;
    blocks.reserve(M.stored_blocks());
    for (int b = 0; b < M.stored_blocks(); ++b) {
        auto blk = M.block(b);
        for (int col = 0; col < m; ++col)
            std::swap(blk[(j - 1) * m + col], blk[j * m + col]);
        blocks.push_back(std::move(blk));
    }
    return MayaDiagram::from_blocks(n, m, M.two_k_lo(), std::move(blocks));
}

namespace {

// minimal value of sum x(x-1)/2 over k integers summing to r
i64 min_quad_cost(i64 r, i64 k) {
    if (k == 0) return r == 0 ? 0 : std::numeric_limits<i64>::max() / 4;
    i64 q = r >= 0 ? r / k : -((-r + k - 1) / k);  // floor division
    i64 s = r - q * k;                             // 0 <= s < k
    return s * ((q + 1) * q / 2) + (k - s) * (q * (q - 1) / 2);
}

void enumerate_cores_rec(const std::vector<i64>& e, const std::vector<i64>& f,
                         i64 d_max, i64 bound, int i, int j, CoreMatrix& c,
                         std::vector<i64> row_rem, std::vector<i64> col_rem, i64 cost,
                         std::vector<CoreMatrix>& out) {
    const int n = static_cast<int>(e.size());
    const int m = static_cast<int>(f.size());
    if (i == n - 1) {
        // last row forced by column margins
        i64 extra = 0;
        for (int jj = 0; jj < m; ++jj) {
            i64 v = col_rem[jj];
            c[n - 1][jj] = v;
            extra += v * (v - 1) / 2;
        }
        i64 row_sum = std::accumulate(col_rem.begin(), col_rem.end(), i64{0});
        if (row_sum == row_rem[n - 1] && cost + extra <= d_max) out.push_back(c);
        return;
    }
    if (j == m - 1) {
        // last column of the row forced by the row margin
        i64 v = row_rem[i];
        i64 add = v * (v - 1) / 2;
        if (cost + add > d_max) return;
        c[i][j] = v;
        row_rem[i] = 0;
        col_rem[j] -= v;
        enumerate_cores_rec(e, f, d_max, bound, i + 1, 0, c, std::move(row_rem),
                            std::move(col_rem), cost + add, out);
        return;
    }
    for (i64 v = -bound; v <= bound; ++v) {
        i64 add = v * (v - 1) / 2;
        if (cost + add > d_max) continue;
        // cheapest possible completion of this row
        if (cost + add + min_quad_cost(row_rem[i] - v, m - 1 - j) > d_max) continue;
        c[i][j] = v;
        auto rr = row_rem;
        auto cr = col_rem;
        rr[i] -= v;
        cr[j] -= v;
        enumerate_cores_rec(e, f, d_max, bound, i, j + 1, c, std::move(rr), std::move(cr),
                            cost + add, out);
    }
}

}  // namespace

std::vector<CoreMatrix> enumerate_cores(const std::vector<i64>& e,
                                        const std::vector<i64>& f, i64 d_max) {
    if (std::accumulate(e.begin(), e.end(), i64{0}) !=
        std::accumulate(f.begin(), f.end(), i64{0}))
        throw std::invalid_argument("enumerate_cores: margin mismatch");
    std::vector<CoreMatrix> out;
    if (d_max < 0) return out;
    const int n = static_cast<int>(e.size());
    const int m = static_cast<int>(f.size());
    // |c| <= ceil((1 + sqrt(1 + 8 d_max)) / 2) makes c(c-1)/2 <= d_max possible
    const i64 bound =
        static_cast<i64>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(d_max))) / 2.0));
    CoreMatrix c(n, std::vector<i64>(m, 0));
    enumerate_cores_rec(e, f, d_max, bound, 0, 0, c, e, f, 0, out);
    return out;
}

void for_each_fixed_point(i64 d, const std::vector<i64>& e, const std::vector<i64>& f,
                          const std::function<void(const MayaDiagram&)>& fn) {
    if (d < 0) throw std::invalid_argument("for_each_fixed_point: need d >= 0");
    const int n = static_cast<int>(e.size());
    const int m = static_cast<int>(f.size());
    for (const CoreMatrix& c : enumerate_cores(e, f, d)) {
        const i64 rest = d - core_degree(c);
        for_each_partition_tuple(n * m, rest, [&](const QuotientTuple& lambda) {
            fn(compose(n, m, c, lambda));
        });
    }
}

std::vector<MayaDiagram> enumerate_fixed_points(i64 d, const std::vector<i64>& e,
                                                const std::vector<i64>& f) {
    std::vector<MayaDiagram> out;
    for_each_fixed_point(d, e, f, [&](const MayaDiagram& M) { out.push_back(M); });
    return out;
}

i64 count_fixed_points(i64 d, const std::vector<i64>& e, const std::vector<i64>& f) {
    i64 count = 0;
    for_each_fixed_point(d, e, f, [&](const MayaDiagram&) { ++count; });
    return count;
}

int row_entry_flat(const MayaDiagram& M, int i, i64 phi) {
    const int m = M.m();
    i64 block_index = phi >= 0 ? phi / m : -((-phi + m - 1) / m);  // floor(phi / m)
    i64 j = phi - block_index * m;                                 // 0-based column
    return M.entry(2 * block_index + 1, i, static_cast<int>(j) + 1);
}

Charges row_charges(const MayaDiagram& M, int i) {
    const int m = M.m();
    Charges c;
    c.e.assign(1, 0);
    c.f.assign(m, 0);
    const i64 lo = std::min<i64>(M.two_k_lo(), 1);
    const i64 hi = std::max<i64>(M.two_k_lo() + 2 * M.stored_blocks(), 1);
    for (i64 two_k = lo; two_k < hi; two_k += 2)
        for (int j = 1; j <= m; ++j) {
            const int v = M.entry(two_k, i, j);
            if (two_k > 0 && v == 0) {
                ++c.e[0];
                ++c.f[j - 1];
                c.d += (two_k - 1) / 2;
            } else if (two_k < 0 && v == 1) {
                --c.e[0];
                --c.f[j - 1];
                c.d += (-two_k + 1) / 2;
            }
        }
    return c;
}

}  // namespace bow
