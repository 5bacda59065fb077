#include "bow/brane.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bow {

i64 BraneTriple::sum_e() const { return std::accumulate(e.begin(), e.end(), i64{0}); }
i64 BraneTriple::sum_f() const { return std::accumulate(f.begin(), f.end(), i64{0}); }

std::vector<i64> multiplicities(const BraneTriple& t) {
    if (t.sum_e() != t.sum_f())
        throw std::invalid_argument("multiplicities: margin mismatch (sum e != sum f)");
    const int n = t.n(), m = t.m();
    std::vector<i64> out;
    out.reserve(n + m);
    // walking left from d: [F_{j-1} F_j] = d + f_j + ... + f_m
    for (int j = 1; j <= m - 1; ++j) {
        i64 s = t.d;
        for (int a = j + 1; a <= m; ++a) s += t.f[a - 1];
        out.push_back(s);
    }
    out.push_back(t.d);  // [F_m E_1]
    // walking right from d: [E_i E_{i+1}] = d + e_1 + ... + e_i
    i64 s = t.d;
    for (int i = 1; i <= n - 1; ++i) {
        s += t.e[i - 1];
        out.push_back(s);
    }
    out.push_back(s + t.e[n - 1]);  // wrap [E_n F_1] = d + sum e
    return out;
}

TripleDiagnostics validate_triple(const BraneTriple& t) {
    TripleDiagnostics diag;
    diag.margins_match = (t.sum_e() == t.sum_f());
    if (diag.margins_match) {
        diag.multiplicities = multiplicities(t);
        diag.all_nonnegative = std::all_of(diag.multiplicities.begin(),
                                           diag.multiplicities.end(),
                                           [](i64 x) { return x >= 0; });
    }
    return diag;
}

BraneTriple move1(const BraneTriple& t) {
    const int m = t.m();
    BraneTriple r;
    r.d = t.d + t.e[0];
    r.e.assign(t.e.begin() + 1, t.e.end());
    r.e.push_back(t.e[0] + m);
    r.f = t.f;
    for (auto& x : r.f) x += 1;
    return r;
}

BraneTriple move1_inv(const BraneTriple& t) {
    const int n = t.n(), m = t.m();
    BraneTriple r;
    i64 e1 = t.e[n - 1] - m;
    r.d = t.d - e1;
    r.e.reserve(n);
    r.e.push_back(e1);
    r.e.insert(r.e.end(), t.e.begin(), t.e.end() - 1);
    r.f = t.f;
    for (auto& x : r.f) x -= 1;
    return r;
}

BraneTriple move2(const BraneTriple& t) {
    const int n = t.n(), m = t.m();
    BraneTriple r;
    r.d = t.d + t.f[m - 1];
    r.e = t.e;
    for (auto& x : r.e) x += 1;
    r.f.reserve(m);
    r.f.push_back(t.f[m - 1] + n);
    r.f.insert(r.f.end(), t.f.begin(), t.f.end() - 1);
    return r;
}

BraneTriple move2_inv(const BraneTriple& t) {
    const int n = t.n();
    BraneTriple r;
    i64 fm = t.f[0] - n;
    r.d = t.d - fm;
    r.e = t.e;
    for (auto& x : r.e) x -= 1;
    r.f.assign(t.f.begin() + 1, t.f.end());
    r.f.push_back(fm);
    return r;
}

BraneTriple d5_swap_charges(const BraneTriple& t, int j) {
    if (j < 1 || j > t.n() - 1)
        throw std::invalid_argument("d5_swap_charges: index out of range");
    BraneTriple r = t;
    std::swap(r.e[j - 1], r.e[j]);
    return r;
}

bool is_quiver(const std::vector<i64>& e, int m) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] > e[i + 1]) return false;
    return e.back() <= e.front() + m;
}

bool is_quiver_like(const std::vector<i64>& e, int m) {
    const int n = static_cast<int>(e.size());
    std::vector<i64> delta(n);
    for (int i = 0; i + 1 < n; ++i) delta[i] = e[i + 1] - e[i];
    delta[n - 1] = e[0] + m - e[n - 1];
    int defects = 0;
    for (i64 d : delta) {
        if (d < -1) return false;
        if (d < 0) ++defects;
    }
    return defects <= 1;
}

QuiverData to_quiver(const BraneTriple& t) {
    const int n = t.n(), m = t.m();
    if (!is_quiver(t.e, m))
        throw std::invalid_argument("to_quiver: charge vector is not m-bounded non-decreasing");

    // Greedy normalization; each move keeps the m-bounded non-decreasing
    // property and shifts the window of values, so this terminates within
    // n * (max|e| + m) steps.
    BraneTriple cur = t;
    i64 max_abs = 0;
    for (i64 x : cur.e) max_abs = std::max(max_abs, std::abs(x));
    const i64 step_bound = static_cast<i64>(n) * (max_abs + m) + n + 1;
    i64 steps = 0;
    while (!(cur.e.front() > -m && cur.e.back() <= 0)) {
        cur = (cur.e.back() > 0) ? move1_inv(cur) : move1(cur);
        if (++steps > step_bound)
            throw std::logic_error("to_quiver: normalization failed to terminate");
    }

    QuiverData q;
    q.normalized = cur;
    q.framing.assign(m, 0);
    for (i64 x : cur.e) q.framing[m - 1 - static_cast<int>(-x)] += 1;  // w_l at slot m-1-l
    // node of framing w_l has dimension d' + f'_{m-l+1} + ... + f'_m for
    // l >= 1, and d' + sum f' for l = 0.
    q.node_dims.assign(m, 0);
    for (int l = m - 1; l >= 1; --l) {
        i64 s = cur.d;
        for (int j = m - l + 1; j <= m; ++j) s += cur.f[j - 1];
        q.node_dims[m - 1 - l] = s;
    }
    i64 s = cur.d;
    for (int j = 1; j <= m; ++j) s += cur.f[j - 1];
    q.node_dims[m - 1] = s;
    return q;
}

}  // namespace bow
