#pragma once

#include <map>
#include <string>
#include <vector>

#include "bow/util.hpp"

namespace bow {

// A torus monomial t1^a t2^b u1^{w_1} ... u_n^{w_n}.  Ordering is
// lexicographic on (b, a, w), the canonical serialization order.
struct Monomial {
    i64 a = 0;
    i64 b = 0;
    std::vector<i64> w;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {
        if (b != o.b) return b < o.b;
        if (a != o.a) return a < o.a;
        return w < o.w;
    }

    Monomial inverse() const;
    std::string str() const;
};

// Finite integer combination of torus monomials; an element of
// Z[t1^{±1}, t2^{±1}, u1^{±1}, ..., un^{±1}].  Zero coefficients are
// never stored.
class KClass {
public:
    KClass() = default;
    explicit KClass(int n) : n_(n) {}

    int n_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    i64 coeff(const Monomial& mon) const;
    const std::map<Monomial, i64>& terms() const { return terms_; }

    // total number of monomials counted with multiplicity; requires all
    // coefficients nonnegative
    i64 monomial_count() const;

    void add_term(const Monomial& mon, i64 coeff);
    void add_monomial(i64 a, i64 b, std::vector<i64> w, i64 coeff = 1);

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass operator*(i64 s) const;

    // multiply every term by t1^a t2^b u^w
    KClass shifted(i64 a, i64 b, const std::vector<i64>& w) const;
    KClass shifted(i64 a, i64 b) const;

    // invert every monomial
    KClass dual() const;

    // substitution u_j <-> u_{j+1} (1-based j)
    KClass swap_u(int j) const;

    bool operator==(const KClass&) const = default;

    std::string str() const;

private:
    void check_compatible(const KClass& o) const;

    int n_ = 0;
    std::map<Monomial, i64> terms_;
};

// Sign of a monomial under the one-parameter subgroup with weights
// m2 >> r_1 > ... > r_n >> m_1 > 0: the sign of b if b != 0, otherwise
// the sign of the first nonzero u-exponent, otherwise the sign of a.
// Requires w to be zero or a difference of two basis vectors.
int gamma_sign(const Monomial& mon);

// One linear form a*eps1 + b*eps2 + sum_i w_i * a_i per monomial, with
// multiplicity; requires an effective class (all coefficients > 0).
struct LinearForm {
    i64 a = 0;
    i64 b = 0;
    std::vector<i64> w;

    std::string str() const;
};

std::vector<LinearForm> euler_linear_forms(const KClass& X);

// True iff the monomial multiset is invariant under mu -> t1 t2 mu^{-1}
// (the holomorphic-symplectic pairing on tangent classes).
bool has_symplectic_symmetry(const KClass& X);

}  // namespace bow
