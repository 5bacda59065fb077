#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "bow/kclass.hpp"
#include "bow/maya.hpp"
#include "bow/util.hpp"

namespace bow {

using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize, and GMP comparisons require
// canonical operands; construct through this instead.
inline Rational make_rational(i64 num, i64 den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// An equivariant parameter point (eps1, eps2, a_1..a_n).  Genericity is
// not checked up front; evaluation raises NonGenericParameter when an
// Euler factor vanishes.
struct ParamPoint {
    Rational eps1;
    Rational eps2;
    std::vector<Rational> a;
};

class NonGenericParameter : public std::runtime_error {
public:
    explicit NonGenericParameter(const std::string& form)
        : std::runtime_error("non-generic parameter point: the linear form " + form +
                             " vanishes"),
          form_(form) {}
    const std::string& form() const { return form_; }

private:
    std::string form_;
};

Rational evaluate_form(const LinearForm& f, const ParamPoint& p);

// Equivariant Euler class of the tangent space at M, evaluated at p:
// the product of the linear forms of tangent_via_pairs(M).
Rational euler_class_value(const MayaDiagram& M, const ParamPoint& p);

// For a class with signed coefficients: product of the forms of the
// positive part divided by the product of the forms of the negative part.
Rational evaluate_signed_ratio(const KClass& X, const ParamPoint& p);

// Z_d = sum over M(d,e,f) of 1/e(T_M), for d = 0..order.
std::vector<Rational> partition_series(const std::vector<i64>& e, const std::vector<i64>& f,
                                       const ParamPoint& p, i64 order);

struct QuiverComparisonReport {
    bool holds = false;
    i64 degree_shift = 0;      // quiver degree = d - degree_shift
    Rational r_factor;         // the d-independent product of inverse R-forms
    std::vector<Rational> lhs; // Z_d of the bow variety
    std::vector<Rational> rhs; // shifted quiver Z times r_factor
    std::string str() const;
};

// m = 1), e 2-bounded non-decreasing: checks
//   Z_d(eps, a) = Z^{M(r,n)}_{d-A}(eps, a + eps1 * e) * prod_R (...)^{-1}
// with A = sum e(e-1)/2; the degree alignment is established empirically
// and reported.
QuiverComparisonReport quiver_comparison(const std::vector<i64>& e, const ParamPoint& p,
                                         i64 order);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace bow
