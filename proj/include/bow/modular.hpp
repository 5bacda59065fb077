#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bow/util.hpp"

namespace bow {

// sum of positive divisors of k; requires k >= 1
i64 sigma(i64 k);

struct SigmaSeriesReport {
    bool holds = false;
    std::optional<i64> first_failure;  // the n at which the identity first fails
    std::vector<i64> coefficients;     // z0 coefficients q^{offset} .. q^{offset+N}
    std::vector<i64> sigma_values;     // sigma(residue), sigma(3+residue), ...
    std::string str() const;
};

// Checks that the q^{n+offset} coefficient of Z_0 for the margins (e, f)
// equals sigma(3n + residue) for 0 <= n <= N.  The two golden cases are
//   e = f = (3,2,1):            residue 1, offset 0,
//   e = (-1,-1,-1), f=(-2,-1,0): residue 2, offset 3.
SigmaSeriesReport check_sigma_series(const std::vector<i64>& e, const std::vector<i64>& f,
                                     i64 residue, i64 offset, i64 N);

struct QuadraticFormReport {
    bool holds = false;
    i64 points_checked = 0;
    bool aux_identities = false;  // m^T A x = d - a, x^T A x = 2/3, A * (9 A^{-1}) = 9 I
    std::string str() const;
};

// Fixed data of the quadratic-form parametrization of the 3x3 integer
// matrices with margins (3,2,1)/(3,2,1): the Gram matrix A with
// det A = 81, its scaled inverse 9 A^{-1}, and the base table.
extern const std::array<std::array<i64, 4>, 4> kThetaGram;
extern const std::array<std::array<i64, 4>, 4> kThetaGramNineInv;
extern const std::array<std::array<i64, 3>, 3> kMarginBase;

// Verifies, for all (a,b,c,d) in [-box, box]^4, that the parametrized
// matrix w = base + (linear in a,b,c,d) has margins (3,2,1)/(3,2,1) and
// that F(w) = sum w(w-1)/2 equals m^T A m / 2 + d - a, together with the
// auxiliary identities m^T A h = 9(d-a), h^T A h = 54, A (9 A^{-1}) = 9 I.
QuadraticFormReport quadratic_form_check(i64 box);

// The theta-series route to Z_0 for margins (3,2,1)/(3,2,1): sum over
// (a,b,c,d) of q^{F(w)}, truncated at `order`.  An independent check of
// the contingency-table enumeration.
std::vector<i64> z0_321_via_theta(i64 order);

}  // namespace bow
