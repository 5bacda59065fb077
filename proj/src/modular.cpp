#include "bow/modular.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bow/series.hpp"

namespace bow {

i64 sigma(i64 k) {
    if (k < 1) throw std::invalid_argument("sigma: need k >= 1");
    i64 s = 0;
    for (i64 d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        s += d;
        if (d != k / d) s += k / d;
    }
    return s;
}

const std::array<std::array<i64, 4>, 4> kThetaGram = {{{4, 2, 2, 1},
                                                       {2, 4, 1, 2},
                                                       {2, 1, 4, 2},
                                                       {1, 2, 2, 4}}};

const std::array<std::array<i64, 4>, 4> kThetaGramNineInv = {{{4, -2, -2, 1},
                                                              {-2, 4, 1, -2},
                                                              {-2, 1, 4, -2},
                                                              {1, -2, -2, 4}}};

const std::array<std::array<i64, 3>, 3> kMarginBase = {{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}};

std::string SigmaSeriesReport::str() const {
    std::ostringstream os;
    if (holds) {
        os << "sigma identity holds for n = 0.." << coefficients.size() - 1;
    } else if (first_failure) {
        os << "sigma identity FAILS first at n = " << *first_failure << " (coefficient "
           << coefficients[*first_failure] << ", sigma " << sigma_values[*first_failure]
           << ")";
    } else {
        os << "sigma identity FAILS";
    }
    return os.str();
}

SigmaSeriesReport check_sigma_series(const std::vector<i64>& e, const std::vector<i64>& f,
                                     i64 residue, i64 offset, i64 N) {
    SigmaSeriesReport rep;
    QSeries Z0 = z0(e, f, offset + N);
    rep.holds = true;
    for (i64 n = 0; n <= N; ++n) {
        rep.coefficients.push_back(Z0.coeffs[n + offset]);
        rep.sigma_values.push_back(sigma(3 * n + residue));
        if (rep.coefficients.back() != rep.sigma_values.back() && rep.holds) {
            rep.holds = false;
            rep.first_failure = n;
        }
    }
    return rep;
}

namespace {

// w = base + [[a,b,-a-b],[c,d,-c-d],[-a-c,-b-d,a+b+c+d]]
std::array<std::array<i64, 3>, 3> parametrized_w(i64 a, i64 b, i64 c, i64 d) {
    std::array<std::array<i64, 3>, 3> w = kMarginBase;
    w[0][0] += a;
    w[0][1] += b;
    w[0][2] += -a - b;
    w[1][0] += c;
    w[1][1] += d;
    w[1][2] += -c - d;
    w[2][0] += -a - c;
    w[2][1] += -b - d;
    w[2][2] += a + b + c + d;
    return w;
}

i64 quad_form(const std::array<i64, 4>& m) {
    i64 s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m[i] * kThetaGram[i][j] * m[j];
    return s;  // m^T A m (even; halved by callers)
}

i64 F_of_w(const std::array<std::array<i64, 3>, 3>& w) {
    i64 s = 0;
    for (const auto& row : w)
        for (i64 x : row) s += x * (x - 1) / 2;
    return s;
}

}  // namespace

std::string QuadraticFormReport::str() const {
    std::ostringstream os;
    os << (holds ? "quadratic-form identities hold" : "quadratic-form identities FAIL") << " on "
       << points_checked << " lattice points; auxiliary identities "
       << (aux_identities ? "hold" : "FAIL");
    return os.str();
}

QuadraticFormReport quadratic_form_check(i64 box) {
    QuadraticFormReport rep;
    rep.holds = true;

    // A * (9 A^{-1}) = 9 I,  h^T A h = 81 * x^T A x = 54  (x = h/9),
    // and m^T A x = d - a reduces to m^T A h = 9(d - a).
    rep.aux_identities = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            i64 s = 0;
            for (int k = 0; k < 4; ++k) s += kThetaGram[i][k] * kThetaGramNineInv[k][j];
            if (s != (i == j ? 9 : 0)) rep.aux_identities = false;
        }
    const std::array<i64, 4> h = {-3, 0, 0, 3};
    i64 hAh = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) hAh += h[i] * kThetaGram[i][j] * h[j];
    if (hAh != 54) rep.aux_identities = false;

    for (i64 a = -box; a <= box && rep.holds; ++a)
        for (i64 b = -box; b <= box && rep.holds; ++b)
            for (i64 c = -box; c <= box && rep.holds; ++c)
                for (i64 d = -box; d <= box && rep.holds; ++d) {
                    const auto w = parametrized_w(a, b, c, d);
                    for (int i = 0; i < 3; ++i) {
                        i64 rs = w[i][0] + w[i][1] + w[i][2];
                        i64 cs = w[0][i] + w[1][i] + w[2][i];
                        if (rs != 3 - i || cs != 3 - i) rep.holds = false;
                    }
                    const std::array<i64, 4> mvec = {a, b, c, d};
                    if (F_of_w(w) != quad_form(mvec) / 2 + d - a) rep.holds = false;
                    // m^T A h = 9 (d - a)
                    i64 mAh = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) mAh += mvec[i] * kThetaGram[i][j] * h[j];
                    if (mAh != 9 * (d - a)) rep.holds = false;
                    ++rep.points_checked;
                }
    rep.holds = rep.holds && rep.aux_identities;
    return rep;
}

std::vector<i64> z0_321_via_theta(i64 order) {
    std::vector<i64> coeffs(order + 1, 0);
    // F >= ||m||^2 / 2 - |d - a| (lambda_min(A) = 1), so |entries| <= bound
    // exhausts all F <= order.
    const i64 bound = 2 + static_cast<i64>(std::ceil(1.0 + std::sqrt(2.0 + 2.0 * order)));
    for (i64 a = -bound; a <= bound; ++a)
        for (i64 b = -bound; b <= bound; ++b)
            for (i64 c = -bound; c <= bound; ++c)
                for (i64 d = -bound; d <= bound; ++d) {
                    i64 F = F_of_w(parametrized_w(a, b, c, d));
                    if (F >= 0 && F <= order) ++coeffs[F];
                }
    return coeffs;
}

}  // namespace bow
