#include "bow/nekrasov.hpp"

#include <numeric>
#include <sstream>

#include "bow/eyd.hpp"
#include "bow/tangent.hpp"

namespace bow {

Rational evaluate_form(const LinearForm& f, const ParamPoint& p) {
    Rational v = f.a * p.eps1 + f.b * p.eps2;
    for (std::size_t i = 0; i < f.w.size(); ++i)
        if (f.w[i] != 0) v += f.w[i] * p.a[i];
    return v;
}

Rational euler_class_value(const MayaDiagram& M, const ParamPoint& p) {
    if (static_cast<int>(p.a.size()) != M.n())
        throw std::invalid_argument("euler_class_value: parameter point has wrong rank");
    Rational prod = 1;
    for (const LinearForm& f : euler_linear_forms(tangent_via_pairs(M))) {
        Rational v = evaluate_form(f, p);
        if (v == 0) throw NonGenericParameter(f.str());
        prod *= v;
    }
    return prod;
}

Rational evaluate_signed_ratio(const KClass& X, const ParamPoint& p) {
    Rational num = 1, den = 1;
    for (const auto& [mon, c] : X.terms()) {
        LinearForm f{mon.a, mon.b, mon.w};
        Rational v = evaluate_form(f, p);
        if (v == 0) throw NonGenericParameter(f.str());
        for (i64 rep = 0; rep < (c > 0 ? c : -c); ++rep) (c > 0 ? num : den) *= v;
    }
    return num / den;
}

std::vector<Rational> partition_series(const std::vector<i64>& e, const std::vector<i64>& f,
                                       const ParamPoint& p, i64 order) {
    std::vector<Rational> Z(order + 1, Rational(0));
    for (i64 d = 0; d <= order; ++d)
        for_each_fixed_point(d, e, f, [&](const MayaDiagram& M) {
            Z[d] += 1 / euler_class_value(M, p);
        });
    return Z;
}

std::string QuiverComparisonReport::str() const {
    std::ostringstream os;
    os << (holds ? "holds" : "FAILS") << " with degree alignment d -> d - " << degree_shift
       << "; R-factor = " << rational_str(r_factor) << "\n";
    for (std::size_t d = 0; d < lhs.size(); ++d)
        os << "  Z_" << d << " = " << rational_str(lhs[d]) << "  vs  "
           << rational_str(rhs[d]) << "\n";
    return os.str();
}

QuiverComparisonReport quiver_comparison(const std::vector<i64>& e, const ParamPoint& p,
                                         i64 order) {
    const int n = static_cast<int>(e.size());
    if (!is_quiver(e, 2))
        throw std::invalid_argument(
            "quiver_comparison: e must be a 2-bounded non-decreasing sequence");

    const i64 A = std::accumulate(e.begin(), e.end(), i64{0},
                                  [](i64 acc, i64 x) { return acc + x * (x - 1) / 2; });
    const std::vector<i64> f{std::accumulate(e.begin(), e.end(), i64{0})};

    QuiverComparisonReport rep;
    rep.degree_shift = A;
    rep.r_factor = 1;
    for (int alpha = 1; alpha <= n; ++alpha)
        for (int beta = 1; beta <= n; ++beta)
            for (const auto& [s1, s2] : r_region(alpha, beta, e[alpha - 1], e[beta - 1])) {
                LinearForm form{s1, s2, std::vector<i64>(n, 0)};
                form.w[beta - 1] += 1;
                form.w[alpha - 1] -= 1;
                Rational v = evaluate_form(form, p);
                if (v == 0) throw NonGenericParameter(form.str());
                rep.r_factor /= v;
            }

    rep.lhs = partition_series(e, f, p, order);

    ParamPoint shifted = p;
    for (int i = 0; i < n; ++i) shifted.a[i] += e[i] * p.eps1;
    std::vector<Rational> quiver =
        partition_series(std::vector<i64>(n, 0), {0}, shifted, std::max<i64>(order - A, 0));

    rep.rhs.assign(order + 1, Rational(0));
    for (i64 d = 0; d <= order; ++d) {
        i64 dq = d - A;
        if (dq >= 0 && dq < static_cast<i64>(quiver.size()))
            rep.rhs[d] = quiver[dq] * rep.r_factor;
    }
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    std::string s = c.get_num().get_str();
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
    return s;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rational(num);
        }
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

}  // namespace bow
