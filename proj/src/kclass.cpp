#include "bow/kclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace bow {

Monomial Monomial::inverse() const {
    Monomial r;
    r.a = -a;
    r.b = -b;
    r.w.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = -w[i];
    return r;
}

std::string Monomial::str() const {
    std::string s;
    auto pow = [&](const std::string& var, i64 exp) {
        if (exp == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (exp != 1) s += "^" + std::to_string(exp);
    };
    for (std::size_t i = 0; i < w.size(); ++i) pow("u" + std::to_string(i + 1), w[i]);
    pow("t1", a);
    pow("t2", b);
    if (s.empty()) s = "1";
    return s;
}

i64 KClass::coeff(const Monomial& mon) const {
    auto it = terms_.find(mon);
    return it == terms_.end() ? 0 : it->second;
}

i64 KClass::monomial_count() const {
    i64 total = 0;
    for (const auto& [mon, c] : terms_) {
        if (c < 0) throw std::invalid_argument("monomial_count: negative coefficient");
        total = checked_add(total, c);
    }
    return total;
}

void KClass::check_compatible(const KClass& o) const {
    if (n_ != o.n_) throw std::invalid_argument("KClass: mixing classes with different n");
}

void KClass::add_term(const Monomial& mon, i64 coeff) {
    if (static_cast<int>(mon.w.size()) != n_)
        throw std::invalid_argument("KClass: monomial with wrong number of u-variables");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mon, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

void KClass::add_monomial(i64 a, i64 b, std::vector<i64> w, i64 coeff) {
    Monomial mon;
    mon.a = a;
    mon.b = b;
    mon.w = std::move(w);
    add_term(mon, coeff);
}

KClass& KClass::operator+=(const KClass& o) {
    check_compatible(o);
    for (const auto& [mon, c] : o.terms_) add_term(mon, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    check_compatible(o);
    for (const auto& [mon, c] : o.terms_) add_term(mon, -c);
    return *this;
}

KClass KClass::operator+(const KClass& o) const {
    KClass r = *this;
    r += o;
    return r;
}

KClass KClass::operator-(const KClass& o) const {
    KClass r = *this;
    r -= o;
    return r;
}

KClass KClass::operator*(i64 s) const {
    KClass r(n_);
    if (s == 0) return r;
    for (const auto& [mon, c] : terms_) r.terms_[mon] = checked_mul(c, s);
    return r;
}

KClass KClass::shifted(i64 a, i64 b, const std::vector<i64>& w) const {
    KClass r(n_);
    for (const auto& [mon, c] : terms_) {
        Monomial shifted_mon = mon;
        shifted_mon.a += a;
        shifted_mon.b += b;
        for (std::size_t i = 0; i < w.size(); ++i) shifted_mon.w[i] += w[i];
        r.terms_.emplace(shifted_mon, c);
    }
    return r;
}

KClass KClass::shifted(i64 a, i64 b) const { return shifted(a, b, std::vector<i64>(n_, 0)); }

KClass KClass::dual() const {
    KClass r(n_);
    for (const auto& [mon, c] : terms_) r.terms_.emplace(mon.inverse(), c);
    return r;
}

KClass KClass::swap_u(int j) const {
    if (j < 1 || j > n_ - 1) throw std::invalid_argument("swap_u: index out of range");
    KClass r(n_);
    for (const auto& [mon, c] : terms_) {
        Monomial swapped = mon;
        std::swap(swapped.w[j - 1], swapped.w[j]);
        r.terms_.emplace(swapped, c);
    }
    return r;
}

std::string KClass::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mon, c] : terms_) {
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        i64 mag = std::abs(c);
        if (mag != 1) s += std::to_string(mag) + "*";
        s += mon.str();
    }
    return s;
}

int gamma_sign(const Monomial& mon) {
    int plus_at = -1, minus_at = -1;
    bool bad = false;
    for (std::size_t i = 0; i < mon.w.size(); ++i) {
        if (mon.w[i] == 0) continue;
        if (mon.w[i] == 1 && plus_at < 0) plus_at = static_cast<int>(i);
        else if (mon.w[i] == -1 && minus_at < 0) minus_at = static_cast<int>(i);
        else bad = true;
    }
    if (bad || (plus_at < 0) != (minus_at < 0))
        throw std::invalid_argument("gamma_sign: unsupported u-exponent shape");
    if (mon.b != 0) return mon.b > 0 ? 1 : -1;
    if (plus_at >= 0) return plus_at < minus_at ? 1 : -1;
    if (mon.a != 0) return mon.a > 0 ? 1 : -1;
    return 0;
}

std::string LinearForm::str() const {
    std::string s;
    auto term = [&](i64 coeff, const std::string& var) {
        if (coeff == 0) return;
        if (coeff > 0 && !s.empty()) s += "+";
        if (coeff == -1) s += "-";
        else if (coeff != 1) s += std::to_string(coeff) + "*";
        s += var;
    };
    term(a, "eps1");
    term(b, "eps2");
    for (std::size_t i = 0; i < w.size(); ++i) term(w[i], "a" + std::to_string(i + 1));
    if (s.empty()) s = "0";
    return s;
}

std::vector<LinearForm> euler_linear_forms(const KClass& X) {
    std::vector<LinearForm> forms;
    for (const auto& [mon, c] : X.terms()) {
        if (c < 0) throw std::invalid_argument("euler_linear_forms: class is not effective");
        LinearForm f;
        f.a = mon.a;
        f.b = mon.b;
        f.w = mon.w;
        for (i64 rep = 0; rep < c; ++rep) forms.push_back(f);
    }
    return forms;
}

bool has_symplectic_symmetry(const KClass& X) {
    for (const auto& [mon, c] : X.terms()) {
        Monomial partner = mon.inverse();
        partner.a += 1;
        partner.b += 1;
        if (X.coeff(partner) != c) return false;
    }
    return true;
}

}  // namespace bow
