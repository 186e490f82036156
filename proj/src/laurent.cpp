#include "qweyl/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qweyl {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::lowest_exp() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

long LaurentPoly::highest_exp() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long exp, const Rational& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Complex LaurentPoly::eval(Complex z) const {
    // Horner over the exponent range; exponents are small in practice.
    if (terms_.empty()) return {0.0, 0.0};
    long lo = lowest_exp(), hi = highest_exp();
    Complex acc{0.0, 0.0};
    for (long e = hi; e >= lo; --e) {
        acc *= z;
        Rational c = coeff(e);
        if (c != 0) acc += Complex(c.get_d(), 0.0);
    }
    if (lo != 0) acc *= std::pow(z, static_cast<double>(lo));
    return acc;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

static std::string coeff_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        long e = it->first;
        if (e == 0) {
            out += coeff_str(a);
        } else {
            if (a != 1) out += coeff_str(a) + "*";
            out += "v";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly qint(long n, long d) {
    if (n < 0) return -qint(-n, d);
    LaurentPoly r;
    // [n]_d = v^{d(n-1)} + v^{d(n-3)} + ... + v^{-d(n-1)}
    for (long k = n - 1; k >= -(n - 1); k -= 2) r += LaurentPoly::monomial(d * k);
    return r;
}

LaurentPoly qfact(long n, long d) {
    LaurentPoly r(1);
    for (long k = 2; k <= n; ++k) r *= qint(k, d);
    return r;
}

LaurentPoly qbinom(long n, long k, long d) {
    if (k < 0 || k > n) return LaurentPoly();
    LaurentPoly num(1);
    for (long j = 0; j < k; ++j) num *= qint(n - j, d);
    return divide_exact(num, qfact(k, d));
}

// --- dense polynomial helpers for gcd / division ------------------------

namespace {

using Poly = std::vector<Rational>;  // coeffs by ascending degree, no trailing zeros

Poly to_poly(const LaurentPoly& p, long& shift) {
    // p = v^shift * poly with nonzero constant term
    assert(!p.is_zero());
    shift = p.lowest_exp();
    Poly out(static_cast<size_t>(p.highest_exp() - shift + 1), Rational(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e - shift)] = c;
    return out;
}

LaurentPoly from_poly(const Poly& p, long shift) {
    LaurentPoly out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out += LaurentPoly::monomial(shift + static_cast<long>(i), p[i]);
    return out;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b (b nonzero), in place on a.
void rem_inplace(Poly& a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem_inplace(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}

Poly poly_divide_exact(const Poly& a, const Poly& b) {
    Poly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rational c = r.back() / b.back();
        size_t off = r.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
        r.pop_back();
        trim(r);
    }
    if (!r.empty()) throw std::domain_error("inexact polynomial division");
    return q;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    long sa, sb;
    Poly pa = to_poly(a, sa), pb = to_poly(b, sb);
    Poly q = poly_divide_exact(pa, pb);
    return from_poly(q, sa - sb);
}

// --- RatFunc -------------------------------------------------------------

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Move the monomial content of the denominator into the numerator.
    long dshift = den_.lowest_exp();
    den_ = den_.shifted(-dshift);
    num_ = num_.shifted(-dshift);

    if (!den_.is_one()) {
        long nshift;
        Poly pn = to_poly(num_, nshift);
        long zero_shift;
        Poly pd = to_poly(den_, zero_shift);
        Poly g = poly_gcd(pn, pd);
        if (g.size() > 1) {
            pn = poly_divide_exact(pn, g);
            pd = poly_divide_exact(pd, g);
            num_ = from_poly(pn, nshift);
            den_ = from_poly(pd, 0);
            // the gcd may have had a root at 0 removed already; re-shift
            long ds = den_.lowest_exp();
            if (ds != 0) {
                den_ = den_.shifted(-ds);
                num_ = num_.shifted(-ds);
            }
        }
    }
    // Scale so den has coprime integer coefficients, positive leading coeff.
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [e, c] : den_.terms()) {
        mpz_class d = c.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& [e, c] : den_.terms()) {
        mpz_class n = mpz_class(c.get_num() * (lcm_den / c.get_den()));
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    if (den_.coeff(den_.highest_exp()) < 0) scale = -scale;
    if (scale != 1) {
        num_ = num_ * LaurentPoly(scale);
        den_ = den_ * LaurentPoly(scale);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    if (is_one()) return o;
    if (o.is_one()) return *this;
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

Complex RatFunc::eval(Complex zeta) const {
    Complex d = den_.eval(zeta);
    double scale = 0.0;
    for (const auto& [e, c] : den_.terms())
        scale += std::abs(c.get_d()) * std::pow(std::abs(zeta), static_cast<double>(e));
    if (std::abs(d) <= 1e-12 * std::max(scale, 1.0)) throw RootOfUnityError(den_.str());
    return num_.eval(zeta) / d;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qweyl
