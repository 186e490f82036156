#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qweyl {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Sparse Laurent polynomial in one variable v with arbitrary-precision
/// rational coefficients.  Canonical form: no stored coefficient is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // constant
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(long exp, const Rational& c = Rational(1));
    static LaurentPoly v(long exp = 1) { return monomial(exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    long lowest_exp() const;   // requires nonzero
    long highest_exp() const;  // requires nonzero
    Rational coeff(long exp) const;
    const std::map<long, Rational>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// v -> v^{-1} involution.
    LaurentPoly bar() const;
    /// Multiply by v^k.
    LaurentPoly shifted(long k) const;

    Complex eval(Complex z) const;
    Rational eval_at_one() const;

    /// `c*v^k` terms sorted by descending exponent, e.g. "v^4 + 2 + v^-4".
    std::string str() const;

private:
    void set(long exp, const Rational& c);
    std::map<long, Rational> terms_;
};

/// Balanced quantum integer [n]_d = (v^{dn} - v^{-dn}) / (v^d - v^{-d}).
LaurentPoly qint(long n, long d);
/// Quantum factorial [n]_d!.
LaurentPoly qfact(long n, long d);
/// Balanced Gaussian binomial; 0 for k outside [0, n].
LaurentPoly qbinom(long n, long k, long d);

/// Exact division a / b; throws std::domain_error if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Thrown when a rational function is evaluated too close to a zero of
/// its denominator (root-of-unity degeneration).
class RootOfUnityError : public std::runtime_error {
public:
    explicit RootOfUnityError(const std::string& factor)
        : std::runtime_error("denominator vanishes at evaluation point: " + factor),
          factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

/// Element of Q(v), kept in lowest terms.  The denominator has lowest
/// exponent 0, integer coprime coefficients and positive leading
/// coefficient, so equality is syntactic.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc bar() const;
    /// Value at v = zeta; throws RootOfUnityError if the denominator is
    /// smaller than 1e-12 relative to its coefficient size there.
    Complex eval(Complex zeta) const;
    std::string str() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

}  // namespace qweyl
