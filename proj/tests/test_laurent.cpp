#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qweyl/laurent.hpp"

using namespace qweyl;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-5, 5), coef(-6, 6), den(1, 4);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Rational c(coef(rng), den(rng));
        c.canonicalize();
        p += LaurentPoly::monomial(expd(rng), c);
    }
    return p;
}

RatFunc random_ratfunc(std::mt19937& rng) {
    LaurentPoly num = random_poly(rng), den;
    while (den.is_zero()) den = random_poly(rng);
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("quantum integers against the defining relation") {
    // [n]_d * (v^d - v^-d) == v^{dn} - v^{-dn}, checked by multiplication
    for (long d = 1; d <= 3; ++d) {
        LaurentPoly unit = LaurentPoly::v(d) - LaurentPoly::v(-d);
        for (long n = -8; n <= 8; ++n) {
            LaurentPoly target = LaurentPoly::v(d * n) - LaurentPoly::v(-d * n);
            CHECK(qint(n, d) * unit == target);
        }
    }
    CHECK(qint(0, 1).is_zero());
    CHECK(qint(1, 2).is_one());
    CHECK(qint(2, 1).str() == "v + v^-1");
}

TEST_CASE("bar symmetry of quantum integers and binomials") {
    for (long d = 1; d <= 3; ++d)
        for (long n = 0; n <= 8; ++n) {
            CHECK(qint(n, d).bar() == qint(n, d));
            for (long k = 0; k <= n; ++k) CHECK(qbinom(n, k, d).bar() == qbinom(n, k, d));
        }
}

TEST_CASE("Gaussian binomials satisfy the Pascal identity") {
    // [n;k]_d = v^{d(n-k)} [n-1;k-1]_d + v^{-dk} [n-1;k]_d
    for (long d = 1; d <= 2; ++d)
        for (long n = 1; n <= 12; ++n)
            for (long k = 0; k <= n; ++k) {
                LaurentPoly lhs = qbinom(n, k, d);
                LaurentPoly rhs = qbinom(n - 1, k - 1, d).shifted(d * (n - k)) +
                                  qbinom(n - 1, k, d).shifted(-d * k);
                CHECK(lhs == rhs);
            }
    CHECK(qbinom(4, 2, 1).str() == "v^4 + v^2 + 2 + v^-2 + v^-4");
    CHECK(qbinom(3, 5, 1).is_zero());
    CHECK(qbinom(3, -1, 1).is_zero());
}

TEST_CASE("binomials also match the factorial quotient") {
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(qbinom(n, k, 1) * qfact(k, 1) * qfact(n - k, 1) == qfact(n, 1));
}

TEST_CASE("rational functions are canonical") {
    LaurentPoly v1 = LaurentPoly::v(1), vm1 = LaurentPoly::v(-1);
    // (v^2 - v^-2) / (v - v^-1) reduces to v + v^-1
    RatFunc r(LaurentPoly::v(2) - LaurentPoly::v(-2), v1 - vm1);
    CHECK(r == RatFunc(v1 + vm1));
    CHECK(r.den().is_one());
    // scaling numerator and denominator together does not change anything
    RatFunc a(qint(5, 1), qint(3, 1));
    RatFunc b(qint(5, 1) * LaurentPoly(Rational(7, 3)) * LaurentPoly::v(4),
              qint(3, 1) * LaurentPoly(Rational(7, 3)) * LaurentPoly::v(4));
    CHECK(a == b);
    // denominator normalization: lowest exponent 0, integer primitive, positive lead
    CHECK(b.den().lowest_exp() == 0);
    for (const auto& [e, c] : b.den().terms()) CHECK(c.get_den() == 1);
    CHECK(b.den().coeff(b.den().highest_exp()) > 0);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc(1));
            CHECK(a.inverse().inverse() == a);
        }
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
}

TEST_CASE("evaluation is a homomorphism") {
    std::mt19937 rng(777);
    Complex zeta = std::polar(1.0, 0.1 * M_PI);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        try {
            Complex va = a.eval(zeta), vb = b.eval(zeta);
            CHECK(std::abs((a + b).eval(zeta) - (va + vb)) < 1e-10);
            CHECK(std::abs((a * b).eval(zeta) - va * vb) < 1e-10);
        } catch (const RootOfUnityError&) {
            // random denominator happened to vanish near zeta; fine
        }
    }
}

TEST_CASE("evaluation at a root of the denominator is rejected") {
    // v^2 + 1 vanishes at v = i
    RatFunc r(LaurentPoly(1), LaurentPoly::v(2) + LaurentPoly(1));
    CHECK_THROWS_AS(r.eval(Complex(0.0, 1.0)), RootOfUnityError);
    // [2]_1 = v + v^-1 vanishes at a primitive 4th root of unity
    RatFunc s(LaurentPoly(1), qint(2, 1));
    CHECK_THROWS_AS(s.eval(std::polar(1.0, M_PI / 2)), RootOfUnityError);
    CHECK_NOTHROW(s.eval(std::polar(1.0, 0.1 * M_PI)));
}
