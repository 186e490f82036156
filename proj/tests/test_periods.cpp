#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qweyl/coxrep.hpp"
#include "qweyl/periods.hpp"

using namespace qweyl;

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex vpow(double kappa, double x) { return std::exp(Complex(0, kPi * kappa * x)); }

struct Family {
    std::vector<int> y, w;
    int a, b;      // exponent indices: entries -v^{s(mu_a+mu_b)}, -v^{s mu_a}
    bool swapped;  // true when the (phi'', phi') pair leads
};

const std::vector<Family> kFamilies = {
    {{}, {0}, 0, 2, false},          {{}, {1}, 1, 2, true},
    {{0}, {1, 0}, 1, 0, false},      {{1}, {0, 1}, 0, 1, true},
    {{1, 0}, {0, 1, 0}, 2, 1, false}, {{0, 1}, {0, 1, 0}, 2, 0, true},
};

Mat2 family_matrix(const Family& f, int sign, const std::array<Complex, 3>& mu,
                   double kappa) {
    Complex p = vpow(kappa, sign * (mu[f.a] + mu[f.b]).real());
    Complex q = vpow(kappa, sign * mu[f.a].real());
    Mat2 m;
    if (f.swapped)
        m << -q, -p, 1, 0;
    else
        m << 0, 1, -p, -q;
    return m;
}

std::vector<Complex> sorted_eigs(const Mat2& m) {
    Eigen::ComplexEigenSolver<Mat2> es(m, false);
    std::vector<Complex> v = {es.eigenvalues()(0), es.eigenvalues()(1)};
    std::sort(v.begin(), v.end(),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    return v;
}

}  // namespace

TEST_CASE("gauss_jacobi reproduces beta integrals") {
    // int_{-1}^{1} (1-x)^a (1+x)^b f dx with f = 1 and f = x
    std::vector<double> x, w;
    double a = 0.3, b = -0.45;
    gauss_jacobi(24, a, b, x, w);
    double s0 = 0, s1 = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        s0 += w[i];
        s1 += w[i] * x[i];
    }
    double beta = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                  std::tgamma(a + b + 2);
    CHECK(std::abs(s0 - beta) < 1e-13);
    // first moment of the Jacobi weight: beta * (b - a)/(a + b + 2)
    CHECK(std::abs(s1 - beta * (b - a) / (a + b + 2)) < 1e-13);
}

TEST_CASE("line sections: puncture positions and epsilon scaling") {
    std::array<Complex, 3> mu = {0.31, 0.45, 0.27};
    LineSection e1 = line_section({}, 1.0, mu, 0.1);
    CHECK(std::abs(e1.punct[0] - Complex(0.0)) < 1e-14);
    CHECK(std::abs(e1.punct[1] - Complex(1.0)) < 1e-14);
    CHECK(std::abs(e1.punct[2] - Complex(0.5)) < 1e-14);
    LineSection e2 = line_section({}, 2.5, mu, 0.1);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(e2.punct[k] - 2.5 * e1.punct[k]) < 1e-14);
    CHECK_THROWS_AS(line_section({0, 0}, 1.0, mu, 0.1), std::invalid_argument);
}

TEST_CASE("transport along the identity path is the identity") {
    std::array<Complex, 3> mu = {0.31, 0.45, 0.27};
    LineSection sec = line_section({}, 1.0, mu, 0.1);
    auto traj = [&](double) { return sec.punct; };
    TransportResult r = transport_cycles(sec, sec, traj, 1e-10);
    CHECK((r.matrix - Mat2::Identity()).norm() < 1e-10);
    CHECK(r.error < 1e-10);
}

TEST_CASE("retraced detour transports to the identity") {
    std::array<Complex, 3> mu = {0.31, 0.45, 0.27};
    LineSection sec = line_section({}, 1.0, mu, 0.1);
    auto traj = [&](double s) -> std::array<Complex, 3> {
        double t = (s < 0.5) ? 0.5 * std::sin(kPi * s) : 0.5 * std::sin(kPi * (1 - s));
        return {Complex(0.0), std::exp(Complex(0, 2 * kPi * t)), Complex(0.5)};
    };
    TransportResult r = transport_cycles(sec, sec, traj, 1e-9);
    CHECK((r.matrix - Mat2::Identity()).norm() < 1e-9);
}

TEST_CASE("full rotation of one puncture: local-system monodromy eigenvalues") {
    std::array<Complex, 3> mu = {0.31, 0.45, 0.27};
    double kappa = 0.1;
    LineSection sec = line_section({}, 1.0, mu, kappa);
    // move p1 from 1 to 0.8, circle it around p2 = 1/2, move back
    auto traj = [&](double s) -> std::array<Complex, 3> {
        Complex p1;
        if (s < 0.25)
            p1 = 1.0 - 0.2 * (s / 0.25);
        else if (s > 0.75)
            p1 = 1.0 - 0.2 * ((1 - s) / 0.25);
        else
            p1 = 0.5 + 0.3 * std::exp(Complex(0, 2 * kPi * (s - 0.25) / 0.5));
        return {Complex(0.0), p1, Complex(0.5)};
    };
    TransportResult r = transport_cycles(sec, sec, traj, 1e-9);
    auto eig = sorted_eigs(r.matrix);
    // encircled pair contributes v^{2(mu2+mu3)} = e^{2 pi i (rho1+rho2)}
    Complex expect = vpow(kappa, 2 * (mu[1] + mu[2]).real());
    double d = std::min(std::abs(eig[0] - 1.0) + std::abs(eig[1] - expect),
                        std::abs(eig[1] - 1.0) + std::abs(eig[0] - expect));
    CHECK(d < 1e-8);
}

TEST_CASE("half-monodromy families at generic exponent triples") {
    double kappa = 0.1, tol = 1e-6;
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    for (int trial = 0; trial < 3; ++trial) {
        std::array<Complex, 3> mu;
        do {
            for (auto& m : mu) m = U(rng);
        } while (std::abs(mu[0].real()) < 0.05 || std::abs(mu[1].real()) < 0.05 ||
                 std::abs(mu[2].real()) < 0.05);
        CAPTURE(trial);
        for (const auto& f : kFamilies) {
            for (int sign : {1, -1}) {
                TransportResult r = half_monodromy(f.y, f.w, sign, mu, kappa, tol);
                Mat2 want = family_matrix(f, sign, mu, kappa);
                CHECK((r.matrix - want).norm() < tol);
                // determinant v^{sign (mu_a + mu_b)}
                Complex det = r.matrix.determinant();
                CHECK(std::abs(det - vpow(kappa, sign * (mu[f.a] + mu[f.b]).real())) <
                      tol);
            }
        }
        // composite across three walls: v^{sign (mu1+mu2+mu3)} Id
        for (int sign : {1, -1}) {
            Mat2 c = half_monodromy({1, 0}, {0, 1, 0}, sign, mu, kappa, tol).matrix *
                     half_monodromy({0}, {1, 0}, sign, mu, kappa, tol).matrix *
                     half_monodromy({}, {0}, sign, mu, kappa, tol).matrix;
            Mat2 want =
                vpow(kappa, sign * (mu[0] + mu[1] + mu[2]).real()) * Mat2::Identity();
            CHECK((c - want).norm() < tol);
        }
    }
}

TEST_CASE("wall loop invariants and inverse relation") {
    std::array<Complex, 3> mu = {0.31, 0.45, 0.27};
    double kappa = 0.1;
    // (gamma-)^{-1} gamma+ has eigenvalues {1, v^{2(mu_a+mu_b)}}
    for (const auto& f : kFamilies) {
        Mat2 gp = half_monodromy(f.y, f.w, +1, mu, kappa, 1e-8).matrix;
        Mat2 gm = half_monodromy(f.y, f.w, -1, mu, kappa, 1e-8).matrix;
        auto eig = sorted_eigs(gm.inverse() * gp);
        Complex expect = vpow(kappa, 2 * (mu[f.a] + mu[f.b]).real());
        double d = std::min(std::abs(eig[0] - 1.0) + std::abs(eig[1] - expect),
                            std::abs(eig[1] - 1.0) + std::abs(eig[0] - expect));
        CHECK(d < 1e-7);
    }
    // adjoint-weight specialization: in the crossing presentation (rows of the
    // e->1 matrix swapped to the chamber-1 pair order) A+ A- = Id, with
    // A(+/-) = [[-v^{+/-2}, -v^{+/-1}], [0, 1]]
    std::array<Complex, 3> ones = {1.0, 1.0, 1.0};
    Mat2 P;
    P << 0, 1, 1, 0;
    Mat2 ap = P * half_monodromy({}, {0}, +1, ones, kappa, 1e-8).matrix;
    Mat2 am = P * half_monodromy({}, {0}, -1, ones, kappa, 1e-8).matrix;
    for (int sign : {1, -1}) {
        Mat2 want;
        want << -vpow(kappa, 2 * sign), -vpow(kappa, sign), 0, 1;
        CHECK(((sign > 0 ? ap : am) - want).norm() < 1e-7);
    }
    CHECK((ap * am - Mat2::Identity()).norm() < 1e-7);
}

TEST_CASE("step refinement stays within the reported error") {
    std::array<Complex, 3> mu = {0.11, -0.37, 0.43};
    TransportResult r1 = half_monodromy({}, {0}, +1, mu, 0.1, 1e-6);
    TransportResult r2 = half_monodromy({}, {0}, +1, mu, 0.1, 1e-8);
    CHECK((r1.matrix - r2.matrix).norm() < 2 * (r1.error + r2.error) + 1e-9);
    CHECK(r1.error < 1e-5);
}

TEST_CASE("degeneration to the quantum crossing matrix") {
    double kappa = 0.1, del = 1e-4;
    Complex zeta = std::exp(Complex(0, kPi * kappa));
    for (auto [m1, m2] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}}) {
        CAPTURE(m1);
        CAPTURE(m2);
        CartanDatum cd = CartanDatum::of_type("A2");
        QuantumModule M(cd, Weight{{m1, m2}});
        GroupoidRep rep(M);
        ChamberComplex cc(cd, {0, 1});
        auto bases = canonical_bases(M);
        for (int sign : {1, -1}) {
            GroupoidPath p{cc.base(), {{0, sign}}};
            auto mat = matrix_in_bases(rep.holonomy(cc, p), bases[0].vectors,
                                       bases[1].vectors);
            Mat2 Q;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) Q(i, j) = mat[i][j].eval(zeta);
            if (bases[0].swapped) Q = (Mat2() << Q(0, 1), Q(0, 0), Q(1, 1), Q(1, 0)).finished();
            if (bases[1].swapped) Q = (Mat2() << Q(1, 0), Q(1, 1), Q(0, 0), Q(0, 1)).finished();
            auto f = [&](double d) {
                std::array<Complex, 3> mu = {double(m1), double(m2), 1.0 - d};
                return half_monodromy({}, {0}, sign, mu, kappa, 1e-8).matrix;
            };
            Mat2 extrap = 2.0 * f(del / 2) - f(del);
            CHECK((Q - extrap).norm() < 1e-5);
        }
    }
}
