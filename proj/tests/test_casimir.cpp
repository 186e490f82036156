#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "qweyl/casimir.hpp"

using namespace qweyl;

namespace {

std::vector<int> full_diagram(const CartanDatum& cd) {
    std::vector<int> d(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) d[i] = i;
    return d;
}

std::vector<double> sorted_eigs_arg(const CMat& m) {
    Eigen::ComplexEigenSolver<CMat> es(m, false);
    std::vector<double> v;
    for (int i = 0; i < m.rows(); ++i) v.push_back(std::arg(es.eigenvalues()[i]));
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> sorted_real_eigs(const CMat& m) {
    Eigen::ComplexEigenSolver<CMat> es(m, false);
    std::vector<double> v;
    for (int i = 0; i < m.rows(); ++i) {
        CHECK(std::abs(es.eigenvalues()[i].imag()) < 1e-9);
        v.push_back(es.eigenvalues()[i].real());
    }
    std::sort(v.begin(), v.end());
    return v;
}

// fe eigenvalues of the sl2-string decomposition for the root alpha, from
// weight multiplicities alone: a string whose top weight mu has
// m = <mu, alpha-check> contributes k(m - k + 1) at depth k = 0..m.
std::vector<double> string_fe_eigs(const QuantumModule& M, const CartanDatum& cd,
                                   const Root& alpha) {
    std::vector<double> eigs;
    for (const Weight& mu : M.weights()) {
        mpq_class mq = cd.weight_root_pairing(mu, alpha);
        long m = static_cast<long>(mq.get_d());
        if (m < 0) continue;
        // mu + alpha in fundamental coordinates
        Weight mua = mu;
        for (int i = 0; i < cd.rank(); ++i) {
            long add = 0;
            for (int j = 0; j < cd.rank(); ++j) add += alpha.c[j] * cd.a(i, j);
            mua.c[i] = mu.c[i] + add;
        }
        long tops = M.multiplicity(mu) - M.multiplicity(mua);
        for (long s = 0; s < tops; ++s)
            for (long k = 0; k <= m; ++k)
                eigs.push_back(static_cast<double>(k * (m - k + 1)));
    }
    return eigs;
}

}  // namespace

TEST_CASE("classical module reproduces rank-one sl2 arithmetic") {
    CartanDatum cd = CartanDatum::of_type("A1");
    QuantumModule M(cd, Weight{{3}});
    ClassicalModule C = build_classical(M);
    REQUIRE(C.dim == 4);
    REQUIRE(C.positive_roots.size() == 1);

    // e F^{(k)} = (n-k+1) F^{(k-1)}, f F^{(k-1)} = k F^{(k)}  =>  fe has
    // eigenvalues k(n-k+1) = {0, 3, 4, 3}.
    std::vector<double> eigs = sorted_real_eigs(C.f[0] * C.e[0]);
    std::vector<double> want = {0, 3, 3, 4};
    for (size_t i = 0; i < want.size(); ++i) CHECK(std::abs(eigs[i] - want[i]) < 1e-10);
    CHECK((C.A[0] - C.f[0] * C.e[0]).norm() < 1e-12);
}

TEST_CASE("Chevalley relations and weight grading at v = 1") {
    for (const char* type : {"A2", "B2"}) {
        CartanDatum cd = CartanDatum::of_type(type);
        QuantumModule M(cd, Weight{{1, 1}});
        ClassicalModule C = build_classical(M);

        for (int i = 0; i < cd.rank(); ++i)
            for (int j = 0; j < cd.rank(); ++j) {
                CMat comm = C.e[i] * C.f[j] - C.f[j] * C.e[i];
                CMat want = CMat::Zero(C.dim, C.dim);
                if (i == j)
                    for (int k = 0; k < C.dim; ++k)
                        want(k, k) = static_cast<double>(C.weight_of[k].c[i]);
                CHECK((comm - want).norm() < 1e-10);
            }

        // e_alpha shifts weights up by alpha; A_alpha preserves them.
        for (size_t k = 0; k < C.positive_roots.size(); ++k) {
            Weight shift{std::vector<long>(cd.rank(), 0)};
            for (int i = 0; i < cd.rank(); ++i)
                for (int j = 0; j < cd.rank(); ++j)
                    shift.c[i] += C.positive_roots[k].c[j] * cd.a(i, j);
            for (int r = 0; r < C.dim; ++r)
                for (int c = 0; c < C.dim; ++c) {
                    if (std::abs(C.e_root[k](r, c)) > 1e-12) {
                        for (int i = 0; i < cd.rank(); ++i)
                            CHECK(C.weight_of[r].c[i] == C.weight_of[c].c[i] + shift.c[i]);
                    }
                    if (std::abs(C.A[k](r, c)) > 1e-12)
                        CHECK(C.weight_of[r] == C.weight_of[c]);
                }
        }
    }
}

TEST_CASE("connection coefficients match the sl2-string trace oracle") {
    CartanDatum cd = CartanDatum::of_type("A2");
    QuantumModule M(cd, Weight{{1, 1}});
    ClassicalModule C = build_classical(M);
    REQUIRE(C.positive_roots.size() == 3);
    for (size_t k = 0; k < C.positive_roots.size(); ++k) {
        std::vector<double> oracle = string_fe_eigs(M, cd, C.positive_roots[k]);
        double half_norm = static_cast<double>(cd.root_norm(C.positive_roots[k])) / 2.0;
        double want = 0;
        for (double x : oracle) want += half_norm * x;
        CHECK(std::abs(C.A[k].trace().real() - want) < 1e-10);
        CHECK(std::abs(C.A[k].trace().imag()) < 1e-12);

        // Per-weight-line eigenvalues too, not just the trace.
        std::vector<double> eigs = sorted_real_eigs(C.f_root[k] * C.e_root[k]);
        std::sort(oracle.begin(), oracle.end());
        REQUIRE(eigs.size() == oracle.size());
        for (size_t i = 0; i < eigs.size(); ++i) CHECK(std::abs(eigs[i] - oracle[i]) < 1e-9);
    }
}

TEST_CASE("full loop holonomy matches the rank-one closed form") {
    CartanDatum cd = CartanDatum::of_type("A1");
    QuantumModule M(cd, Weight{{3}});
    ClassicalModule C = build_classical(M);
    ChamberComplex cc(cd, full_diagram(cd));
    double kappa = 0.1;

    GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
    IntegrationPath path = lift_gallery(cd, cc, loop);
    CHECK(path_clearance(C, path) > 0.4);
    HolonomyResult hr = integrate_holonomy(C, kappa, path, 1e-10);

    // Closed form exp(2 pi i kappa A) with fe eigenvalues {0, 3, 4, 3}.
    std::vector<double> want;
    for (double c : {0.0, 3.0, 4.0, 3.0})
        want.push_back(std::arg(std::exp(Complex(0.0, 2.0 * 3.14159265358979323846 * kappa * c))));
    std::sort(want.begin(), want.end());
    std::vector<double> got = sorted_eigs_arg(hr.matrix);
    for (size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-8);

    // The matrix itself is diagonal in the string basis here.
    CMat closed = CMat::Zero(4, 4);
    Eigen::ComplexEigenSolver<CMat> es(C.A[0]);
    closed = (Complex(0.0, 2.0 * 3.14159265358979323846 * kappa) * C.A[0]).exp();
    CHECK((hr.matrix - closed).norm() < 1e-8);
}

TEST_CASE("flatness: contractible loops, homotopic lifts, reversal") {
    CartanDatum cd = CartanDatum::of_type("A2");
    QuantumModule M(cd, Weight{{1, 1}});
    ClassicalModule C = build_classical(M);
    ChamberComplex cc(cd, full_diagram(cd));
    double kappa = 0.1, tol = 1e-8;

    SUBCASE("contractible loop inside one chamber") {
        IntegrationPath sq;
        for (auto [x, y] : {std::pair{1.0, 1.0}, {2.5, 1.0}, {2.5, 2.0}, {1.0, 2.0}, {1.0, 1.0}}) {
            Eigen::VectorXcd z(2);
            z << x, y;
            sq.points.push_back(z);
        }
        HolonomyResult hr = integrate_holonomy(C, kappa, sq, tol);
        CHECK((hr.matrix - CMat::Identity(C.dim, C.dim)).norm() < tol);
    }

    SUBCASE("homotopic wall crossings with different detour offsets") {
        GroupoidPath step{cc.base(), {{0, +1}}};
        CMat h1 = integrate_holonomy(C, kappa, lift_gallery(cd, cc, step, 0.4), tol).matrix;
        CMat h2 = integrate_holonomy(C, kappa, lift_gallery(cd, cc, step, 0.7), tol).matrix;
        CHECK((h1 - h2).norm() < 2 * tol);

        // The coefficients A_alpha preserve weights, so every holonomy is
        // weight-block-diagonal.
        for (int r = 0; r < C.dim; ++r)
            for (int c = 0; c < C.dim; ++c)
                if (std::abs(h1(r, c)) > 1e-7) CHECK(C.weight_of[r] == C.weight_of[c]);
    }

    SUBCASE("reversal gives the inverse") {
        GroupoidPath two{cc.base(), {{0, +1}, {1, -1}}};
        IntegrationPath path = lift_gallery(cd, cc, two);
        CMat h = integrate_holonomy(C, kappa, path, tol).matrix;
        CMat hb = integrate_holonomy(C, kappa, reverse_path(path), tol).matrix;
        CHECK((h * hb - CMat::Identity(C.dim, C.dim)).norm() < 4 * tol);
    }

    SUBCASE("randomized contractible loops and homotopy pairs") {
        std::mt19937 rng(20240819);
        std::uniform_real_distribution<double> uni(0.6, 2.6);
        int done = 0;
        for (int trial = 0; trial < 10; ++trial) {
            // Random polygon loop in the dominant chamber -> identity.
            IntegrationPath poly;
            int nv = 3 + static_cast<int>(rng() % 3);
            for (int k = 0; k < nv; ++k) {
                Eigen::VectorXcd z(2);
                z << uni(rng), uni(rng);
                poly.points.push_back(z);
            }
            poly.points.push_back(poly.points.front());
            CMat h = integrate_holonomy(C, kappa, poly, tol).matrix;
            CHECK((h - CMat::Identity(C.dim, C.dim)).norm() < 2 * tol);
            ++done;

            // Random two-crossing gallery: two lifts with different offsets.
            GroupoidPath g{cc.base(), {}};
            int c = cc.base();
            for (int k = 0; k < 2; ++k) {
                int wall = static_cast<int>(rng() % 2);
                int sign = (rng() % 2) ? +1 : -1;
                g.word.push_back({wall, sign});
                c = cc.neighbor(c, wall);
            }
            CMat h1 = integrate_holonomy(C, kappa, lift_gallery(cd, cc, g, 0.45), tol).matrix;
            CMat h2 = integrate_holonomy(C, kappa, lift_gallery(cd, cc, g, 0.8), tol).matrix;
            CHECK((h1 - h2).norm() < 2 * tol);
            ++done;
        }
        CHECK(done == 20);
    }
}

TEST_CASE("monotone convergence of the error estimate") {
    CartanDatum cd = CartanDatum::of_type("A1");
    QuantumModule M(cd, Weight{{3}});
    ClassicalModule C = build_classical(M);
    ChamberComplex cc(cd, full_diagram(cd));
    GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
    IntegrationPath path = lift_gallery(cd, cc, loop);

    HolonomyResult coarse = integrate_holonomy(C, 0.1, path, 1e-6);
    HolonomyResult fine = integrate_holonomy(C, 0.1, path, 5e-7);
    CHECK((coarse.matrix - fine.matrix).norm() <= coarse.error_estimate + fine.error_estimate + 1e-12);
    CHECK(fine.error_estimate < coarse.error_estimate);
}

TEST_CASE("wall-loop monodromy matches the quantum holonomy") {
    SUBCASE("A1 weight 3, kappa 0.1") {
        CartanDatum cd = CartanDatum::of_type("A1");
        QuantumModule M(cd, Weight{{3}});
        ChamberComplex cc(cd, full_diagram(cd));
        GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
        QuantumComparison r = compare_with_quantum(M, loop, 0.1, 1e-9);
        CHECK(r.eig_distance_plain < 1e-6);
        CHECK(r.gauge_residual_plain < 1e-6);  // both diagonal in this basis
        CHECK(r.tl_valid);
        MESSAGE("A1 TL eigenvalue distance (report only): " << r.eig_distance_tl);
    }

    SUBCASE("kappa = 0 degeneration") {
        CartanDatum cd = CartanDatum::of_type("A1");
        QuantumModule M(cd, Weight{{3}});
        ChamberComplex cc(cd, full_diagram(cd));
        GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
        QuantumComparison r = compare_with_quantum(M, loop, 0.0, 1e-9);
        CHECK_FALSE(r.tl_valid);
        CHECK(r.eig_distance_plain < 1e-8);
        CHECK((r.casimir - CMat::Identity(M.dim(), M.dim())).norm() < 1e-8);
    }

    SUBCASE("A2 weight (1,1): squared wall holonomies") {
        CartanDatum cd = CartanDatum::of_type("A2");
        QuantumModule M(cd, Weight{{1, 1}});
        ChamberComplex cc(cd, full_diagram(cd));
        GroupoidPath loop{cc.base(), {{0, +1}, {0, -1}}};
        for (double kappa : {0.05, 0.1}) {
            QuantumComparison r = compare_with_quantum(M, loop, kappa, 1e-8);
            CHECK(r.eig_distance_plain < 1e-4);
            MESSAGE("A2 kappa " << kappa << " gauge residual plain " << r.gauge_residual_plain
                                << ", TL eig distance " << r.eig_distance_tl
                                << ", TL gauge residual " << r.gauge_residual_tl);
        }
    }
}
