#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qweyl/coxrep.hpp"
#include "qweyl/salvetti.hpp"
#include "qweyl/uqmodule.hpp"

namespace qweyl {

/// v = 1 specialization of a QuantumModule, with root vectors e_alpha,
/// f_alpha for every positive root (conjugates of the simple generators by
/// the v = 1 symmetries along a fixed reduced word of w_0) and the
/// connection coefficients A_alpha = (alpha.alpha)/2 * f_alpha e_alpha.
struct ClassicalModule {
    CartanDatum cd;
    int dim = 0;
    std::vector<Weight> weight_of;        // shared labels with the quantum module
    std::vector<CMat> e, f;               // simple generators at v = 1
    std::vector<Root> positive_roots;     // in reduced-word order
    std::vector<CMat> e_root, f_root;     // per positive root
    std::vector<CMat> A;                  // (alpha.alpha)/2 f_alpha e_alpha
};

ClassicalModule build_classical(const QuantumModule& M);

/// Piecewise-linear path in complexified h, in fundamental-coweight
/// coordinates (so alpha_i(z) = z_i).
struct IntegrationPath {
    std::vector<Eigen::VectorXcd> points;
};

/// Interior point of the chamber C_w: w applied to the all-ones point.
Eigen::VectorXd chamber_point(const CartanDatum& cd, const std::vector<int>& word);

/// alpha(z) for a root in simple coordinates.
std::complex<double> root_value(const CartanDatum& cd, const Root& a,
                                const Eigen::VectorXcd& z);

/// Lift of a groupoid path: straight segments between the chamber interior
/// points, pushed to the prescribed imaginary side across each wall by the
/// offset sign*eps*(all-ones vector), on which every positive root is > 0.
IntegrationPath lift_gallery(const CartanDatum& cd, const ChamberComplex& cc,
                             const GroupoidPath& p, double eps = 0.5);

/// Reversed polyline.
IntegrationPath reverse_path(const IntegrationPath& path);

/// min over positive roots and path vertices of |alpha(z)|.
double path_clearance(const ClassicalModule& C, const IntegrationPath& path);

struct HolonomyResult {
    CMat matrix;
    double error_estimate = 0;  // accumulated local truncation estimates
    long steps = 0;
};

/// Path-ordered solution of Y' = kappa sum_alpha A_alpha (alpha(dz)/alpha(z)) Y
/// by an embedded Dormand-Prince 4(5) pair with a clearance-aware step cap.
/// Throws std::domain_error on clearance violation and std::runtime_error on
/// step-size underflow.
HolonomyResult integrate_holonomy(const ClassicalModule& C, double kappa,
                                  const IntegrationPath& path, double tol);

/// Comparison of the Casimir holonomy of a gallery with the quantum
/// holonomies at zeta = exp(i pi kappa).  Eigenvalue distances use a greedy
/// nearest matching; the gauge residual is the relative Frobenius distance
/// after the best weight-diagonal conjugation (spanning-tree fit over the
/// weight components).  The TL fields are valid only when zeta^6 != 1.
struct QuantumComparison {
    CMat casimir, plain, tl;
    double casimir_error = 0;
    bool tl_valid = false;
    double eig_distance_plain = 0, eig_distance_tl = 0;
    double gauge_residual_plain = 0, gauge_residual_tl = 0;
};

QuantumComparison compare_with_quantum(const QuantumModule& M, const GroupoidPath& p,
                                       double kappa, double tol);

/// Greedy max distance between the eigenvalue multisets of two matrices.
double eigenvalue_distance(const CMat& a, const CMat& b);

/// Relative Frobenius residual of the best weight-diagonal gauge D, i.e.
/// ||D a D^{-1} - b|| / ||b||, with D constant on weight components.
double gauge_fit_residual(const CMat& a, const CMat& b,
                          const std::vector<Weight>& weight_of);

}  // namespace qweyl
