#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qweyl/laurent.hpp"
#include "qweyl/rootdata.hpp"

namespace qweyl {

using Mat2 = Eigen::Matrix2cd;

/// Real affine section ell_{w,eps} = {z^(w) . t = eps} of the three-line
/// arrangement {t1 = 0, t2 = 0, t1 = t2}, in the affine coordinate tau = t1
/// (tau = t2 exchanges the roles but all six sections are tau-regular).
/// punct[k] is the tau-position of the puncture on line k (0: t1 = 0,
/// 1: t2 = 0, 2: t1 = t2); rho[k] = kappa mu_k is the weight exponent, so
/// the local monodromy around line k is v^{2 mu_k} with v = exp(i pi kappa).
/// cycles lists the two ordered puncture pairs bounding the distinguished
/// intervals ell'_w, ell''_w.
struct LineSection {
    std::vector<int> word;
    double eps = 1.0;
    std::array<Complex, 3> punct;
    std::array<Complex, 3> rho;
    std::array<std::pair<int, int>, 2> cycles;
};

/// word must be a reduced word of one of the six chambers (see the interval
/// table in the implementation).  Throws std::invalid_argument otherwise.
LineSection line_section(const std::vector<int>& word, double eps,
                         const std::array<Complex, 3>& mu, double kappa);

struct TransportResult {
    Mat2 matrix;
    double error = 0;      // step-halving estimate
    double condition = 1;  // worst period-matrix condition number met
};

/// Parallel transport of the twisted cycle basis along explicit puncture
/// trajectories traj(s), s in [0,1], with traj(0) = start.punct and
/// traj(1) = end.punct.  Returns the transported basis cycles of `start`
/// expressed in the basis cycles of `end`.
TransportResult transport_cycles(
    const LineSection& start, const LineSection& end,
    const std::function<std::array<Complex, 3>(double)>& traj, double tol);

/// Half-monodromy gamma^{sign}_{y,w} for neighboring chambers y, w, as the
/// 2x2 matrix on the interval-dual bases (phi'_y, phi''_y) -> (phi'_w,
/// phi''_w).  The underlying line family is z(s) . t = eps with z running
/// from z^(y) to z^(w), pushed to the prescribed imaginary side of the wall.
TransportResult half_monodromy(const std::vector<int>& y, const std::vector<int>& w,
                               int sign, const std::array<Complex, 3>& mu,
                               double kappa, double tol);

/// Gauss-Jacobi nodes and weights for the weight (1-x)^a (1+x)^b on [-1,1].
void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights);

}  // namespace qweyl
