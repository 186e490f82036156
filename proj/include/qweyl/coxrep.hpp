#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qweyl/salvetti.hpp"
#include "qweyl/uqmodule.hpp"

namespace qweyl {

using CMat = Eigen::MatrixXcd;

/// Representation of the Salvetti groupoid on a quantum module.  The plain
/// generator rule: a crossing with wall i maps to T'_{i,sign} when the Bruhat
/// length increases and to T''_{i,-sign} when it decreases.  The TL variant
/// rescales each weight component by the twist factors below.
class GroupoidRep {
public:
    explicit GroupoidRep(const QuantumModule& M) : M_(M) {}
    const QuantumModule& module() const { return M_; }

    /// Exact operator of a single signed crossing taken at chamber c.
    const SpMat& crossing_op(const ChamberComplex& cc, int c, const Crossing& x) const;
    /// Exact holonomy of a path (ordered product of crossing operators).
    SpMat holonomy(const ChamberComplex& cc, const GroupoidPath& p) const;

    /// Plain holonomy evaluated at zeta = exp(i pi kappa).
    CMat holonomy_eval(const ChamberComplex& cc, const GroupoidPath& p, double kappa) const;
    /// TL-twisted holonomy at zeta = exp(i pi kappa).  Throws if zeta^6 = 1.
    CMat holonomy_tl(const ChamberComplex& cc, const GroupoidPath& p, double kappa) const;

    /// Dense complex evaluation of an exact operator at zeta = exp(i pi kappa).
    CMat eval(const SpMat& a, double kappa) const;

    /// TL twist factor of one crossing on the weight component with
    /// n = <alpha_i-check, lambda>, relative to the plain operator.
    static std::complex<double> tl_factor(long d, long n, int bruhat_dir, int sign,
                                          double kappa);

private:
    const QuantumModule& M_;
    mutable std::map<std::tuple<int, int, int>, SpMat> cache_;  // (i, variant, e)
};

/// Exact coordinates of y in the given (independent) vectors; throws if y is
/// not in their span.
std::vector<RatFunc> coords_in(const std::vector<SpVec>& basis, const SpVec& y);
/// Matrix of the operator H from the source basis to the target basis
/// (columns = images of source vectors in target coordinates).
std::vector<std::vector<RatFunc>> matrix_in_bases(const SpMat& H,
                                                  const std::vector<SpVec>& src,
                                                  const std::vector<SpVec>& dst);

/// One of the six distinguished 2-element bases of the extreme-orbit weight
/// spaces of an A2 module L(mu1, mu2).  `swapped` records whether the
/// interval-dual frame (phi', phi'') matches the pair in reversed order.
struct CanonicalBasis {
    std::vector<int> word;  // chamber C_w
    Weight weight;
    std::vector<SpVec> vectors;
    bool swapped;
};
/// The six bases, in chamber order e, 1, 2, 21, 12, 121.  Requires A2 and
/// mu1, mu2 >= 1.
std::vector<CanonicalBasis> canonical_bases(const QuantumModule& M);

/// Composite holonomy across the gallery e -> 1 -> 21 -> 121 (all crossings
/// with the given sign), written from the e-basis to the 121-basis.  Equals
/// v^{sign (mu1+mu2+1)} Id.
std::vector<std::vector<RatFunc>> product_composite_matrix(const GroupoidRep& rep,
                                                           const ChamberComplex& cc,
                                                           int sign);

/// Value of the quotient groupoid on a gamma^- generator crossing (q1 -> q2):
/// T^{-1}(Gamma^-) T(Gamma^+) for the pr-fiber lift Gamma; gamma^+ maps to Id.
struct RestrictionGenerator {
    int q1, q2;
    GroupoidPath lift;  // Gamma^+ over pr = C_0^{D''}
    SpMat op;
};
std::vector<RestrictionGenerator> restriction_generators(const GroupoidRep& rep,
                                                         const QuotientData& q);

/// Compare the two iterated-restriction routes for a chain D''' in D'' in D':
/// restrict D' -> D'' and then quotient by D''', versus quotient the full
/// D'-arrangement by S = D''' + (D' - D'') (the same quotient space).
struct CocycleReport {
    bool ok = true;
    int compared = 0;
    std::vector<std::string> mismatches;
};
CocycleReport cocycle_check(const GroupoidRep& rep, std::vector<int> dppp,
                            std::vector<int> dpp, std::vector<int> dp);

/// Scalar action of the central loop on the weight component mu, with the
/// balance-ratio reference zeta^{(L,L+2rho) - (mu,mu+2rho)} (squared-length
/// normalization alpha.alpha = 2 on short roots).  Scalar-ness of both the
/// plain and TL holonomies is asserted via the residual fields.
struct CentralScalarReport {
    bool plain_scalar = false, tl_scalar = false;
    std::complex<double> plain_value, tl_value, reference;
    double plain_residual = 0, tl_residual = 0;
};
CentralScalarReport central_loop_scalar(const GroupoidRep& rep, const Weight& mu,
                                        double kappa, double tol = 1e-9);

}  // namespace qweyl
