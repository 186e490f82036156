#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweyl/rootdata.hpp"
#include "qweyl/spmat.hpp"

namespace qweyl {

/// One step of a divided-power monomial: F_i^{(n)} (or E_i^{(n)}).
struct DividedStep {
    int i;
    long n;
};
using DividedWord = std::vector<DividedStep>;  // leftmost factor applied last

/// Irreducible integrable module L(Lambda) over the quantum group of the
/// given Cartan datum, with its distinguished monomial basis and the
/// contravariant (Shapovalov-type) form normalized by <v+, v+> = 1.
///
/// The basis is selected greedily: candidate vectors F_i b for b in the
/// weight space above, in lexicographic word order, kept whenever they
/// increase the rank of the contravariant form restricted to the chosen set.
class QuantumModule {
public:
    QuantumModule(const CartanDatum& cd, const Weight& lambda);

    const CartanDatum& datum() const { return cd_; }
    const Weight& highest_weight() const { return lambda_; }
    int dim() const { return dim_; }

    const Weight& weight_of(int idx) const { return weight_of_[idx]; }
    const std::vector<int>& label_of(int idx) const { return label_of_[idx]; }
    /// Distinct weights, decreasing (height order from the top).
    const std::vector<Weight>& weights() const { return weights_; }
    /// Basis indices of a weight space (empty if not a weight).
    std::vector<int> space(const Weight& mu) const;
    long multiplicity(const Weight& mu) const;

    const SpMat& E(int i) const { return E_[i]; }
    const SpMat& F(int i) const { return F_[i]; }
    /// Divided powers E_i^{(n)}, F_i^{(n)} (cached).
    const SpMat& E_div(int i, long n) const;
    const SpMat& F_div(int i, long n) const;
    /// K~_i: diagonal, v^{d_i <mu, alpha_i^vee>} on the mu weight space.
    SpMat Ktilde(int i) const;

    /// Gram matrix of the contravariant form on a weight space, in the
    /// chosen basis (dense, row/col order = space(mu) order).
    const std::vector<std::vector<RatFunc>>& gram(const Weight& mu) const;

    /// Expansion of a divided-power F-monomial applied to the highest
    /// vector, e.g. F_1^{(2)} F_2 v+.
    SpVec apply_to_highest(const DividedWord& word) const;

    /// <mu, alpha_i^vee> as a long (always integral).
    long pairing(const Weight& mu, int i) const { return mu.c[i]; }

private:
    void build();
    CartanDatum cd_;
    Weight lambda_;
    int dim_ = 0;
    std::vector<Weight> weights_;
    std::map<Weight, long> mult_;
    std::map<Weight, std::vector<int>> space_;
    std::map<Weight, std::vector<std::vector<RatFunc>>> gram_;
    std::vector<Weight> weight_of_;
    std::vector<std::vector<int>> label_of_;
    std::vector<SpMat> E_, F_;
    mutable std::map<std::pair<int, long>, SpMat> ediv_, fdiv_;
};

/// Freudenthal weight multiplicities of L(lambda): map weight -> mult > 0.
std::map<Weight, long> freudenthal_multiplicities(const CartanDatum& cd, const Weight& lambda);

/// Weyl dimension formula (exact).
long weyl_dimension(const CartanDatum& cd, const Weight& lambda);

enum class TVariant { Prime, DoublePrime };

/// Lusztig symmetry T'_{i,e} or T''_{i,e} (e = +1 or -1) as a matrix on M.
SpMat lusztig_T(const QuantumModule& M, int i, TVariant variant, int e);

/// One checked identity of a symmetry against a closed form.
struct FormulaCheck {
    std::string name;
    bool ok;
    std::string detail;  // rendered mismatch if !ok
};

/// Check the twelve closed-form identities for the action of T'_{1,pm},
/// T'_{2,pm} on the canonical bases of the six extreme-orbit weight spaces
/// of the A2 module L(mu1, mu2), mu1, mu2 >= 1.
std::vector<FormulaCheck> verify_alge(long mu1, long mu2);

/// Exact matrices of T'_{1,e}, T'_{2,e} on L(1,1)_{(0,0)} in the basis
/// (F1 F2 v+, F2 F1 v+); columns are images.
std::vector<std::vector<RatFunc>> adjoint_zero_weight_matrix(int i, int e);

/// Verify the braid relations of the symmetries T'_{i,1} on L(lambda).
bool verify_braid(const QuantumModule& M);

}  // namespace qweyl
