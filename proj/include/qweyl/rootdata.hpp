#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qweyl {

/// Root in simple-root coordinates (integer vector).
struct Root {
    std::vector<long> c;
    bool operator==(const Root& o) const { return c == o.c; }
    bool operator<(const Root& o) const { return c < o.c; }
    bool is_positive() const;  // nonzero, all coords >= 0 (roots are one-signed)
    long height() const;
};

/// Integral weight in fundamental-weight coordinates: c[i] = <lambda, alpha_i^vee>.
struct Weight {
    std::vector<long> c;
    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return c < o.c; }
    bool is_dominant() const;
};

/// Finite Cartan datum of rank <= 4 with the symmetrizing integers d_i
/// normalized so that d_i = (alpha_i . alpha_i) / 2 and short roots have
/// squared length 2.
class CartanDatum {
public:
    /// type: one of A1..A4, B2..B4, C3, C4, D4, G2.
    static CartanDatum of_type(const std::string& type);

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    long d(int i) const { return d_[i]; }
    /// a(i, j) = <alpha_j, alpha_i^vee>  (Cartan matrix entry A_{ij}).
    long a(int i, int j) const { return cartan_[i][j]; }
    /// alpha_i . alpha_j.
    long pairing(int i, int j) const { return d_[i] * cartan_[i][j]; }

    /// alpha . beta for roots in simple coordinates.
    long root_pairing(const Root& x, const Root& y) const;
    /// Squared length alpha . alpha.
    long root_norm(const Root& a) const { return root_pairing(a, a); }
    /// <lambda, alpha^vee> = (lambda . alpha) / d_alpha for a root alpha.
    mpq_class weight_root_pairing(const Weight& l, const Root& a) const;
    /// lambda . mu via the inverse Cartan matrix (exact rational).
    mpq_class weight_pairing(const Weight& l, const Weight& m) const;

    /// alpha_i as a Weight (fundamental coordinates).
    Weight simple_root_weight(int i) const;
    /// s_i acting on weights / roots.
    Weight reflect(int i, const Weight& l) const;
    Root reflect(int i, const Root& a) const;
    /// Action of a word s_{w[0]} s_{w[1]} ... (leftmost applied last).
    Weight act(const std::vector<int>& word, Weight l) const;
    Root act(const std::vector<int>& word, Root a) const;

    Weight rho() const;  // half-sum of positive roots = sum of fundamentals
    Weight zero_weight() const { return Weight{std::vector<long>(rank_, 0)}; }
    Root simple_root(int i) const;

private:
    CartanDatum() = default;
    void validate() const;
    std::string type_;
    int rank_ = 0;
    std::vector<long> d_;
    std::vector<std::vector<long>> cartan_;
    std::vector<std::vector<mpq_class>> cartan_inv_;  // for weight_pairing
};

/// Weyl group element.  Stored as a reduced word; equality and ordering go
/// through the action on simple roots, which is a faithful fingerprint.
class WeylElt {
public:
    WeylElt() = default;
    WeylElt(const CartanDatum& cd, std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<Root>& fingerprint() const { return images_; }

    bool operator==(const WeylElt& o) const { return images_ == o.images_; }
    bool operator!=(const WeylElt& o) const { return !(*this == o); }
    bool operator<(const WeylElt& o) const { return images_ < o.images_; }

private:
    std::vector<int> word_;           // reduced
    std::vector<Root> images_;        // w(alpha_i) for each i
};

/// Weyl group machinery for the parabolic subgroup W_D of the subdiagram
/// D (sorted vertex subset); D = all vertices gives the full group.
class WeylGroup {
public:
    WeylGroup(const CartanDatum& cd, std::vector<int> diagram);

    const CartanDatum& datum() const { return cd_; }
    const std::vector<int>& diagram() const { return diagram_; }

    /// Positive roots of the sub-root-system, by increasing (height, coords).
    const std::vector<Root>& positive_roots() const { return pos_roots_; }
    std::vector<long> positive_root_norms() const;

    WeylElt identity() const { return WeylElt(cd_, {}); }
    WeylElt from_word(std::vector<int> word) const { return WeylElt(cd_, std::move(word)); }
    /// Right multiplication by s_i (i must belong to the diagram).
    WeylElt mult(const WeylElt& w, int i) const;
    WeylElt mult(const WeylElt& w, const WeylElt& x) const;
    WeylElt inverse(const WeylElt& w) const;

    int length(const WeylElt& w) const { return w.length(); }
    /// True iff l(w s_i) > l(w).
    bool ascends(const WeylElt& w, int i) const;
    WeylElt longest_element() const;
    /// Lexicographically least reduced word of w.
    std::vector<int> lex_min_word(const WeylElt& w) const;

    /// All group elements (BFS order from the identity; deterministic).
    const std::vector<WeylElt>& elements() const;

    Weight act(const WeylElt& w, const Weight& l) const { return cd_.act(w.word(), l); }
    Root act(const WeylElt& w, const Root& a) const { return cd_.act(w.word(), a); }

    /// Orbit of a weight, deterministic order.
    std::vector<Weight> orbit(const Weight& l) const;

private:
    std::vector<int> reduce_word(std::vector<int> word) const;
    CartanDatum cd_;
    std::vector<int> diagram_;
    std::vector<Root> pos_roots_;
    mutable std::vector<WeylElt> elements_;  // lazily filled
};

}  // namespace qweyl
