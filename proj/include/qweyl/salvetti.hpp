#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/rootdata.hpp"

namespace qweyl {

/// One signed wall crossing.  `wall` is the vertex label i of the crossing
/// C_w -> C_{w s_i}; `sign` is the imaginary side (+1 / -1) of the detour
/// around the crossed hyperplane, measured by Im(beta(z)) for the positive
/// root beta of that hyperplane.
struct Crossing {
    int wall = 0;
    int sign = +1;
    bool operator==(const Crossing& o) const { return wall == o.wall && sign == o.sign; }
};

/// Chambers of the reflection arrangement of a (sub)diagram D', indexed by
/// Weyl group elements (C_w = w C_0), with the right-multiplication wall
/// adjacency C_w -> C_{w s_i}.
class ChamberComplex {
public:
    ChamberComplex(const CartanDatum& cd, std::vector<int> diagram);

    const CartanDatum& datum() const { return group_.datum(); }
    const std::vector<int>& diagram() const { return group_.diagram(); }
    const WeylGroup& group() const { return group_; }

    int size() const { return static_cast<int>(chambers_.size()); }
    int base() const { return base_; }
    const WeylElt& element(int c) const { return chambers_[c]; }
    int index(const WeylElt& w) const;

    /// Wall `i` must belong to the diagram.
    int neighbor(int c, int wall) const;
    /// The positive root of the hyperplane crossed by (c, wall).
    Root crossed_root(int c, int wall) const;
    /// +1 if the crossing increases length, -1 otherwise.
    int bruhat_direction(int c, int wall) const;
    /// Chamber -C, i.e. C_{w w_0}.
    int opposite(int c) const;

    /// Sign of each positive root on the chamber (order = group().positive_roots()).
    const std::vector<int>& sign_vector(int c) const { return signs_[c]; }
    /// Index of a positive root in group().positive_roots().
    int root_index(const Root& r) const;

private:
    WeylGroup group_;
    std::vector<WeylElt> chambers_;
    std::map<WeylElt, int> index_;
    std::vector<std::vector<int>> neighbor_;      // [chamber][wall slot]
    std::vector<std::vector<int>> signs_;         // [chamber][positive root]
    std::map<Root, int> root_index_;
    int base_ = 0;
    int wall_slot(int wall) const;
};

/// Path in the Salvetti groupoid: a start chamber plus signed crossings,
/// applied left to right.
struct GroupoidPath {
    int start = 0;
    std::vector<Crossing> word;
};

int path_end(const ChamberComplex& cc, const GroupoidPath& p);
/// Inverse path: reversed word, signs kept (the detour side of a hyperplane
/// does not depend on the travel direction).
GroupoidPath inverse_path(const ChamberComplex& cc, const GroupoidPath& p);
/// Concatenation; requires path_end(a) == b.start.
GroupoidPath concat_paths(const ChamberComplex& cc, const GroupoidPath& a,
                          const GroupoidPath& b);
/// Render as `e -(1,+)-> s1 -(2,+)-> s1s2`.
std::string render_path(const ChamberComplex& cc, const GroupoidPath& p);

/// Shortest gallery from c1 to c2 with all crossings carrying `sign`,
/// optionally restricted to crossings whose positive root satisfies `allow`.
/// Deterministic (BFS with walls tried in diagram order).
GroupoidPath gallery(const ChamberComplex& cc, int c1, int c2, int sign,
                     const std::function<bool(const Root&)>& allow = {});

/// Loop from `base` through the opposite chamber and back, following the
/// lexicographically least reduced word of w_0 on both halves.  The first
/// half carries sign `sign`, the second half `-sign`, so that the loop is a
/// full turn around the arrangement (each hyperplane is crossed once from
/// each imaginary side).
GroupoidPath central_loop(const ChamberComplex& cc, int base, int sign = +1);

/// Strict rational feasibility of the homogeneous system {row . x > 0}.
bool strictly_feasible(std::vector<std::vector<mpq_class>> rows);
/// A rational point with row . x > 0 for all rows, if one exists.
std::optional<std::vector<mpq_class>> interior_point(
    std::vector<std::vector<mpq_class>> rows);

/// Quotient data for D'' inside the diagram D' of a ChamberComplex: the
/// chambers adjacent to the span h of the fundamental coweights of D'-D'',
/// the projections pr (chamber of the D''-subarrangement) and pi (chamber of
/// the quotient arrangement on h), and gallery lifts.
class QuotientData {
public:
    QuotientData(const ChamberComplex& cc, std::vector<int> dpp);

    const ChamberComplex& complex() const { return cc_; }
    const std::vector<int>& dpp() const { return dpp_; }
    /// Coordinates of the quotient: the vertices of D'-D''.
    const std::vector<int>& kept() const { return kept_; }

    bool in_dpp_system(const Root& r) const;

    /// Hyperplane classes of the quotient arrangement: positive roots grouped
    /// by proportional nonzero restriction to h.  The class functional is the
    /// common restriction, normalized with the lowest class member positive.
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<Root>& class_members(int k) const { return classes_[k]; }
    const std::vector<mpq_class>& class_functional(int k) const { return functionals_[k]; }

    bool is_adjacent(int chamber) const { return pi_of_[chamber].has_value(); }
    const std::vector<int>& adjacent_chambers() const { return adjacent_; }

    /// pr(C_w) in W_{D''} (chamber of the D''-subarrangement).
    WeylElt pr(int chamber) const;
    /// pi(C_w): sign per quotient class.  Requires is_adjacent(chamber).
    const std::vector<int>& pi(int chamber) const;

    /// Distinct pi sign vectors of adjacent chambers, deterministic order;
    /// index 0 is the all-plus base chamber.
    const std::vector<std::vector<int>>& quotient_chambers() const { return qchambers_; }
    int quotient_index(const std::vector<int>& signs) const;
    /// Pairs of quotient chambers differing in exactly one class (q1 < q2),
    /// with the separating class index.
    struct QuotientWall {
        int q1, q2;
        int cls;
    };
    const std::vector<QuotientWall>& quotient_walls() const { return qwalls_; }

    /// The unique adjacent chamber with the given projections (pr x pi is a
    /// bijection on adjacent chambers).  `u` must lie in W_{D''}.
    int adjacent_chamber(const WeylElt& u, int qc) const;

    /// A rational interior point (in the kept coordinates) of quotient chamber qc.
    std::vector<mpq_class> quotient_interior_point(int qc) const;

    /// pr-fiber generator: shortest gallery between the adjacent chambers over
    /// (u, q1) and (u, q2), crossing only hyperplanes outside the D'' system,
    /// all crossings with `sign`.
    GroupoidPath pr_fiber_gallery(const WeylElt& u, int q1, int q2, int sign) const;
    /// pi-fiber generator: shortest gallery between the adjacent chambers over
    /// (u1, qc) and (u2, qc), crossing only hyperplanes of the D'' system.
    GroupoidPath pi_fiber_gallery(const WeylElt& u1, const WeylElt& u2, int qc,
                                  int sign) const;

private:
    const ChamberComplex& cc_;
    std::vector<int> dpp_;
    std::vector<int> kept_;
    std::vector<bool> root_in_dpp_;                 // per positive root
    std::vector<std::vector<Root>> classes_;
    std::vector<std::vector<mpq_class>> functionals_;
    std::vector<int> root_class_;                   // per positive root, -1 if in D''
    std::vector<std::optional<std::vector<int>>> pi_of_;
    std::vector<int> adjacent_;
    std::vector<std::vector<int>> qchambers_;
    std::vector<QuotientWall> qwalls_;
    std::map<std::pair<std::vector<Root>, std::vector<int>>, int> by_projection_;
};

}  // namespace qweyl
