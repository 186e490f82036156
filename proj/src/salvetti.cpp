#include "qweyl/salvetti.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qweyl {

namespace {

std::string chamber_name(const WeylElt& w) {
    if (w.word().empty()) return "e";
    std::string s;
    for (int i : w.word()) s += "s" + std::to_string(i + 1);
    return s;
}

}  // namespace

ChamberComplex::ChamberComplex(const CartanDatum& cd, std::vector<int> diagram)
    : group_(cd, std::move(diagram)) {
    chambers_ = group_.elements();
    for (int c = 0; c < static_cast<int>(chambers_.size()); ++c)
        index_[chambers_[c]] = c;
    base_ = index_.at(group_.identity());

    const auto& dg = group_.diagram();
    neighbor_.assign(chambers_.size(), std::vector<int>(dg.size(), -1));
    for (int c = 0; c < size(); ++c)
        for (size_t k = 0; k < dg.size(); ++k)
            neighbor_[c][k] = index_.at(group_.mult(chambers_[c], dg[k]));

    const auto& pos = group_.positive_roots();
    for (int r = 0; r < static_cast<int>(pos.size()); ++r) root_index_[pos[r]] = r;
    signs_.assign(chambers_.size(), {});
    for (int c = 0; c < size(); ++c) {
        WeylElt winv = group_.inverse(chambers_[c]);
        signs_[c].reserve(pos.size());
        for (const Root& a : pos)
            signs_[c].push_back(group_.act(winv, a).is_positive() ? +1 : -1);
    }
}

int ChamberComplex::wall_slot(int wall) const {
    const auto& dg = group_.diagram();
    auto it = std::find(dg.begin(), dg.end(), wall);
    if (it == dg.end()) throw std::invalid_argument("wall not in diagram");
    return static_cast<int>(it - dg.begin());
}

int ChamberComplex::index(const WeylElt& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("element not in chamber complex");
    return it->second;
}

int ChamberComplex::neighbor(int c, int wall) const { return neighbor_[c][wall_slot(wall)]; }

Root ChamberComplex::crossed_root(int c, int wall) const {
    Root r = group_.act(chambers_[c], datum().simple_root(wall));
    if (!r.is_positive())
        for (auto& x : r.c) x = -x;
    return r;
}

int ChamberComplex::bruhat_direction(int c, int wall) const {
    return group_.ascends(chambers_[c], wall) ? +1 : -1;
}

int ChamberComplex::opposite(int c) const {
    return index_.at(group_.mult(chambers_[c], group_.longest_element()));
}

int ChamberComplex::root_index(const Root& r) const {
    auto it = root_index_.find(r);
    if (it == root_index_.end()) throw std::invalid_argument("not a positive root of the diagram");
    return it->second;
}

int path_end(const ChamberComplex& cc, const GroupoidPath& p) {
    int c = p.start;
    for (const Crossing& x : p.word) c = cc.neighbor(c, x.wall);
    return c;
}

GroupoidPath inverse_path(const ChamberComplex& cc, const GroupoidPath& p) {
    GroupoidPath q;
    q.start = path_end(cc, p);
    q.word.assign(p.word.rbegin(), p.word.rend());
    return q;
}

GroupoidPath concat_paths(const ChamberComplex& cc, const GroupoidPath& a,
                          const GroupoidPath& b) {
    if (path_end(cc, a) != b.start) throw std::invalid_argument("paths not composable");
    GroupoidPath q = a;
    q.word.insert(q.word.end(), b.word.begin(), b.word.end());
    return q;
}

std::string render_path(const ChamberComplex& cc, const GroupoidPath& p) {
    std::ostringstream os;
    int c = p.start;
    os << chamber_name(cc.element(c));
    for (const Crossing& x : p.word) {
        c = cc.neighbor(c, x.wall);
        os << " -(" << (x.wall + 1) << "," << (x.sign > 0 ? '+' : '-') << ")-> "
           << chamber_name(cc.element(c));
    }
    return os.str();
}

GroupoidPath gallery(const ChamberComplex& cc, int c1, int c2, int sign,
                     const std::function<bool(const Root&)>& allow) {
    std::vector<int> prev(cc.size(), -1), via(cc.size(), -1);
    std::deque<int> queue{c1};
    prev[c1] = c1;
    while (!queue.empty() && prev[c2] < 0) {
        int c = queue.front();
        queue.pop_front();
        for (int wall : cc.group().diagram()) {
            int n = cc.neighbor(c, wall);
            if (prev[n] >= 0) continue;
            if (allow && !allow(cc.crossed_root(c, wall))) continue;
            prev[n] = c;
            via[n] = wall;
            queue.push_back(n);
        }
    }
    if (prev[c2] < 0) throw std::runtime_error("no gallery under the crossing restriction");
    GroupoidPath p;
    p.start = c1;
    for (int c = c2; c != c1; c = prev[c]) p.word.push_back({via[c], sign});
    std::reverse(p.word.begin(), p.word.end());
    return p;
}

GroupoidPath central_loop(const ChamberComplex& cc, int base, int sign) {
    std::vector<int> w0 = cc.group().lex_min_word(cc.group().longest_element());
    GroupoidPath p;
    p.start = base;
    for (int i : w0) p.word.push_back({i, sign});
    for (int i : w0) p.word.push_back({i, -sign});
    assert(path_end(cc, p) == base);
    return p;
}

namespace {

// Fourier-Motzkin on the strict homogeneous system {row . x > 0}.
std::optional<std::vector<mpq_class>> fm_point(
    const std::vector<std::vector<mpq_class>>& rows, int dim) {
    for (const auto& r : rows) {
        bool all_zero = true;
        for (const auto& a : r) all_zero = all_zero && a == 0;
        if (all_zero) return std::nullopt;  // 0 > 0
    }
    if (dim == 0) return std::vector<mpq_class>{};

    std::vector<std::vector<mpq_class>> pos, neg, reduced;
    for (const auto& r : rows) {
        if (r[dim - 1] > 0) pos.push_back(r);
        else if (r[dim - 1] < 0) neg.push_back(r);
        else reduced.push_back(std::vector<mpq_class>(r.begin(), r.end() - 1));
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            std::vector<mpq_class> r(dim - 1);
            for (int j = 0; j < dim - 1; ++j) r[j] = p[j] * (-n[dim - 1]) + n[j] * p[dim - 1];
            reduced.push_back(std::move(r));
        }
    auto sub = fm_point(reduced, dim - 1);
    if (!sub) return std::nullopt;

    std::optional<mpq_class> lo, hi;
    for (const auto& p : pos) {  // x > -rest / coeff
        mpq_class rest = 0;
        for (int j = 0; j < dim - 1; ++j) rest += p[j] * (*sub)[j];
        mpq_class b = -rest / p[dim - 1];
        if (!lo || b > *lo) lo = b;
    }
    for (const auto& n : neg) {
        mpq_class rest = 0;
        for (int j = 0; j < dim - 1; ++j) rest += n[j] * (*sub)[j];
        mpq_class b = -rest / n[dim - 1];
        if (!hi || b < *hi) hi = b;
    }
    mpq_class x;
    if (lo && hi) {
        assert(*lo < *hi);
        x = (*lo + *hi) / 2;
    } else if (lo) {
        x = *lo + 1;
    } else if (hi) {
        x = *hi - 1;
    }
    sub->push_back(x);
    return sub;
}

}  // namespace

std::optional<std::vector<mpq_class>> interior_point(
    std::vector<std::vector<mpq_class>> rows) {
    int dim = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    return fm_point(rows, dim);
}

bool strictly_feasible(std::vector<std::vector<mpq_class>> rows) {
    return interior_point(std::move(rows)).has_value();
}

QuotientData::QuotientData(const ChamberComplex& cc, std::vector<int> dpp)
    : cc_(cc), dpp_(std::move(dpp)) {
    std::sort(dpp_.begin(), dpp_.end());
    const auto& dg = cc_.diagram();
    for (int i : dpp_)
        if (std::find(dg.begin(), dg.end(), i) == dg.end())
            throw std::invalid_argument("D'' not contained in the diagram");
    for (int i : dg)
        if (std::find(dpp_.begin(), dpp_.end(), i) == dpp_.end()) kept_.push_back(i);
    if (kept_.empty()) throw std::invalid_argument("empty quotient: D'' = D'");

    const auto& pos = cc_.group().positive_roots();
    root_in_dpp_.resize(pos.size());
    root_class_.assign(pos.size(), -1);

    // Restriction of a root to the span of the kept fundamental coweights:
    // alpha(omega-check_j) = coefficient of alpha_j.
    auto restriction = [&](const Root& r) {
        std::vector<mpq_class> f;
        f.reserve(kept_.size());
        for (int j : kept_) f.emplace_back(r.c[j]);
        return f;
    };
    struct ClassInfo {
        std::vector<mpq_class> primitive;
        std::vector<int> members;       // positive-root indices
        std::vector<int> orientation;   // sign of the member restriction vs primitive
    };
    std::vector<ClassInfo> infos;
    for (int ri = 0; ri < static_cast<int>(pos.size()); ++ri) {
        std::vector<mpq_class> f = restriction(pos[ri]);
        bool zero = true;
        for (const auto& a : f) zero = zero && a == 0;
        root_in_dpp_[ri] = zero;
        if (zero) continue;
        // Primitive direction: scale so the first nonzero entry is +1.
        mpq_class lead;
        int orient = +1;
        for (const auto& a : f)
            if (a != 0) { lead = a; break; }
        if (lead < 0) orient = -1;
        std::vector<mpq_class> prim = f;
        for (auto& a : prim) a /= lead * orient;
        int ci = -1;
        for (int k = 0; k < static_cast<int>(infos.size()); ++k)
            if (infos[k].primitive == prim) { ci = k; break; }
        if (ci < 0) {
            ci = static_cast<int>(infos.size());
            infos.push_back({std::move(prim), {}, {}});
        }
        infos[ci].members.push_back(ri);
        infos[ci].orientation.push_back(orient);
        root_class_[ri] = ci;
    }
    // Orient each class so its lowest member is a positive multiple.
    for (auto& info : infos) {
        if (info.orientation[0] < 0) {
            for (auto& a : info.primitive) a = -a;
            for (auto& s : info.orientation) s = -s;
        }
        std::vector<Root> members;
        for (int ri : info.members) members.push_back(pos[ri]);
        classes_.push_back(std::move(members));
        functionals_.push_back(info.primitive);
    }

    // Adjacency and pi per chamber.
    pi_of_.resize(cc_.size());
    for (int c = 0; c < cc_.size(); ++c) {
        const auto& eps = cc_.sign_vector(c);
        std::vector<std::vector<mpq_class>> rows;
        std::vector<int> signs(infos.size(), 0);
        bool consistent = true;
        for (int k = 0; k < static_cast<int>(infos.size()) && consistent; ++k) {
            for (size_t m = 0; m < infos[k].members.size(); ++m) {
                int s = eps[infos[k].members[m]] * infos[k].orientation[m];
                if (signs[k] == 0) signs[k] = s;
                else if (signs[k] != s) { consistent = false; break; }
            }
            std::vector<mpq_class> row = infos[k].primitive;
            for (auto& a : row) a *= signs[k];
            rows.push_back(std::move(row));
        }
        if (!consistent || !strictly_feasible(rows)) continue;
        pi_of_[c] = signs;
        adjacent_.push_back(c);
    }

    std::set<std::vector<int>, std::greater<std::vector<int>>> qset;
    for (int c : adjacent_) qset.insert(*pi_of_[c]);
    qchambers_.assign(qset.begin(), qset.end());
    if (!qchambers_.empty())
        assert(std::all_of(qchambers_[0].begin(), qchambers_[0].end(),
                           [](int s) { return s == +1; }));

    for (int q1 = 0; q1 < static_cast<int>(qchambers_.size()); ++q1)
        for (int q2 = q1 + 1; q2 < static_cast<int>(qchambers_.size()); ++q2) {
            int cls = -1, diff = 0;
            for (int k = 0; k < num_classes(); ++k)
                if (qchambers_[q1][k] != qchambers_[q2][k]) { cls = k; ++diff; }
            if (diff == 1) qwalls_.push_back({q1, q2, cls});
        }

    for (int c : adjacent_)
        by_projection_[{pr(c).fingerprint(), *pi_of_[c]}] = c;
}

bool QuotientData::in_dpp_system(const Root& r) const {
    return root_in_dpp_[cc_.root_index(r)];
}

WeylElt QuotientData::pr(int chamber) const {
    const WeylGroup& g = cc_.group();
    WeylElt u = g.identity();
    WeylElt xinv = g.inverse(cc_.element(chamber));
    for (;;) {
        int found = -1;
        for (int i : dpp_)
            if (!g.act(xinv, cc_.datum().simple_root(i)).is_positive()) { found = i; break; }
        if (found < 0) break;
        u = g.mult(u, found);          // u <- u s_i
        xinv = g.mult(xinv, found);    // x <- s_i x
    }
    return u;
}

const std::vector<int>& QuotientData::pi(int chamber) const {
    if (!pi_of_[chamber]) throw std::invalid_argument("chamber not adjacent to the quotient");
    return *pi_of_[chamber];
}

int QuotientData::quotient_index(const std::vector<int>& signs) const {
    auto it = std::find(qchambers_.begin(), qchambers_.end(), signs);
    if (it == qchambers_.end()) throw std::invalid_argument("not a quotient chamber");
    return static_cast<int>(it - qchambers_.begin());
}

int QuotientData::adjacent_chamber(const WeylElt& u, int qc) const {
    auto it = by_projection_.find({u.fingerprint(), qchambers_[qc]});
    if (it == by_projection_.end())
        throw std::invalid_argument("no adjacent chamber with the given projections");
    return it->second;
}

std::vector<mpq_class> QuotientData::quotient_interior_point(int qc) const {
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 0; k < num_classes(); ++k) {
        std::vector<mpq_class> row = functionals_[k];
        for (auto& a : row) a *= qchambers_[qc][k];
        rows.push_back(std::move(row));
    }
    auto p = interior_point(rows);
    if (!p) throw std::runtime_error("quotient chamber has empty interior");
    return *p;
}

GroupoidPath QuotientData::pr_fiber_gallery(const WeylElt& u, int q1, int q2,
                                            int sign) const {
    return gallery(cc_, adjacent_chamber(u, q1), adjacent_chamber(u, q2), sign,
                   [this](const Root& r) { return !in_dpp_system(r); });
}

GroupoidPath QuotientData::pi_fiber_gallery(const WeylElt& u1, const WeylElt& u2,
                                            int qc, int sign) const {
    return gallery(cc_, adjacent_chamber(u1, qc), adjacent_chamber(u2, qc), sign,
                   [this](const Root& r) { return in_dpp_system(r); });
}

}  // namespace qweyl
