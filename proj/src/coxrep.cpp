#include "qweyl/coxrep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qweyl {

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

const SpMat& GroupoidRep::crossing_op(const ChamberComplex& cc, int c,
                                      const Crossing& x) const {
    int dir = cc.bruhat_direction(c, x.wall);
    TVariant var = dir > 0 ? TVariant::Prime : TVariant::DoublePrime;
    int e = dir > 0 ? x.sign : -x.sign;
    auto key = std::make_tuple(x.wall, var == TVariant::Prime ? 0 : 1, e);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, lusztig_T(M_, x.wall, var, e)).first;
    return it->second;
}

SpMat GroupoidRep::holonomy(const ChamberComplex& cc, const GroupoidPath& p) const {
    SpMat h = SpMat::identity(M_.dim());
    int c = p.start;
    for (const Crossing& x : p.word) {
        h = crossing_op(cc, c, x) * h;
        c = cc.neighbor(c, x.wall);
    }
    return h;
}

CMat GroupoidRep::eval(const SpMat& a, double kappa) const {
    Complex zeta = std::exp(Complex(0.0, kPi * kappa));
    CMat m = CMat::Zero(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, x] : a.col(j)) m(i, j) = x.eval(zeta);
    return m;
}

CMat GroupoidRep::holonomy_eval(const ChamberComplex& cc, const GroupoidPath& p,
                                double kappa) const {
    return eval(holonomy(cc, p), kappa);
}

std::complex<double> GroupoidRep::tl_factor(long d, long n, int bruhat_dir, int sign,
                                            double kappa) {
    double parity = (n % 2 != 0) ? -1.0 : 1.0;
    double quarter = static_cast<double>(d) * static_cast<double>(n) *
                     static_cast<double>(n) / 4.0;
    auto zp = [kappa](double x) { return std::exp(Complex(0.0, kPi * kappa * x)); };
    if (bruhat_dir > 0 && sign > 0) return parity * zp(static_cast<double>(d * n) + quarter);
    if (bruhat_dir < 0 && sign < 0) return zp(quarter);
    if (bruhat_dir < 0 && sign > 0) return parity * zp(static_cast<double>(d * n) - quarter);
    return zp(-quarter);  // increasing gamma^-
}

CMat GroupoidRep::holonomy_tl(const ChamberComplex& cc, const GroupoidPath& p,
                              double kappa) const {
    Complex zeta = std::exp(Complex(0.0, kPi * kappa));
    Complex zk = 1.0;
    for (int k = 1; k <= 6; ++k) {
        zk *= zeta;
        if (std::abs(zk - 1.0) < 1e-9)
            throw std::invalid_argument("TL twist requires zeta^6 != 1");
    }
    int dim = M_.dim();
    CMat h = CMat::Identity(dim, dim);
    int c = p.start;
    for (const Crossing& x : p.word) {
        CMat op = eval(crossing_op(cc, c, x), kappa);
        int dir = cc.bruhat_direction(c, x.wall);
        long d = M_.datum().d(x.wall);
        for (int j = 0; j < dim; ++j)
            op.col(j) *= tl_factor(d, M_.weight_of(j).c[x.wall], dir, x.sign, kappa);
        h = op * h;
        c = cc.neighbor(c, x.wall);
    }
    return h;
}

std::vector<RatFunc> coords_in(const std::vector<SpVec>& basis, const SpVec& y) {
    std::set<int> support;
    for (const auto& b : basis)
        for (const auto& [i, x] : b) support.insert(i);
    for (const auto& [i, x] : y) support.insert(i);
    std::vector<int> rows(support.begin(), support.end());
    int nr = static_cast<int>(rows.size()), nc = static_cast<int>(basis.size());
    // Augmented dense system [A | y].
    std::vector<std::vector<RatFunc>> a(nr, std::vector<RatFunc>(nc + 1));
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) {
            auto it = basis[c].find(rows[r]);
            if (it != basis[c].end()) a[r][c] = it->second;
        }
        auto it = y.find(rows[r]);
        if (it != y.end()) a[r][nc] = it->second;
    }
    std::vector<int> pivot_row(nc, -1);
    int next = 0;
    for (int c = 0; c < nc; ++c) {
        int pr = -1;
        for (int r = next; r < nr; ++r)
            if (!a[r][c].is_zero()) { pr = r; break; }
        if (pr < 0) throw std::invalid_argument("dependent basis in coords_in");
        std::swap(a[pr], a[next]);
        RatFunc inv = a[next][c].inverse();
        for (int k = c; k <= nc; ++k) a[next][k] = a[next][k] * inv;
        for (int r = 0; r < nr; ++r) {
            if (r == next || a[r][c].is_zero()) continue;
            RatFunc f = a[r][c];
            for (int k = c; k <= nc; ++k) a[r][k] = a[r][k] - f * a[next][k];
        }
        pivot_row[c] = next++;
    }
    for (int r = next; r < nr; ++r)
        if (!a[r][nc].is_zero())
            throw std::invalid_argument("vector outside span in coords_in");
    std::vector<RatFunc> x(nc);
    for (int c = 0; c < nc; ++c) x[c] = a[pivot_row[c]][nc];
    return x;
}

std::vector<std::vector<RatFunc>> matrix_in_bases(const SpMat& H,
                                                  const std::vector<SpVec>& src,
                                                  const std::vector<SpVec>& dst) {
    size_t n = dst.size();
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        std::vector<RatFunc> col = coords_in(dst, H.apply(src[j]));
        for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

std::vector<CanonicalBasis> canonical_bases(const QuantumModule& M) {
    if (M.datum().type() != "A2")
        throw std::invalid_argument("canonical bases are defined in type A2");
    long m1 = M.highest_weight().c[0], m2 = M.highest_weight().c[1];
    if (m1 < 1 || m2 < 1)
        throw std::invalid_argument("canonical bases need mu1, mu2 >= 1");
    long m = m1 + m2;
    auto vec = [&](const DividedWord& w) { return M.apply_to_highest(w); };
    std::vector<CanonicalBasis> out;
    auto push = [&](std::vector<int> word, DividedWord a, DividedWord b, bool swapped) {
        CanonicalBasis cb;
        cb.word = std::move(word);
        cb.vectors = {vec(a), vec(b)};
        cb.swapped = swapped;
        cb.weight = M.weight_of(cb.vectors[0].begin()->first);
        out.push_back(std::move(cb));
    };
    push({}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}, false);
    push({0}, {{0, m1}, {1, 1}}, {{1, 1}, {0, m1}}, true);
    push({1}, {{1, m2}, {0, 1}}, {{0, 1}, {1, m2}}, false);
    push({0, 1}, {{1, m - 1}, {0, m1}}, {{0, 1}, {1, m - 1}, {0, m1 - 1}}, true);
    push({1, 0}, {{0, m - 1}, {1, m2}}, {{1, 1}, {0, m - 1}, {1, m2 - 1}}, false);
    push({0, 1, 0}, {{0, m2 - 1}, {1, m - 1}, {0, m1}},
         {{0, m2}, {1, m - 1}, {0, m1 - 1}}, false);
    return out;
}

std::vector<std::vector<RatFunc>> product_composite_matrix(const GroupoidRep& rep,
                                                           const ChamberComplex& cc,
                                                           int sign) {
    auto bases = canonical_bases(rep.module());
    GroupoidPath p;
    p.start = cc.base();
    p.word = {{0, sign}, {1, sign}, {0, sign}};
    SpMat h = rep.holonomy(cc, p);
    return matrix_in_bases(h, bases[0].vectors, bases[5].vectors);
}

std::vector<RestrictionGenerator> restriction_generators(const GroupoidRep& rep,
                                                         const QuotientData& q) {
    const ChamberComplex& cc = q.complex();
    WeylElt u0 = cc.group().identity();
    std::vector<RestrictionGenerator> out;
    for (const auto& wall : q.quotient_walls()) {
        GroupoidPath lift = q.pr_fiber_gallery(u0, wall.q1, wall.q2, +1);
        GroupoidPath minus = q.pr_fiber_gallery(u0, wall.q1, wall.q2, -1);
        SpMat hp = rep.holonomy(cc, lift);
        SpMat hm = rep.holonomy(cc, minus);
        SpMat hpi = rep.holonomy(cc, inverse_path(cc, lift));
        SpMat hmi = rep.holonomy(cc, inverse_path(cc, minus));

        RestrictionGenerator fwd;
        fwd.q1 = wall.q1;
        fwd.q2 = wall.q2;
        fwd.lift = lift;
        fwd.op = hmi * hp;
        out.push_back(std::move(fwd));

        // The reverse generator is the groupoid inverse of the forward one;
        // re-deriving it from the reversed lift would flip the loop
        // orientation and break invertibility of the local system.
        RestrictionGenerator rev;
        rev.q1 = wall.q2;
        rev.q2 = wall.q1;
        rev.lift = inverse_path(cc, lift);
        rev.op = hpi * hm;
        out.push_back(std::move(rev));
    }
    return out;
}

CocycleReport cocycle_check(const GroupoidRep& rep, std::vector<int> dppp,
                            std::vector<int> dpp, std::vector<int> dp) {
    std::sort(dppp.begin(), dppp.end());
    std::sort(dpp.begin(), dpp.end());
    std::sort(dp.begin(), dp.end());
    CocycleReport report;
    if (dppp == dpp) return report;  // degenerate chain: both routes are the same functor

    const CartanDatum& cd = rep.module().datum();
    // Route 1: restrict to the middle diagram first, then quotient inside it.
    ChamberComplex cc1(cd, dpp);
    QuotientData q1(cc1, dppp);
    // Route 2: quotient the outer diagram directly.  A root outside the middle
    // system has a nonzero coordinate outside it, so the route-2 classes whose
    // functionals are supported on the middle kept coordinates consist of
    // exactly the same roots as the route-1 classes; their wall operators must
    // agree on the nose.
    ChamberComplex cc2(cd, dp);
    QuotientData q2(cc2, dppp);

    auto root_set = [](const std::vector<Root>& v) {
        std::set<std::vector<long>> s;
        for (const Root& r : v) s.insert(r.c);
        return s;
    };
    // Positions of route-1 kept coordinates inside route-2's kept list.
    std::vector<int> pos;
    for (int k : q1.kept()) {
        auto it = std::find(q2.kept().begin(), q2.kept().end(), k);
        if (it == q2.kept().end())
            throw std::logic_error("route-1 quotient coordinate missing from route 2");
        pos.push_back(static_cast<int>(it - q2.kept().begin()));
    }

    auto gens1 = restriction_generators(rep, q1);
    auto gens2 = restriction_generators(rep, q2);
    for (const auto& w1 : q1.quotient_walls()) {
        if (w1.q1 != 0) continue;  // compare along walls of the base chamber
        auto roots1 = root_set(q1.class_members(w1.cls));
        const RestrictionGenerator* g1 = nullptr;
        for (const auto& g : gens1)
            if (g.q1 == w1.q1 && g.q2 == w1.q2) g1 = &g;
        const RestrictionGenerator* g2 = nullptr;
        for (const auto& w2 : q2.quotient_walls()) {
            if (w2.q1 != 0 || root_set(q2.class_members(w2.cls)) != roots1) continue;
            for (const auto& g : gens2)
                if (g.q1 == w2.q1 && g.q2 == w2.q2) g2 = &g;
        }
        if (g1 == nullptr || g2 == nullptr) {
            report.ok = false;
            report.mismatches.push_back("no route-2 wall matches a route-1 generator");
            continue;
        }
        ++report.compared;
        if (!(g1->op == g2->op)) {
            report.ok = false;
            std::ostringstream os;
            os << "generator " << g1->q1 << "->" << g1->q2
               << ": route-1 lift " << render_path(cc1, g1->lift)
               << " disagrees with route-2 lift " << render_path(cc2, g2->lift);
            report.mismatches.push_back(os.str());
        }
    }
    return report;
}

CentralScalarReport central_loop_scalar(const GroupoidRep& rep, const Weight& mu,
                                        double kappa, double tol) {
    const QuantumModule& M = rep.module();
    const CartanDatum& cd = M.datum();
    std::vector<int> full(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) full[i] = i;
    ChamberComplex cc(cd, full);
    GroupoidPath loop = central_loop(cc, cc.base());

    CentralScalarReport rep_out;
    std::vector<int> idx = M.space(mu);
    if (idx.empty()) throw std::invalid_argument("mu is not a weight of the module");

    auto analyze = [&](const CMat& h, Complex& value, double& residual, bool& scalar) {
        value = h(idx[0], idx[0]);
        residual = 0;
        for (int j : idx)
            for (int i = 0; i < h.rows(); ++i) {
                Complex want = (i == j) ? value : Complex(0.0);
                residual = std::max(residual, std::abs(h(i, j) - want));
            }
        scalar = residual < tol * std::max(1.0, std::abs(value));
    };
    CMat hp = rep.holonomy_eval(cc, loop, kappa);
    analyze(hp, rep_out.plain_value, rep_out.plain_residual, rep_out.plain_scalar);
    CMat ht = rep.holonomy_tl(cc, loop, kappa);
    analyze(ht, rep_out.tl_value, rep_out.tl_residual, rep_out.tl_scalar);

    Weight lam = M.highest_weight();
    auto shifted = [&](const Weight& w) {
        Weight s = w;
        for (auto& c : s.c) c += 2;  // w + 2 rho
        return s;
    };
    mpq_class expo = cd.weight_pairing(lam, shifted(lam)) - cd.weight_pairing(mu, shifted(mu));
    rep_out.reference = std::exp(Complex(0.0, kPi * kappa * expo.get_d()));
    return rep_out;
}

}  // namespace qweyl
