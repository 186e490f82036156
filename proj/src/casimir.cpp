#include "qweyl/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace qweyl {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex eval_at_one(const RatFunc& x) {
    Rational den = x.den().eval_at_one();
    if (den == 0) throw std::domain_error("denominator vanishes at v = 1: " + x.str());
    Rational val = x.num().eval_at_one() / den;
    return Complex(val.get_d(), 0.0);
}

CMat eval_at_one(const SpMat& a) {
    CMat m = CMat::Zero(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (const auto& [i, x] : a.col(j)) m(i, j) = eval_at_one(x);
    return m;
}

}  // namespace

ClassicalModule build_classical(const QuantumModule& M) {
    ClassicalModule C{M.datum()};
    C.dim = M.dim();
    for (int j = 0; j < C.dim; ++j) C.weight_of.push_back(M.weight_of(j));

    int rank = C.cd.rank();
    for (int i = 0; i < rank; ++i) {
        C.e.push_back(eval_at_one(M.E(i)));
        C.f.push_back(eval_at_one(M.F(i)));
    }

    std::vector<int> full(rank);
    for (int i = 0; i < rank; ++i) full[i] = i;
    WeylGroup g(C.cd, full);
    std::vector<int> word = g.lex_min_word(g.longest_element());

    // Root vectors along the reduced word: e_{beta_k} is the conjugate of
    // e_{i_k} by the product of the symmetries of the first k-1 letters.
    CMat p = CMat::Identity(C.dim, C.dim);
    CMat pinv = p;
    std::vector<int> prefix;
    for (int i : word) {
        Root beta = C.cd.act(prefix, C.cd.simple_root(i));
        if (!beta.is_positive()) throw std::logic_error("reduced word gave a negative root");
        C.positive_roots.push_back(beta);
        C.e_root.push_back(p * C.e[i] * pinv);
        C.f_root.push_back(p * C.f[i] * pinv);
        double half_norm = static_cast<double>(C.cd.root_norm(beta)) / 2.0;
        C.A.push_back(half_norm * C.f_root.back() * C.e_root.back());
        p = p * eval_at_one(lusztig_T(M, i, TVariant::Prime, +1));
        pinv = eval_at_one(lusztig_T(M, i, TVariant::DoublePrime, -1)) * pinv;
        prefix.push_back(i);
    }
    if (C.positive_roots.size() != g.positive_roots().size())
        throw std::logic_error("positive root count mismatch");
    return C;
}

Eigen::VectorXd chamber_point(const CartanDatum& cd, const std::vector<int>& word) {
    int rank = cd.rank();
    Eigen::VectorXd z = Eigen::VectorXd::Ones(rank);
    // s_i on coweight coordinates: z_j -> z_j - z_i <alpha_j, alpha_i-check>;
    // leftmost letter applied last, as in CartanDatum::act.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        double zi = z[i];
        for (int j = 0; j < rank; ++j) z[j] -= zi * static_cast<double>(cd.a(i, j));
    }
    return z;
}

Complex root_value(const CartanDatum& cd, const Root& a, const Eigen::VectorXcd& z) {
    Complex s = 0;
    for (int i = 0; i < cd.rank(); ++i) s += static_cast<double>(a.c[i]) * z[i];
    return s;
}

IntegrationPath lift_gallery(const CartanDatum& cd, const ChamberComplex& cc,
                             const GroupoidPath& p, double eps) {
    IntegrationPath path;
    int c = p.start;
    Eigen::VectorXcd z = chamber_point(cd, cc.element(c).word());
    path.points.push_back(z);
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(cd.rank());
    for (const Crossing& x : p.word) {
        int next = cc.neighbor(c, x.wall);
        Eigen::VectorXcd z2 = chamber_point(cd, cc.element(next).word());
        Eigen::VectorXcd off = Complex(0.0, x.sign * eps) * ones;
        path.points.push_back(z + off);
        path.points.push_back(z2 + off);
        path.points.push_back(z2);
        z = z2;
        c = next;
    }
    return path;
}

IntegrationPath reverse_path(const IntegrationPath& path) {
    IntegrationPath r;
    r.points.assign(path.points.rbegin(), path.points.rend());
    return r;
}

double path_clearance(const ClassicalModule& C, const IntegrationPath& path) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : path.points)
        for (const Root& a : C.positive_roots)
            best = std::min(best, std::abs(root_value(C.cd, a, z)));
    return best;
}

HolonomyResult integrate_holonomy(const ClassicalModule& C, double kappa,
                                  const IntegrationPath& path, double tol) {
    // Dormand-Prince 4(5) tableau.
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    HolonomyResult out;
    out.matrix = CMat::Identity(C.dim, C.dim);
    if (path.points.size() < 2) return out;
    int nseg = static_cast<int>(path.points.size()) - 1;
    double step_tol = 0.5 * tol / static_cast<double>(nseg);

    for (int s = 0; s < nseg; ++s) {
        const Eigen::VectorXcd& za = path.points[s];
        Eigen::VectorXcd dz = path.points[s + 1] - za;
        // alpha(z(t)) = aa + t * ad is linear in the segment parameter.
        std::vector<Complex> aa, ad;
        for (const Root& r : C.positive_roots) {
            aa.push_back(root_value(C.cd, r, za));
            ad.push_back(root_value(C.cd, r, dz));
        }
        auto coeff = [&](double t) {
            CMat m = CMat::Zero(C.dim, C.dim);
            for (size_t k = 0; k < aa.size(); ++k) {
                if (ad[k] == Complex(0.0)) continue;
                Complex pos = aa[k] + t * ad[k];
                if (std::abs(pos) < 1e-9)
                    throw std::domain_error("path clearance violated");
                m += (kappa * ad[k] / pos) * C.A[k];
            }
            return m;
        };
        double t = 0, h = 0.1;
        while (t < 1.0) {
            // Never step more than a fraction of the distance to a pole.
            double cap = 1.0 - t;
            for (size_t k = 0; k < aa.size(); ++k) {
                double speed = std::abs(ad[k]);
                if (speed > 0)
                    cap = std::min(cap, 0.4 * std::abs(aa[k] + t * ad[k]) / speed);
            }
            h = std::min(h, cap);
            if (h < 1e-12) throw std::runtime_error("step size underflow");

            CMat& y = out.matrix;
            CMat k1 = coeff(t) * y;
            CMat k2 = coeff(t + c2 * h) * (y + h * a21 * k1);
            CMat k3 = coeff(t + c3 * h) * (y + h * (a31 * k1 + a32 * k2));
            CMat k4 = coeff(t + c4 * h) * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
            CMat k5 = coeff(t + c5 * h) *
                      (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
            CMat k6 = coeff(t + h) *
                      (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
            CMat y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            CMat k7 = coeff(t + h) * y5;
            double err =
                (h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7)).norm();
            double want = step_tol * std::max(1.0, y.norm()) * std::max(h, 1e-4);
            if (err <= want) {
                t += h;
                y = y5;
                out.error_estimate += err;
                ++out.steps;
            }
            double ratio = (err > 0) ? std::pow(want / err, 0.2) : 5.0;
            h *= std::clamp(0.9 * ratio, 0.2, 5.0);
        }
    }
    return out;
}

double eigenvalue_distance(const CMat& a, const CMat& b) {
    Eigen::ComplexEigenSolver<CMat> ea(a, false), eb(b, false);
    std::vector<Complex> va(ea.eigenvalues().data(), ea.eigenvalues().data() + a.rows());
    std::vector<Complex> vb(eb.eigenvalues().data(), eb.eigenvalues().data() + b.rows());
    std::vector<bool> used(vb.size(), false);
    double worst = 0;
    for (size_t n = 0; n < va.size(); ++n) {
        // Globally closest remaining pair first (greedy bottleneck matching).
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < va.size(); ++i) {
            if (std::isnan(va[i].real())) continue;
            for (size_t j = 0; j < vb.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(va[i] - vb[j]);
                if (d < best) { best = d; bi = i; bj = j; }
            }
        }
        worst = std::max(worst, best);
        used[bj] = true;
        va[bi] = Complex(std::nan(""), 0.0);
    }
    return worst;
}

double gauge_fit_residual(const CMat& a, const CMat& b,
                          const std::vector<Weight>& weight_of) {
    int n = a.rows();
    std::map<Weight, int> cls_of;
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i)
        cls[i] = cls_of.emplace(weight_of[i], static_cast<int>(cls_of.size())).first->second;
    int nc = static_cast<int>(cls_of.size());

    // Best scalar fit b ~ r a per class pair, then spanning-tree propagation
    // of the per-class gauge d with d_i/d_j = r_{ij}.
    std::vector<std::vector<Complex>> num(nc, std::vector<Complex>(nc, 0.0));
    std::vector<std::vector<double>> den(nc, std::vector<double>(nc, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num[cls[i]][cls[j]] += b(i, j) * std::conj(a(i, j));
            den[cls[i]][cls[j]] += std::norm(a(i, j));
        }
    std::vector<Complex> d(nc, 0.0);
    double scale = a.norm() * a.norm() / std::max(1, n * n);
    std::queue<int> bfs;
    d[0] = 1.0;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w = 0; w < nc; ++w) {
            if (d[w] != Complex(0.0)) continue;
            if (den[u][w] > 1e-12 * scale && std::abs(num[u][w]) > 0) {
                d[w] = d[u] / (num[u][w] / den[u][w]);  // d_u a / d_w ~ b
                bfs.push(w);
            } else if (den[w][u] > 1e-12 * scale && std::abs(num[w][u]) > 0) {
                d[w] = d[u] * (num[w][u] / den[w][u]);
                bfs.push(w);
            }
        }
    }
    for (auto& x : d)
        if (x == Complex(0.0)) x = 1.0;  // class not coupled to the rest

    CMat fitted = a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fitted(i, j) *= d[cls[i]] / d[cls[j]];
    double nb = b.norm();
    return (fitted - b).norm() / std::max(nb, 1e-300);
}

QuantumComparison compare_with_quantum(const QuantumModule& M, const GroupoidPath& p,
                                       double kappa, double tol) {
    const CartanDatum& cd = M.datum();
    std::vector<int> full(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) full[i] = i;
    ChamberComplex cc(cd, full);
    ClassicalModule C = build_classical(M);

    QuantumComparison out;
    HolonomyResult hr = integrate_holonomy(C, kappa, lift_gallery(cd, cc, p), tol);
    out.casimir = hr.matrix;
    out.casimir_error = hr.error_estimate;

    GroupoidRep rep(M);
    out.plain = rep.holonomy_eval(cc, p, kappa);
    std::vector<Weight> wts;
    for (int j = 0; j < M.dim(); ++j) wts.push_back(M.weight_of(j));
    out.eig_distance_plain = eigenvalue_distance(out.casimir, out.plain);
    out.gauge_residual_plain = gauge_fit_residual(out.casimir, out.plain, wts);

    Complex zeta = std::exp(Complex(0.0, kPi * kappa));
    Complex zk = 1.0;
    out.tl_valid = true;
    for (int k = 1; k <= 6; ++k) {
        zk *= zeta;
        if (std::abs(zk - 1.0) < 1e-9) out.tl_valid = false;
    }
    if (out.tl_valid) {
        out.tl = rep.holonomy_tl(cc, p, kappa);
        out.eig_distance_tl = eigenvalue_distance(out.casimir, out.tl);
        out.gauge_residual_tl = gauge_fit_residual(out.casimir, out.tl, wts);
    }
    return out;
}

}  // namespace qweyl
