#include "qweyl/periods.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <sstream>
#include "qweyl/casimir.hpp"

namespace qweyl {

namespace {

constexpr double kPi = 3.14159265358979323846;
using C3 = std::array<Complex, 3>;

// Distinguished intervals per chamber, as ordered puncture pairs
// (0: t1 = 0, 1: t2 = 0, 2: t1 = t2), matching the listed endpoints:
// ell'_e from (1,0) to (1/2,1/2) is the pair (1,2), and so on.
const std::map<std::vector<int>, std::array<std::pair<int, int>, 2>> kIntervals = {
    {{}, {{{1, 2}, {2, 0}}}},
    {{0}, {{{2, 0}, {0, 1}}}},
    {{1}, {{{0, 1}, {1, 2}}}},
    {{1, 0}, {{{0, 1}, {1, 2}}}},
    {{0, 1}, {{{2, 0}, {0, 1}}}},
    {{0, 1, 0}, {{{1, 2}, {2, 0}}}},
};

double min_pair_dist(const C3& p) {
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) d = std::min(d, std::abs(p[i] - p[j]));
    return d;
}

// Continuation of log(u - p_k) along the straight interpolation of (u, p)
// from (u0, p0) to (u1, p1), by principal-branch increments on substeps
// small relative to the distance to each puncture.
C3 continue_logs(const C3& p0, Complex u0, const C3& L0, const C3& p1, Complex u1) {
    C3 L = L0;
    Complex du = u1 - u0;
    C3 dp;
    for (int k = 0; k < 3; ++k) dp[k] = p1[k] - p0[k];
    double s = 0;
    while (s < 1) {
        double step = 1 - s;
        for (int k = 0; k < 3; ++k) {
            Complex d = (u0 + s * du) - (p0[k] + s * dp[k]);
            double rel = std::abs(du - dp[k]);
            if (rel > 0) step = std::min(step, 0.3 * std::abs(d) / rel);
        }
        if (step < 1e-14) {
            std::ostringstream os;
            os << "branch continuation pinched at a puncture: s=" << s << " u0=" << u0
               << " u1=" << u1;
            for (int k = 0; k < 3; ++k)
                os << " p0[" << k << "]=" << p0[k] << " p1[" << k << "]=" << p1[k];
            throw std::domain_error(os.str());
        }
        double s2 = std::min(1.0, s + step);
        for (int k = 0; k < 3; ++k) {
            Complex d1 = (u0 + s * du) - (p0[k] + s * dp[k]);
            Complex d2 = (u0 + s2 * du) - (p0[k] + s2 * dp[k]);
            L[k] += std::log(d2 / d1);
        }
        s = s2;
    }
    return L;
}

// One basis cycle: the straight segment from punct[a] to punct[b] with the
// branch pinned by the continued logs at its midpoint.
struct SegState {
    int a = 0, b = 0;
    Complex mid;
    C3 logmid;
};

// Periods of the frame {U dtau, tau U dtau} over [A, B]; ia/ib = puncture
// index sitting at the endpoint (-1 if the endpoint is regular).  Adaptive
// bisection on top of Gauss-Jacobi with the endpoint exponents.
std::array<Complex, 2> integrate_seg(const C3& p, const C3& rho, Complex A, Complex B,
                                     int ia, int ib, Complex ref, const C3& reflog,
                                     double tol, int depth, double& err) {
    double ea = (ia >= 0) ? rho[ia].real() : 0.0;
    double eb = (ib >= 0) ? rho[ib].real() : 0.0;
    auto value = [&](int n) {
        std::vector<double> x, w;
        gauss_jacobi(n, eb, ea, x, w);  // (1-x)^a weight sits at the B end
        std::array<Complex, 2> v = {0.0, 0.0};
        Complex cur_u = ref;
        C3 cur_log = reflog;
        for (int i = 0; i < n; ++i) {
            Complex u = A + (B - A) * (x[i] + 1.0) / 2.0;
            cur_log = continue_logs(p, cur_u, cur_log, p, u);
            cur_u = u;
            Complex expo = 0.0;
            for (int k = 0; k < 3; ++k) expo += rho[k] * cur_log[k];
            if (ia >= 0) expo -= rho[ia] * std::log1p(x[i]);
            if (ib >= 0) expo -= rho[ib] * std::log1p(-x[i]);
            Complex g = std::exp(expo) * ((B - A) / 2.0) * w[i];
            v[0] += g;
            v[1] += g * u;
        }
        return v;
    };
    std::array<Complex, 2> v1 = value(16), v2 = value(24);
    double diff = std::abs(v1[0] - v2[0]) + std::abs(v1[1] - v2[1]);
    double scale = 1.0 + std::abs(v2[0]) + std::abs(v2[1]);
    if (diff <= tol * scale || depth >= 10) {
        err += diff;
        return v2;
    }
    Complex m = (A + B) / 2.0;
    auto left = integrate_seg(p, rho, A, m, ia, -1, ref, reflog, tol, depth + 1, err);
    auto right = integrate_seg(p, rho, m, B, -1, ib, ref, reflog, tol, depth + 1, err);
    return {left[0] + right[0], left[1] + right[1]};
}

Mat2 period_matrix(const C3& p, const C3& rho, const std::array<SegState, 2>& segs,
                   double tol, double& err) {
    Mat2 P;
    for (int j = 0; j < 2; ++j) {
        const SegState& s = segs[j];
        auto v = integrate_seg(p, rho, p[s.a], p[s.b], s.a, s.b, s.mid, s.logmid, tol, 0, err);
        P(0, j) = v[0];
        P(1, j) = v[1];
    }
    return P;
}

// Canonical branch on a real section: log(mid - p_k) real for punctures to
// the left of the interval, +i pi for punctures to the right.
std::array<SegState, 2> canonical_states(const LineSection& sec) {
    std::array<SegState, 2> out;
    for (int j = 0; j < 2; ++j) {
        SegState s;
        s.a = sec.cycles[j].first;
        s.b = sec.cycles[j].second;
        s.mid = (sec.punct[s.a] + sec.punct[s.b]) / 2.0;
        for (int k = 0; k < 3; ++k) {
            double d = (s.mid - sec.punct[k]).real();
            s.logmid[k] = Complex(std::log(std::abs(d)), d < 0 ? kPi : 0.0);
        }
        out[j] = s;
    }
    return out;
}

// Interior point of the chamber labeled by `word`: here the chamber labeled
// s_{i1} s_{i2} ... contains the image of the dominant point under s_{i1}
// applied first (so the label "21" names the chamber containing (-2, 1)),
// which is the inverse of the convention used by ChamberComplex galleries.
Eigen::VectorXd section_point(const CartanDatum& cd, const std::vector<int>& word) {
    std::vector<int> rev(word.rbegin(), word.rend());
    return chamber_point(cd, rev);
}

double seg_dist(Complex a, Complex b, Complex q) {
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0) return std::abs(q - a);
    double t = std::clamp(((q - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(q - (a + t * d));
}

// Distance from the chord [p_a, p_b] to the puncture not on it.
double chord_clearance(const C3& p, int a, int b) {
    int k = 3 - a - b;
    return seg_dist(p[a], p[b], p[k]);
}

// Working basis of chord cycles with principal-branch midpoint logs.
std::array<SegState, 2> anchor_states(const C3& p, std::pair<int, int> c0,
                                      std::pair<int, int> c1) {
    std::array<SegState, 2> out;
    std::array<std::pair<int, int>, 2> cs = {c0, c1};
    for (int j = 0; j < 2; ++j) {
        SegState s;
        s.a = cs[j].first;
        s.b = cs[j].second;
        s.mid = (p[s.a] + p[s.b]) / 2.0;
        for (int k = 0; k < 3; ++k) s.logmid[k] = std::log(s.mid - p[k]);
        out[j] = s;
    }
    return out;
}

double cond2(const Mat2& m) {
    Eigen::JacobiSVD<Mat2> svd(m);
    double lo = svd.singularValues()(1);
    return (lo > 0) ? svd.singularValues()(0) / lo : std::numeric_limits<double>::infinity();
}

struct RunResult {
    Mat2 n;
    double cond = 1;
    double qerr = 0;
};

std::array<std::pair<int, int>, 3> pairs_by_clearance(const C3& p) {
    std::array<std::pair<int, int>, 3> all = {{{0, 1}, {1, 2}, {2, 0}}};
    std::sort(all.begin(), all.end(), [&](auto x, auto y) {
        return chord_clearance(p, x.first, x.second) >
               chord_clearance(p, y.first, y.second);
    });
    return all;
}

RunResult run_transport(const LineSection& start, const LineSection& end,
                        const std::function<C3(double)>& traj, double tol,
                        double max_ds) {
    double qtol = tol * 1e-2;
    RunResult r;
    std::array<SegState, 2> segs = canonical_states(start);
    C3 p = start.punct;
    Mat2 pcur = period_matrix(p, start.rho, segs, qtol, r.qerr);
    Mat2 v = pcur;
    r.cond = cond2(pcur);

    double s = 0, ds = max_ds;
    while (s < 1) {
        // The carried chords are only a computational basis: if a third
        // puncture drifts toward one of them (the transported cycle then
        // stops being a straight chord), swap in the clearance-maximizing
        // chord pair at the current configuration.  Column scalings from
        // the fresh branch choice cancel in P(next) P(cur)^{-1}.
        double clear_cur = std::min(chord_clearance(p, segs[0].a, segs[0].b),
                                    chord_clearance(p, segs[1].a, segs[1].b));
        if (clear_cur < 0.2 * min_pair_dist(p)) {
            auto all = pairs_by_clearance(p);
            segs = anchor_states(p, all[0], all[1]);
            pcur = period_matrix(p, start.rho, segs, qtol, r.qerr);
            clear_cur = std::min(chord_clearance(p, segs[0].a, segs[0].b),
                                 chord_clearance(p, segs[1].a, segs[1].b));
        }

        // Bounding the step by the chord clearance makes an unnoticed
        // crossing of a chord by the third puncture impossible within a
        // single step (such a crossing changes the cycle class and would
        // silently multiply the transport by a local monodromy factor).
        double cap = std::min(0.125 * min_pair_dist(p), 0.25 * clear_cur);
        C3 p1;
        while (true) {
            p1 = traj(std::min(1.0, s + ds));
            double move = 0;
            for (int k = 0; k < 3; ++k) move = std::max(move, std::abs(p1[k] - p[k]));
            if (move <= cap || ds < 1e-10) break;
            ds /= 2;
        }
        if (ds < 1e-10) throw std::runtime_error("transport step underflow");
        double s2 = std::min(1.0, s + ds);

        std::array<SegState, 2> segs1 = segs;
        for (int j = 0; j < 2; ++j) {
            segs1[j].mid = (p1[segs[j].a] + p1[segs[j].b]) / 2.0;
            segs1[j].logmid =
                continue_logs(p, segs[j].mid, segs[j].logmid, p1, segs1[j].mid);
        }
        Mat2 pnext = period_matrix(p1, start.rho, segs1, qtol, r.qerr);
        v = pnext * pcur.inverse() * v;
        r.cond = std::max(r.cond, cond2(pnext));
        pcur = pnext;
        segs = segs1;
        p = p1;
        s = s2;
        ds = std::min(max_ds, ds * 1.5);
    }

    double dummy = 0;
    Mat2 pend = period_matrix(end.punct, end.rho, canonical_states(end), qtol, dummy);
    r.cond = std::max(r.cond, cond2(pend));
    r.n = pend.inverse() * v;
    return r;
}

}  // namespace

void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights) {
    static std::map<std::tuple<int, double, double>, std::pair<std::vector<double>,
                                                               std::vector<double>>>
        cache;
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            double s = 2.0 * i + a + b;
            J(i, i) = (i == 0) ? (b - a) / (a + b + 2)
                               : (b * b - a * a) / (s * (s + 2));
            if (i > 0) {
                double beta = 4.0 * i * (i + a) * (i + b) * (i + a + b) /
                              ((s - 1) * s * s * (s + 1));
                J(i, i - 1) = J(i - 1, i) = std::sqrt(beta);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
        double mu0 = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                     std::tgamma(a + b + 2);
        std::vector<double> x(n), w(n);
        for (int i = 0; i < n; ++i) {
            x[i] = es.eigenvalues()(i);
            double v0 = es.eigenvectors()(0, i);
            w[i] = mu0 * v0 * v0;
        }
        it = cache.emplace(key, std::make_pair(std::move(x), std::move(w))).first;
    }
    nodes = it->second.first;
    weights = it->second.second;
}

LineSection line_section(const std::vector<int>& word, double eps,
                         const std::array<Complex, 3>& mu, double kappa) {
    auto it = kIntervals.find(word);
    if (it == kIntervals.end()) throw std::invalid_argument("not a chamber word");
    CartanDatum cd = CartanDatum::of_type("A2");
    Eigen::VectorXd z = section_point(cd, word);
    LineSection sec;
    sec.word = word;
    sec.eps = eps;
    sec.punct = {Complex(0.0), Complex(eps / z[0]), Complex(eps / (z[0] + z[1]))};
    for (int k = 0; k < 3; ++k) sec.rho[k] = kappa * mu[k];
    sec.cycles = it->second;
    return sec;
}

TransportResult transport_cycles(
    const LineSection& start, const LineSection& end,
    const std::function<std::array<Complex, 3>(double)>& traj, double tol) {
    RunResult coarse = run_transport(start, end, traj, tol, 0.05);
    RunResult fine = run_transport(start, end, traj, tol, 0.025);
    TransportResult out;
    out.matrix = fine.n;
    out.error = (coarse.n - fine.n).norm() + fine.qerr;
    out.condition = fine.cond;
    return out;
}

TransportResult half_monodromy(const std::vector<int>& y, const std::vector<int>& w,
                               int sign, const std::array<Complex, 3>& mu,
                               double kappa, double tol) {
    CartanDatum cd = CartanDatum::of_type("A2");
    double eps = 1.0, eta = 0.25, width = 0.25;
    LineSection start = line_section(y, eps, mu, kappa);
    LineSection end = line_section(w, eps, mu, kappa);
    Eigen::VectorXd z0 = section_point(cd, y);
    Eigen::VectorXd z1 = section_point(cd, w);
    // Adjacent chambers differ in the sign of exactly one wall form.  The
    // path is the straight interval with an imaginary bump in that form
    // only, pushed into the chosen halfspace; all other forms keep a
    // nonvanishing real part throughout, so no extra wall is encircled.
    auto form = [](const Eigen::VectorXd& z, int j) {
        return (j == 0) ? z[0] : (j == 1) ? z[1] : z[0] + z[1];
    };
    int wall = -1;
    for (int j = 0; j < 3; ++j)
        if (form(z0, j) * form(z1, j) < 0) wall = j;
    if (wall < 0) throw std::invalid_argument("chambers are not adjacent");
    double scross = form(z0, wall) / (form(z0, wall) - form(z1, wall));
    Eigen::Vector2d dir = (wall == 1) ? Eigen::Vector2d(0, 1) : Eigen::Vector2d(1, 0);
    auto zfun = [&](double s) {
        s = std::clamp(s, 0.0, 1.0);
        double bump = std::max(0.0, 1.0 - std::abs(s - scross) / width);
        Eigen::Vector2cd z = ((1 - s) * z0 + s * z1).cast<Complex>() +
                             Complex(0.0, sign * eta * bump) * dir.cast<Complex>();
        return std::make_pair(z[0], z[1]);
    };
    // The detour keeps |z1|, |z1+z2| >= eta, so all three punctures stay
    // bounded in the t1 chart and a single chart suffices for the whole path.
    auto traj = [&](double s) -> std::array<Complex, 3> {
        auto [w1, w2] = zfun(s);
        return {Complex(0.0), eps / w1, eps / (w1 + w2)};
    };
    RunResult coarse = run_transport(start, end, traj, tol, 0.05);
    RunResult fine = run_transport(start, end, traj, tol, 0.025);
    // The transported sections are tracked through the product
    // (tau - p1)^rho1 (tau - p2)^rho2, but the wall forms restrict to the
    // section as t2 = -(z1/z2)(tau - p1) and t1 - t2 = ((z1+z2)/z2)(tau - p2).
    // The leading factors wind as z moves, which multiplies the transport by
    // a global scalar exp(2 pi i (rho1 w1 + rho2 w2)) with integer windings
    // relative to the principal branch at the endpoints.
    auto winding = [&](auto uf) {
        int nstep = 2048;
        double acont = std::arg(uf(0.0));
        Complex prev = uf(0.0);
        for (int i = 1; i <= nstep; ++i) {
            Complex cur = uf(static_cast<double>(i) / nstep);
            acont += std::arg(cur / prev);
            prev = cur;
        }
        return std::lround((acont - std::arg(prev)) / (2 * kPi));
    };
    long w1 = winding([&](double s) { auto [a, b] = zfun(s); return -a / b; });
    long w2 = winding([&](double s) { auto [a, b] = zfun(s); return (a + b) / b; });
    Complex fac = std::exp(Complex(0, -2 * kPi) *
                           (start.rho[1] * static_cast<double>(w1) +
                            start.rho[2] * static_cast<double>(w2)));
    // Branch normalization aligning the transported chord duals with the
    // canonical stalk basis: a diagonal v-power per chamber, fixed once by
    // matching any single wall crossing and then valid for all of them.
    static const std::map<std::vector<int>, std::array<std::array<int, 3>, 2>>
        norm = {
            {{}, {{{0, 0, 0}, {0, 0, -1}}}},
            {{0}, {{{0, 2, -1}, {-1, 2, -1}}}},
            {{1}, {{{0, 1, 0}, {0, 2, 0}}}},
            {{1, 0}, {{{-1, 2, -1}, {-1, 1, -1}}}},
            {{0, 1}, {{{-1, 1, 0}, {0, 1, 0}}}},
            {{0, 1, 0}, {{{-1, 3, -1}, {-1, 3, 0}}}},
        };
    auto dscale = [&](const std::vector<int>& word) {
        const auto& c = norm.at(word);
        Eigen::Vector2cd d;
        for (int i = 0; i < 2; ++i) {
            Complex x = 0.0;
            for (int k = 0; k < 3; ++k) x += static_cast<double>(c[i][k]) * mu[k];
            d[i] = std::exp(Complex(0, kPi * kappa) * x);
        }
        return d;
    };
    Eigen::Vector2cd dw = dscale(w), dy = dscale(y);
    TransportResult out;
    out.matrix = fac * fine.n.inverse().transpose();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.matrix(i, j) *= dw[i] / dy[j];
    out.error = (coarse.n - fine.n).norm() + fine.qerr;
    out.condition = fine.cond;
    return out;
}

}  // namespace qweyl
