#include "qweyl/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qweyl {

bool Root::is_positive() const {
    bool nonzero = false;
    for (long x : c) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

long Root::height() const { return std::accumulate(c.begin(), c.end(), 0L); }

bool Weight::is_dominant() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

namespace {

// Inverse of a small rational matrix by Gauss-Jordan.
std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
    size_t n = m.size();
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

CartanDatum CartanDatum::of_type(const std::string& type) {
    if (type.size() != 2) throw std::invalid_argument("unknown Cartan type: " + type);
    char fam = type[0];
    int n = type[1] - '0';
    bool ok = (fam == 'A' && n >= 1 && n <= 4) || (fam == 'B' && n >= 2 && n <= 4) ||
              (fam == 'C' && n >= 3 && n <= 4) || (fam == 'D' && n == 4) ||
              (fam == 'G' && n == 2);
    if (!ok) throw std::invalid_argument("unknown Cartan type: " + type);

    CartanDatum cd;
    cd.type_ = type;
    cd.rank_ = n;
    cd.d_.assign(n, 1);
    cd.cartan_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) cd.cartan_[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) cd.cartan_[i][i + 1] = cd.cartan_[i + 1][i] = -1;
    };
    switch (fam) {
        case 'A':
            chain(n);
            break;
        case 'B':  // alpha_n short
            chain(n);
            for (int i = 0; i + 1 < n; ++i) cd.d_[i] = 2;
            cd.cartan_[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
            break;
        case 'C':  // alpha_n long
            chain(n);
            cd.d_[n - 1] = 2;
            cd.cartan_[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
            break;
        case 'D':  // node 2 is the branch node (Bourbaki D4)
            cd.cartan_[0][1] = cd.cartan_[1][0] = -1;
            cd.cartan_[1][2] = cd.cartan_[2][1] = -1;
            cd.cartan_[1][3] = cd.cartan_[3][1] = -1;
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            cd.d_[1] = 3;
            cd.cartan_[0][1] = -3;  // <alpha_2, alpha_1^vee>
            cd.cartan_[1][0] = -1;
            break;
    }
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = cd.cartan_[i][j];
    cd.cartan_inv_ = invert(std::move(a));
    cd.validate();
    return cd;
}

void CartanDatum::validate() const {
    for (int i = 0; i < rank_; ++i) {
        if (cartan_[i][i] != 2) throw std::logic_error("Cartan diagonal must be 2");
        if (d_[i] <= 0) throw std::logic_error("d_i must be positive");
        for (int j = 0; j < rank_; ++j) {
            if (i != j && cartan_[i][j] > 0) throw std::logic_error("Cartan off-diagonal sign");
            // <alpha_i, alpha_j^vee> = (alpha_i . alpha_j) / d_j, i.e. the
            // symmetrization d_i a(i,j) = d_j a(j,i) must hold.
            if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
                throw std::logic_error("Cartan matrix not symmetrizable by d");
        }
    }
}

long CartanDatum::root_pairing(const Root& x, const Root& y) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += x.c[i] * y.c[j] * pairing(i, j);
    return s;
}

mpq_class CartanDatum::weight_root_pairing(const Weight& l, const Root& a) const {
    // lambda . alpha = sum_j c_j d_j lambda_j ; divide by d_alpha.
    mpq_class dot(0);
    for (int j = 0; j < rank_; ++j) dot += mpq_class(a.c[j] * d_[j] * l.c[j]);
    mpq_class dalpha(root_norm(a), 2);
    dalpha.canonicalize();
    mpq_class r = dot / dalpha;
    r.canonicalize();
    return r;
}

mpq_class CartanDatum::weight_pairing(const Weight& l, const Weight& m) const {
    // omega_i . omega_j = d_i (A^{-1})_{ij}
    mpq_class s(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += mpq_class(l.c[i] * m.c[j] * d_[i]) * cartan_inv_[i][j];
    s.canonicalize();
    return s;
}

Weight CartanDatum::simple_root_weight(int i) const {
    Weight w = zero_weight();
    for (int k = 0; k < rank_; ++k) w.c[k] = cartan_[k][i];
    return w;
}

Weight CartanDatum::reflect(int i, const Weight& l) const {
    Weight r = l;
    long li = l.c[i];
    for (int k = 0; k < rank_; ++k) r.c[k] -= li * cartan_[k][i];
    return r;
}

Root CartanDatum::reflect(int i, const Root& a) const {
    long pair = 0;  // <alpha, alpha_i^vee>
    for (int j = 0; j < rank_; ++j) pair += a.c[j] * cartan_[i][j];
    Root r = a;
    r.c[i] -= pair;
    return r;
}

Weight CartanDatum::act(const std::vector<int>& word, Weight l) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) l = reflect(*it, l);
    return l;
}

Root CartanDatum::act(const std::vector<int>& word, Root a) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) a = reflect(*it, a);
    return a;
}

Weight CartanDatum::rho() const { return Weight{std::vector<long>(rank_, 1)}; }

Root CartanDatum::simple_root(int i) const {
    Root r{std::vector<long>(rank_, 0)};
    r.c[i] = 1;
    return r;
}

// --- WeylElt -------------------------------------------------------------

namespace {

// Lexicographically least reduced word for the element given by `word`,
// peeling smallest left descents: l(s_i x) < l(x) iff x^{-1}(alpha_i) < 0.
std::vector<int> lex_min_reduced(const CartanDatum& cd, std::vector<int> word) {
    std::vector<int> out;
    for (;;) {
        std::vector<int> inv(word.rbegin(), word.rend());
        int found = -1;
        for (int i = 0; i < cd.rank(); ++i) {
            if (!cd.act(inv, cd.simple_root(i)).is_positive()) {
                found = i;
                break;
            }
        }
        if (found < 0) break;
        out.push_back(found);
        word.insert(word.begin(), found);  // x := s_i x keeps s_i...s_i w = w
    }
    return out;
}

}  // namespace

WeylElt::WeylElt(const CartanDatum& cd, std::vector<int> word) {
    word_ = lex_min_reduced(cd, std::move(word));
    images_.reserve(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) images_.push_back(cd.act(word_, cd.simple_root(i)));
}

// --- WeylGroup -----------------------------------------------------------

WeylGroup::WeylGroup(const CartanDatum& cd, std::vector<int> diagram)
    : cd_(cd), diagram_(std::move(diagram)) {
    std::sort(diagram_.begin(), diagram_.end());
    for (int i : diagram_)
        if (i < 0 || i >= cd_.rank()) throw std::invalid_argument("diagram vertex out of range");
    // closure of the simple roots of the subdiagram under its reflections
    std::set<Root> seen;
    std::vector<Root> queue;
    for (int i : diagram_) {
        Root a = cd_.simple_root(i);
        if (seen.insert(a).second) queue.push_back(a);
    }
    for (size_t k = 0; k < queue.size(); ++k) {
        for (int i : diagram_) {
            Root b = cd_.reflect(i, queue[k]);
            Root abs = b.is_positive() ? b : Root{[&] {
                std::vector<long> neg(b.c.size());
                for (size_t t = 0; t < b.c.size(); ++t) neg[t] = -b.c[t];
                return neg;
            }()};
            if (seen.insert(abs).second) queue.push_back(abs);
        }
    }
    pos_roots_.assign(seen.begin(), seen.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const Root& x, const Root& y) {
        return std::make_pair(x.height(), x.c) < std::make_pair(y.height(), y.c);
    });
}

std::vector<long> WeylGroup::positive_root_norms() const {
    std::vector<long> out;
    out.reserve(pos_roots_.size());
    for (const Root& a : pos_roots_) out.push_back(cd_.root_norm(a));
    return out;
}

WeylElt WeylGroup::mult(const WeylElt& w, int i) const {
    std::vector<int> word = w.word();
    word.push_back(i);
    return WeylElt(cd_, std::move(word));
}

WeylElt WeylGroup::mult(const WeylElt& w, const WeylElt& x) const {
    std::vector<int> word = w.word();
    word.insert(word.end(), x.word().begin(), x.word().end());
    return WeylElt(cd_, std::move(word));
}

WeylElt WeylGroup::inverse(const WeylElt& w) const {
    return WeylElt(cd_, std::vector<int>(w.word().rbegin(), w.word().rend()));
}

bool WeylGroup::ascends(const WeylElt& w, int i) const {
    // l(w s_i) > l(w) iff w(alpha_i) > 0
    return w.fingerprint()[i].is_positive();
}

WeylElt WeylGroup::longest_element() const {
    WeylElt w = identity();
    for (;;) {
        int found = -1;
        for (int i : diagram_)
            if (ascends(w, i)) {
                found = i;
                break;
            }
        if (found < 0) return w;
        w = mult(w, found);
    }
}

std::vector<int> WeylGroup::lex_min_word(const WeylElt& w) const {
    return w.word();  // stored reduced word is lex-min by construction
}

const std::vector<WeylElt>& WeylGroup::elements() const {
    if (!elements_.empty()) return elements_;
    std::set<std::vector<Root>> seen;
    std::vector<WeylElt> out{identity()};
    seen.insert(out[0].fingerprint());
    for (size_t k = 0; k < out.size(); ++k) {
        for (int i : diagram_) {
            WeylElt next = mult(out[k], i);
            if (seen.insert(next.fingerprint()).second) out.push_back(next);
        }
    }
    elements_ = std::move(out);
    return elements_;
}

std::vector<Weight> WeylGroup::orbit(const Weight& l) const {
    std::set<Weight> seen{l};
    std::vector<Weight> out{l};
    for (size_t k = 0; k < out.size(); ++k) {
        for (int i : diagram_) {
            Weight next = cd_.reflect(i, out[k]);
            if (seen.insert(next).second) out.push_back(next);
        }
    }
    return out;
}

}  // namespace qweyl
