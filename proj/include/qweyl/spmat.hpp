#pragma once

#include <map>
#include <vector>

#include "qweyl/laurent.hpp"

namespace qweyl {

/// Sparse vector over Q(v): index -> nonzero entry.
using SpVec = std::map<int, RatFunc>;

inline void add_scaled(SpVec& dst, const SpVec& src, const RatFunc& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            dst.emplace(i, x * c);
        } else {
            it->second += x * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

/// Column-major sparse matrix over Q(v).
class SpMat {
public:
    SpMat() = default;
    SpMat(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}
    static SpMat identity(int n) {
        SpMat m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i][i] = RatFunc(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SpVec& col(int j) const { return data_[j]; }
    SpVec& col(int j) { return data_[j]; }

    RatFunc at(int i, int j) const {
        auto it = data_[j].find(i);
        return it == data_[j].end() ? RatFunc() : it->second;
    }
    void set(int i, int j, const RatFunc& x) {
        if (x.is_zero())
            data_[j].erase(i);
        else
            data_[j][i] = x;
    }
    void add(int i, int j, const RatFunc& x) { set(i, j, at(i, j) + x); }

    SpVec apply(const SpVec& x) const {
        SpVec out;
        for (const auto& [j, c] : x) add_scaled(out, data_[j], c);
        return out;
    }

    SpMat operator*(const SpMat& o) const {
        SpMat out(rows_, o.cols_);
        for (int j = 0; j < o.cols_; ++j) out.data_[j] = apply(o.data_[j]);
        return out;
    }
    SpMat operator+(const SpMat& o) const {
        SpMat out = *this;
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, x] : o.data_[j]) out.add(i, j, x);
        return out;
    }
    SpMat operator-(const SpMat& o) const {
        SpMat out = *this;
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, x] : o.data_[j]) out.add(i, j, -x);
        return out;
    }
    SpMat scaled(const RatFunc& c) const {
        SpMat out(rows_, cols_);
        if (c.is_zero()) return out;
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, x] : data_[j]) out.data_[j][i] = x * c;
        return out;
    }
    bool operator==(const SpMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const SpMat& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& c : data_)
            if (!c.empty()) return false;
        return true;
    }
    size_t nnz() const {
        size_t n = 0;
        for (const auto& c : data_) n += c.size();
        return n;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SpVec> data_;
};

}  // namespace qweyl
