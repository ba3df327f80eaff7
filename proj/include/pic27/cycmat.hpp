#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pic27/coverage.hpp"
#include "pic27/cyclotomic.hpp"

namespace pic27 {

/// Small dense matrix over Q(w). Sized for the lattice work here (n <= 7);
/// all operations are exact.
class CycMat {
public:
    explicit CycMat(std::size_t n) : n_(n), a_(n * n) {}
    CycMat(std::size_t n, std::vector<CycNum> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw std::invalid_argument("CycMat: bad entry count");
    }

    static CycMat identity(std::size_t n) {
        CycMat m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
        return m;
    }

    std::size_t size() const { return n_; }
    CycNum& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    CycMat operator*(const CycMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CycMat: size mismatch");
        CycMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const CycNum& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    CycMat operator+(const CycMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("CycMat: size mismatch");
        CycMat r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    CycMat scaled(const CycNum& c) const {
        CycMat r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    std::vector<CycNum> apply(const std::vector<CycNum>& v) const {
        if (v.size() != n_) throw std::invalid_argument("CycMat: vector size mismatch");
        std::vector<CycNum> r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                r[i] += at(i, j) * v[j];
        return r;
    }

    CycNum trace() const {
        CycNum t;
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool operator==(const CycMat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const CycMat& o) const { return !(*this == o); }

    // True iff o == c * this for some nonzero scalar c (projective equality).
    bool proportional(const CycMat& o) const {
        if (n_ != o.n_) return false;
        CycNum c;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].is_zero() != o.a_[i].is_zero()) return false;
            if (!a_[i].is_zero() && c.is_zero()) c = o.a_[i] / a_[i];
        }
        if (c.is_zero()) return true; // both zero matrices
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] * c == o.a_[i])) return false;
        return true;
    }

    // Exact determinant by Gaussian elimination over the field Q(w).
    CycNum det() const {
        CycMat m = *this;
        CycNum result(1);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
            if (pivot == n_) return CycNum(0);
            if (pivot != col) {
                for (std::size_t j = 0; j < n_; ++j)
                    std::swap(m.at(pivot, j), m.at(col, j));
                result = -result;
            }
            const CycNum p = m.at(col, col);
            result = result * p;
            const CycNum pinv = p.inverse();
            for (std::size_t i = col + 1; i < n_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                CycNum f = m.at(i, col) * pinv;
                for (std::size_t j = col; j < n_; ++j)
                    m.at(i, j) -= f * m.at(col, j);
            }
        }
        return result;
    }

    // Kernel basis (column vectors) by exact Gauss-Jordan elimination.
    std::vector<std::vector<CycNum>> kernel() const {
        CycMat m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t row = 0;
        for (std::size_t col = 0; col < n_ && row < n_; ++col) {
            std::size_t p = row;
            while (p < n_ && m.at(p, col).is_zero()) ++p;
            if (p == n_) continue;
            if (p != row)
                for (std::size_t j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(row, j));
            CycNum inv = m.at(row, col).inverse();
            for (std::size_t j = 0; j < n_; ++j) m.at(row, j) *= inv;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == row || m.at(i, col).is_zero()) continue;
                CycNum f = m.at(i, col);
                for (std::size_t j = 0; j < n_; ++j) m.at(i, j) -= f * m.at(row, j);
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<bool> is_pivot(n_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<CycNum>> basis;
        for (std::size_t free_col = 0; free_col < n_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<CycNum> v(n_);
            v[free_col] = CycNum(1);
            for (std::size_t r = 0; r < pivot_col.size(); ++r)
                v[pivot_col[r]] = -m.at(r, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /**
     * Exact characteristic polynomial det(t*I - M), monic of degree n,
     * via the Faddeev-LeVerrier recursion: the divisions by 1..n are exact
     * in characteristic zero.
     */
    PolyCyc char_poly() const {
        PIC27_COVER("exact.char_poly");
        if (n_ > 7) throw std::invalid_argument("char_poly: supported up to n = 7");
        std::vector<CycNum> coeff(n_ + 1);
        coeff[n_] = CycNum(1);
        CycMat mk = *this;
        CycNum ck;
        for (std::size_t k = 1; k <= n_; ++k) {
            if (k > 1) mk = *this * (mk + identity(n_).scaled(ck));
            ck = -(mk.trace() / CycNum(static_cast<int>(k)));
            coeff[n_ - k] = ck;
        }
        return PolyCyc(std::move(coeff));
    }

private:
    std::size_t n_;
    std::vector<CycNum> a_;
};

} // namespace pic27
