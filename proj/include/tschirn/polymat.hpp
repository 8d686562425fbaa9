/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TSCHIRN_POLYMAT_HPP
#define TSCHIRN_POLYMAT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace tschirn {

/* matrix over k[x]; the workhorse behind lattice bases and transitions */
template <class K>
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
    }
    static PolyMatrix from_rows(std::vector<std::vector<Poly<K>>> rows) {
        if (rows.empty()) return PolyMatrix();
        PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.cols_)
                throw std::domain_error("ragged row list");
            for (int j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        return m;
    }
    static PolyMatrix identity(int n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Poly<K>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly<K>& at(int i, int j) { return d_[idx(i, j)]; }
    const Poly<K>& at(int i, int j) const { return d_[idx(i, j)]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("matrix product shape mismatch");
        PolyMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    bool row_is_zero(int i) const {
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    int row_degree(int i) const {
        int d = Poly<K>::neg_inf;
        for (int j = 0; j < cols_; ++j) d = std::max(d, at(i, j).degree());
        return d;
    }
    /* rightmost entry of maximal degree; -1 on a zero row */
    int pivot_col(int i) const {
        int d = row_degree(i);
        if (d == Poly<K>::neg_inf) return -1;
        for (int j = cols_; j-- > 0;)
            if (at(i, j).degree() == d) return j;
        return -1;
    }

    Matrix<K> eval(const K& x0) const {
        Matrix<K> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(x0);
        return m;
    }

    Matrix<RationalFunction<K>> over_field() const {
        Matrix<RationalFunction<K>> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = RationalFunction<K>(at(i, j));
        return m;
    }

    Poly<K> det() const {
        RationalFunction<K> d = over_field().det();
        return d.as_polynomial();
    }

    int rank_over_field() const { return over_field().rank(); }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    /* row_i -= c * x^shift * row_j */
    void axpy_row(int i, int j, const K& c, int shift) {
        for (int col = 0; col < cols_; ++col) at(i, col) -= at(j, col).scaled(c).shifted(shift);
    }

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_, cols_;
    std::vector<Poly<K>> d_;
};

template <class K>
struct PopovResult {
    PolyMatrix<K> reduced;
    PolyMatrix<K> transform;
    std::vector<int> row_degrees;
};

class RankDeficientError : public std::runtime_error {
  public:
    RankDeficientError(int rank, int expected)
        : std::runtime_error("rank-deficient matrix: rank " + std::to_string(rank) + " of " +
                             std::to_string(expected) + " rows"),
          rank(rank),
          expected(expected) {}
    int rank;
    int expected;
};

/* Mulders-Storjohann reduction to weak Popov form.  Rows keep their
   identity: the returned transform is unimodular and transform * input
   = reduced.  Rank-deficient input is rejected, not silently shrunk. */
template <class K>
PopovResult<K> weak_popov(const PolyMatrix<K>& input) {
    const int r = input.rows(), c = input.cols();
    if (r == 0) return {input, PolyMatrix<K>::identity(0), {}};
    if (r > c) throw RankDeficientError(input.rank_over_field(), r);
    PolyMatrix<K> w = input;
    PolyMatrix<K> u = PolyMatrix<K>::identity(r);
    std::vector<int> piv(static_cast<size_t>(r));
    for (;;) {
        for (int i = 0; i < r; ++i) {
            piv[static_cast<size_t>(i)] = w.pivot_col(i);
            if (piv[static_cast<size_t>(i)] < 0) throw RankDeficientError(input.rank_over_field(), r);
        }
        int a = -1, b = -1;
        for (int i = 0; i < r && a < 0; ++i)
            for (int j = i + 1; j < r; ++j)
                if (piv[static_cast<size_t>(i)] == piv[static_cast<size_t>(j)]) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) break;
        if (w.row_degree(a) < w.row_degree(b)) std::swap(a, b);
        // cancel the pivot leading coefficient of the higher-degree row
        int p = piv[static_cast<size_t>(a)];
        int shift = w.row_degree(a) - w.row_degree(b);
        K f = w.at(a, p).lc() / w.at(b, p).lc();
        w.axpy_row(a, b, f, shift);
        u.axpy_row(a, b, f, shift);
    }
    std::vector<int> degs(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) degs[static_cast<size_t>(i)] = w.row_degree(i);
    return {std::move(w), std::move(u), std::move(degs)};
}

/* basis of the row lattice spanned by possibly dependent rows; zero rows
   simply drop out (contrast weak_popov, which treats them as an error) */
template <class K>
PolyMatrix<K> row_lattice_basis(PolyMatrix<K> w) {
    for (;;) {
        std::vector<std::vector<Poly<K>>> keep;
        for (int i = 0; i < w.rows(); ++i) {
            if (w.row_is_zero(i)) continue;
            std::vector<Poly<K>> row(static_cast<size_t>(w.cols()));
            for (int j = 0; j < w.cols(); ++j) row[static_cast<size_t>(j)] = w.at(i, j);
            keep.push_back(std::move(row));
        }
        w = PolyMatrix<K>::from_rows(std::move(keep));
        if (w.rows() == 0) return w;
        int a = -1, b = -1;
        for (int i = 0; i < w.rows() && a < 0; ++i)
            for (int j = i + 1; j < w.rows(); ++j)
                if (w.pivot_col(i) == w.pivot_col(j)) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) return w;
        if (w.row_degree(a) < w.row_degree(b)) std::swap(a, b);
        int p = w.pivot_col(a);
        int shift = w.row_degree(a) - w.row_degree(b);
        w.axpy_row(a, b, w.at(a, p).lc() / w.at(b, p).lc(), shift);
    }
}

template <class K>
struct PointConstraint {
    K point;
    std::vector<K> functional;
};

template <class K>
struct KernelBasisResult {
    PolyMatrix<K> basis;
    int independent = 0;
    int skipped_zero = 0;
};

/* basis of { v in k[x]^n : functional . v(point) = 0 for each constraint },
   built by intersecting one constraint at a time with Popov cleanup after
   each step so entry degrees stay near-minimal */
template <class K>
KernelBasisResult<K> constrained_kernel_basis(int n, const std::vector<PointConstraint<K>>& constraints) {
    if (n <= 0) throw std::domain_error("kernel basis needs positive rank");
    KernelBasisResult<K> out;
    out.basis = PolyMatrix<K>::identity(n);
    for (const auto& c : constraints) {
        if (static_cast<int>(c.functional.size()) != n)
            throw std::domain_error("functional length does not match rank");
        bool zero = true;
        for (const auto& e : c.functional)
            if (!e.is_zero()) zero = false;
        if (zero) {
            ++out.skipped_zero;
            continue;
        }
        // value of the functional on each current basis row
        std::vector<K> val(static_cast<size_t>(n));
        bool dependent = true;
        for (int i = 0; i < n; ++i) {
            K s;
            for (int j = 0; j < n; ++j) s += out.basis.at(i, j).eval(c.point) * c.functional[static_cast<size_t>(j)];
            val[static_cast<size_t>(i)] = s;
            if (!s.is_zero()) dependent = false;
        }
        if (dependent) continue;
        int j0 = 0;
        while (val[static_cast<size_t>(j0)].is_zero()) ++j0;
        PolyMatrix<K> next = out.basis;
        Poly<K> shift_factor = Poly<K>::x() - Poly<K>(c.point);
        for (int i = 0; i < n; ++i) {
            if (i == j0) {
                for (int j = 0; j < n; ++j) next.at(i, j) = out.basis.at(j0, j) * shift_factor;
            } else if (!val[static_cast<size_t>(i)].is_zero()) {
                K f = val[static_cast<size_t>(i)] / val[static_cast<size_t>(j0)];
                for (int j = 0; j < n; ++j) next.at(i, j) = out.basis.at(i, j) - out.basis.at(j0, j).scaled(f);
            }
        }
        out.basis = weak_popov(next).reduced;
        ++out.independent;
    }
    return out;
}

/* coordinates u with u^T A = v when v lies in the row lattice of the
   square nonsingular basis A; nullopt when it does not */
template <class K>
std::optional<std::vector<Poly<K>>> solve_in_lattice(const PolyMatrix<K>& a,
                                                     const std::vector<RationalFunction<K>>& v) {
    if (a.rows() != a.cols()) throw std::domain_error("lattice basis must be square");
    if (static_cast<int>(v.size()) != a.cols()) throw std::domain_error("vector length mismatch");
    Matrix<RationalFunction<K>> inv;
    try {
        inv = a.over_field().transpose().inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("singular lattice basis");
    }
    std::vector<RationalFunction<K>> u = inv.apply(v);
    std::vector<Poly<K>> out;
    out.reserve(u.size());
    for (const auto& e : u) {
        if (!e.is_polynomial()) return std::nullopt;
        out.push_back(e.as_polynomial());
    }
    return out;
}

}  // namespace tschirn

#endif
