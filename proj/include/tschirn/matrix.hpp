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

#ifndef TSCHIRN_MATRIX_HPP
#define TSCHIRN_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tschirn {

/* dense matrix over a field (the field may itself be k(x)) */
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return d_[idx(i, j)]; }
    const F& at(int i, int j) const { return d_[idx(i, j)]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] += b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] -= b.d_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix scaled(const F& c) const {
        Matrix r = *this;
        for (auto& e : r.d_) e *= c;
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::domain_error("matrix apply shape mismatch");
        std::vector<F> r(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return r;
    }

    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
            }
        return r;
    }

    int rank() const { return Matrix(*this).rref().size(); }

    F det() const {
        if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
        Matrix m = *this;
        F d = F::one();
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = col; i < rows_; ++i)
                if (!m.at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return F();
            if (p != col) {
                m.swap_rows(p, col);
                d = -d;
            }
            d *= m.at(col, col);
            F li = m.at(col, col).inv();
            for (int i = col + 1; i < rows_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                F f = m.at(i, col) * li;
                for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
            }
        }
        return d;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
        // eliminate on [A | I]
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = F::one();
        }
        auto pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
            throw std::domain_error("matrix is singular");
        Matrix inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    /* basis of the right kernel, one column vector per basis element */
    std::vector<std::vector<F>> kernel() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<std::vector<F>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<size_t>(free)]) continue;
            std::vector<F> v(static_cast<size_t>(cols_));
            v[static_cast<size_t>(free)] = F::one();
            for (size_t r = 0; r < pivots.size(); ++r)
                v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /* one solution of A x = b, if consistent */
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw std::domain_error("solve shape mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[static_cast<size_t>(i)];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<F> x(static_cast<size_t>(cols_));
        for (size_t r = 0; r < pivots.size(); ++r) x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols_);
        return x;
    }

    /* in-place reduced row echelon form; returns the pivot columns */
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            swap_rows(p, row);
            F li = at(row, col).inv();
            for (int j = col; j < cols_; ++j) at(row, j) *= li;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                F f = at(i, col);
                for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<F> d_;
};

}  // namespace tschirn

#endif
