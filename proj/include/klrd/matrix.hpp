#pragma once

#include "klrd/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace klrd {

/// Dense matrix over the scalar field, sized at construction. Row-major.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix ident(int n) {
        Matrix m(n, n);
        for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
        return m;
    }

    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const Scalar& at(int r, int c) const {
        return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }

    bool is_zero() const {
        for (const Scalar& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < a.size(); ++k) r.a[k] = r.a[k] + o.a[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < a.size(); ++k) r.a[k] = r.a[k] - o.a[k];
        return r;
    }

    Matrix operator*(const Scalar& c) const {
        Matrix r = *this;
        for (Scalar& x : r.a) x = x * c;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) = r.at(i, j) + x * y;
                }
            }
        return r;
    }

    Matrix pow(int n) const {
        if (rows != cols) throw std::invalid_argument("Matrix: pow of non-square");
        Matrix r = ident(rows);
        for (int k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    /// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
    Matrix inverse() const {
        if (rows != cols) throw std::invalid_argument("Matrix: inverse of non-square");
        Matrix left = *this;
        Matrix right = ident(rows);
        for (int col = 0; col < cols; ++col) {
            int pivot = -1;
            for (int r = col; r < rows; ++r)
                if (!left.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::domain_error("Matrix: singular");
            left.swap_rows(pivot, col);
            right.swap_rows(pivot, col);
            Scalar inv = left.at(col, col).inverse();
            left.scale_row(col, inv);
            right.scale_row(col, inv);
            for (int r = 0; r < rows; ++r) {
                if (r == col) continue;
                Scalar f = left.at(r, col);
                if (f.is_zero()) continue;
                left.add_row(r, col, -f);
                right.add_row(r, col, -f);
            }
        }
        return right;
    }

    /// Dimension of the kernel, by row reduction.
    int kernel_dim() const {
        Matrix w = *this;
        int rank = 0;
        for (int col = 0; col < cols && rank < rows; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows; ++r)
                if (!w.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            w.swap_rows(pivot, rank);
            Scalar inv = w.at(rank, col).inverse();
            w.scale_row(rank, inv);
            for (int r = 0; r < rows; ++r)
                if (r != rank && !w.at(r, col).is_zero()) w.add_row(r, col, -w.at(r, col));
            ++rank;
        }
        return cols - rank;
    }

  private:
    void require_shape(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void scale_row(int r, const Scalar& f) {
        for (int c = 0; c < cols; ++c) at(r, c) = at(r, c) * f;
    }
    void add_row(int dst, int src, const Scalar& f) {
        for (int c = 0; c < cols; ++c) at(dst, c) = at(dst, c) + at(src, c) * f;
    }
};

}  // namespace klrd
