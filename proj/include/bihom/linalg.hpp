#pragma once

#include <cstddef>
#include <string>

#include "bihom/scalar.hpp"

namespace bihom {

/// Dense matrix over Scalar. Column j holds the coordinates of the image
/// of the j-th input basis vector, so apply() is the plain matrix-vector
/// product and compose(a, b) represents a∘b.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix scalar(int n, const Scalar& c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    Vec apply(const Vec& v) const;
    Matrix compose(const Matrix& inner) const;  // this ∘ inner
    Matrix transpose() const;
    Matrix pow(unsigned long k) const;          // square matrices only
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    /// Kronecker product; row-major pairing (i1,i2) -> i1*o.rows + i2.
    Matrix kron(const Matrix& o) const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    bool commutes_with(const Matrix& o) const { return compose(o) == o.compose(*this); }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

/// Structure constants of one bilinear product: entry(k, i, j) is the
/// coefficient of output basis element k in product(e_i, e_j).
class Tensor3 {
public:
    Tensor3() : dim_out_(0), dim_l_(0), dim_r_(0) {}
    Tensor3(int dim_out, int dim_l, int dim_r)
        : dim_out_(dim_out), dim_l_(dim_l), dim_r_(dim_r),
          e_(size_t(dim_out) * dim_l * dim_r) {}

    int dim_out() const { return dim_out_; }
    int dim_l() const { return dim_l_; }
    int dim_r() const { return dim_r_; }

    Scalar& at(int k, int i, int j) { return e_[(size_t(k) * dim_l_ + i) * dim_r_ + j]; }
    const Scalar& at(int k, int i, int j) const { return e_[(size_t(k) * dim_l_ + i) * dim_r_ + j]; }

    /// Bilinear extension: sum_{i,j} u_i v_j c(., i, j).
    Vec apply(const Vec& u, const Vec& v) const;

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 scaled(const Scalar& c) const;
    /// Precompose arguments with linear maps: result(x, y) = this(f(x), g(y)).
    Tensor3 precompose(const Matrix& f, const Matrix& g) const;
    /// Postcompose output: result(x, y) = f(this(x, y)).
    Tensor3 postcompose(const Matrix& f) const;

    bool operator==(const Tensor3& o) const {
        return dim_out_ == o.dim_out_ && dim_l_ == o.dim_l_ && dim_r_ == o.dim_r_ && e_ == o.e_;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    int dim_out_, dim_l_, dim_r_;
    std::vector<Scalar> e_;
};

/// Row space in reduced echelon form, built incrementally by exact Gaussian
/// elimination with first-nonzero pivoting. Used for subspace membership
/// (ideal and graph closure checks).
class RowSpace {
public:
    explicit RowSpace(int width) : width_(width) {}

    /// Reduce v against the current rows; if a nonzero remainder is left,
    /// insert it (normalized) and return true.
    bool insert(Vec v);
    bool contains(Vec v) const;
    int rank() const { return int(rows_.size()); }

private:
    Vec reduce(Vec v) const;
    int width_;
    std::vector<Vec> rows_;   // each row normalized to leading 1, kept sorted by pivot
    std::vector<int> pivots_;
};

}  // namespace bihom
