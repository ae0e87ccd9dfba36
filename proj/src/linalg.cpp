#include "bihom/linalg.hpp"

#include <sstream>

namespace bihom {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::scalar(int n, const Scalar& c) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_)
        throw Error("matrix apply: shape mismatch (" + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " vs vector " + std::to_string(v.size()) + ")");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Scalar acc;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::compose(const Matrix& inner) const {
    if (cols_ != inner.rows_)
        throw Error("matrix compose: shape mismatch (" + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " ∘ " + std::to_string(inner.rows_) + "x" +
                    std::to_string(inner.cols_) + ")");
    Matrix out(rows_, inner.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < inner.cols_; ++j)
                out.at(i, j) += at(i, k) * inner.at(k, j);
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(unsigned long k) const {
    if (rows_ != cols_) throw Error("matrix pow: not square");
    Matrix acc = Matrix::identity(rows_);
    for (unsigned long i = 0; i < k; ++i) acc = acc.compose(*this);
    return acc;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix add: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sub: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int j1 = 0; j1 < cols_; ++j1) {
            if (at(i1, j1).is_zero()) continue;
            for (int i2 = 0; i2 < o.rows_; ++i2)
                for (int j2 = 0; j2 < o.cols_; ++j2)
                    out.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = at(i1, j1) * o.at(i2, j2);
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Vec Tensor3::apply(const Vec& u, const Vec& v) const {
    if (int(u.size()) != dim_l_ || int(v.size()) != dim_r_)
        throw Error("tensor apply: shape mismatch");
    Vec out(dim_out_);
    for (int i = 0; i < dim_l_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim_r_; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (int k = 0; k < dim_out_; ++k) out[k] += uv * at(k, i, j);
        }
    }
    return out;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    if (dim_out_ != o.dim_out_ || dim_l_ != o.dim_l_ || dim_r_ != o.dim_r_)
        throw Error("tensor add: shape mismatch");
    Tensor3 out(dim_out_, dim_l_, dim_r_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Tensor3 Tensor3::scaled(const Scalar& c) const {
    Tensor3 out(dim_out_, dim_l_, dim_r_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

Tensor3 Tensor3::precompose(const Matrix& f, const Matrix& g) const {
    if (f.rows() != dim_l_ || g.rows() != dim_r_)
        throw Error("tensor precompose: shape mismatch");
    Tensor3 out(dim_out_, f.cols(), g.cols());
    for (int i = 0; i < f.cols(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            // column i of f = image of e_i, same for g
            for (int a = 0; a < dim_l_; ++a) {
                if (f.at(a, i).is_zero()) continue;
                for (int b = 0; b < dim_r_; ++b) {
                    if (g.at(b, j).is_zero()) continue;
                    Scalar w = f.at(a, i) * g.at(b, j);
                    for (int k = 0; k < dim_out_; ++k)
                        out.at(k, i, j) += w * at(k, a, b);
                }
            }
        }
    return out;
}

Tensor3 Tensor3::postcompose(const Matrix& f) const {
    if (f.cols() != dim_out_) throw Error("tensor postcompose: shape mismatch");
    Tensor3 out(f.rows(), dim_l_, dim_r_);
    for (int i = 0; i < dim_l_; ++i)
        for (int j = 0; j < dim_r_; ++j)
            for (int k = 0; k < dim_out_; ++k) {
                if (at(k, i, j).is_zero()) continue;
                for (int m = 0; m < f.rows(); ++m)
                    out.at(m, i, j) += f.at(m, k) * at(k, i, j);
            }
    return out;
}

bool Tensor3::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vec RowSpace::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = v[pivots_[r]];  // copy: the loop below overwrites the pivot slot
        if (c.is_zero()) continue;
        for (int j = 0; j < width_; ++j) v[j] -= rows_[r][j] * c;
    }
    return v;
}

bool RowSpace::insert(Vec v) {
    if (int(v.size()) != width_) throw Error("row space: width mismatch");
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < width_; ++j)
        if (!v[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    Scalar inv = Scalar(1) / v[p];
    for (int j = 0; j < width_; ++j) v[j] = v[j] * inv;
    // back-substitute into existing rows so the basis stays reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = rows_[r][p];
        if (c.is_zero()) continue;
        for (int j = 0; j < width_; ++j) rows_[r][j] -= v[j] * c;
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool RowSpace::contains(Vec v) const {
    if (int(v.size()) != width_) throw Error("row space: width mismatch");
    return bihom::is_zero(reduce(std::move(v)));
}

}  // namespace bihom
