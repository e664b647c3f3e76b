#include "gvec/kron2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gvec/errors.hpp"
#include "gvec/shiftvec.hpp"

namespace gvec {

namespace {

Scalar max_abs_difference(const Matrix2D& x, const Matrix2D& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ShapeError("cannot compare matrices of different shapes");
    Scalar worst = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
    return worst;
}

std::string dims(const Matrix2D& x) {
    return std::to_string(x.rows()) + "x" + std::to_string(x.cols());
}

}  // namespace

Matrix2D::Matrix2D(DenseTensor t) : tensor_(std::move(t)) {
    if (tensor_.rank() != 2)
        throw DimError("matrix needs rank 2, got shape " + tensor_.shape().to_string());
}

Matrix2D::Matrix2D(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : Matrix2D(DenseTensor(Shape{rows, cols}, std::move(data), StorageOrder::LastIndexFastest)) {}

Matrix2D Matrix2D::identity(std::size_t n) {
    std::vector<Scalar> data(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1;
    return Matrix2D(n, n, std::move(data));
}

Matrix2D Matrix2D::unit_column(std::size_t n, std::size_t k) {
    if (k >= n) throw IndexError("unit column " + std::to_string(k) + " out of range for size " + std::to_string(n));
    std::vector<Scalar> data(n, 0);
    data[k] = 1;
    return Matrix2D(n, 1, std::move(data));
}

Matrix2D Matrix2D::column(const DenseTensor& v) {
    if (v.rank() != 1) throw DimError("column needs a rank-1 tensor, got shape " + v.shape().to_string());
    return Matrix2D(v.with_unit_extents(Shape{v.size(), 1}));
}

Scalar Matrix2D::operator()(std::size_t i, std::size_t j) const {
    const std::size_t idx[] = {i, j};
    return tensor_.get(idx);
}

Matrix2D Matrix2D::column_at(std::size_t j) const {
    std::vector<Scalar> data(rows());
    for (std::size_t i = 0; i < rows(); ++i) data[i] = (*this)(i, j);
    return Matrix2D(rows(), 1, std::move(data));
}

bool operator==(const Matrix2D& a, const Matrix2D& b) { return tensors_equal(a.tensor(), b.tensor()); }

Matrix2D matmul(const Matrix2D& x, const Matrix2D& y) {
    if (x.cols() != y.rows())
        throw ShapeError("cannot multiply " + dims(x) + " by " + dims(y));
    std::vector<Scalar> data(x.rows() * y.cols(), 0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t l = 0; l < x.cols(); ++l) {
            const Scalar xil = x(i, l);
            if (xil == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) data[i * y.cols() + j] += xil * y(l, j);
        }
    return Matrix2D(x.rows(), y.cols(), std::move(data));
}

Matrix2D transpose(const Matrix2D& x) { return Matrix2D(transpose(x.tensor(), 1, 2)); }

Matrix2D kronecker(const Matrix2D& x, const Matrix2D& y) {
    const std::size_t rows = x.rows() * y.rows();
    const std::size_t cols = x.cols() * y.cols();
    std::vector<Scalar> data(rows * cols);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const Scalar xij = x(i, j);
            for (std::size_t r = 0; r < y.rows(); ++r)
                for (std::size_t s = 0; s < y.cols(); ++s)
                    data[(i * y.rows() + r) * cols + (j * y.cols() + s)] = xij * y(r, s);
        }
    return Matrix2D(rows, cols, std::move(data));
}

DenseTensor vec2(const Matrix2D& x) { return vec_k(x.tensor()); }

Matrix2D kron_inverse_2d(const DenseTensor& a, std::size_t rows, std::size_t cols) {
    if (a.rank() != 1 || a.size() != rows * cols)
        throw ShapeError("vector of shape " + a.shape().to_string() + " cannot fill a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    const Matrix2D selector = kronecker(transpose(Matrix2D::column(vec2(Matrix2D::identity(cols)))),
                                        Matrix2D::identity(rows));
    const Matrix2D stacked = kronecker(Matrix2D::identity(cols), Matrix2D::column(a));
    return matmul(selector, stacked);
}

Scalar vec_product_identity_residual(const Matrix2D& o, const Matrix2D& p, const Matrix2D& q) {
    const Matrix2D lhs = Matrix2D::column(vec2(matmul(matmul(o, p), q)));
    const Matrix2D rhs = matmul(kronecker(transpose(q), o), Matrix2D::column(vec2(p)));
    return max_abs_difference(lhs, rhs);
}

Scalar kron_column_identity_residual(const Matrix2D& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const Matrix2D selector = kronecker(transpose(Matrix2D::column(vec2(Matrix2D::identity(n)))),
                                        Matrix2D::identity(m));
    const Matrix2D stacked = kronecker(Matrix2D::identity(n), Matrix2D::column(vec2(a)));
    Scalar worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix2D lhs = matmul(a, Matrix2D::unit_column(n, k));
        const Matrix2D rhs = matmul(selector, stacked.column_at(k));
        worst = std::max(worst, max_abs_difference(lhs, rhs));
    }
    return worst;
}

}  // namespace gvec
