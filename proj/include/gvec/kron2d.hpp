#pragma once

#include "gvec/tensor.hpp"

namespace gvec {

/// Rank-2 tensor. Construction from a tensor of any other rank throws DimError.
class Matrix2D {
public:
    explicit Matrix2D(DenseTensor t);

    /// Row-major data.
    Matrix2D(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix2D identity(std::size_t n);
    /// n x 1 column with a 1 at position k.
    static Matrix2D unit_column(std::size_t n, std::size_t k);
    /// A rank-1 tensor viewed as an n x 1 column.
    static Matrix2D column(const DenseTensor& v);

    std::size_t rows() const noexcept { return tensor_.shape()[0]; }
    std::size_t cols() const noexcept { return tensor_.shape()[1]; }
    Scalar operator()(std::size_t i, std::size_t j) const;

    const DenseTensor& tensor() const noexcept { return tensor_; }

    Matrix2D column_at(std::size_t j) const;

private:
    DenseTensor tensor_;
};

bool operator==(const Matrix2D& a, const Matrix2D& b);

/// Dense product. Throws ShapeError when inner extents differ.
Matrix2D matmul(const Matrix2D& x, const Matrix2D& y);

Matrix2D transpose(const Matrix2D& x);

/// Element (i M_y + r, j N_y + s) = x(i, j) * y(r, s).
Matrix2D kronecker(const Matrix2D& x, const Matrix2D& y);

/// Column stacking, as a rank-1 tensor of length rows * cols.
DenseTensor vec2(const Matrix2D& x);

/// [vec(I_N)^T (x) I_M] (I_N (x) a): the M x N matrix whose vec2 is a.
/// Throws ShapeError unless a is rank 1 with length M * N.
Matrix2D kron_inverse_2d(const DenseTensor& a, std::size_t rows, std::size_t cols);

/// max |vec2(O P Q) - (Q^T (x) O) vec2(P)|. Throws ShapeError when O P Q is
/// not defined.
Scalar vec_product_identity_residual(const Matrix2D& o, const Matrix2D& p, const Matrix2D& q);

/// For a = vec2(A) and b_k the k-th column of I_N (x) a, the maximum over k
/// of |[vec(I_N)^T (x) I_M] b_k - A i_{N,k}|.
Scalar kron_column_identity_residual(const Matrix2D& a);

}  // namespace gvec
