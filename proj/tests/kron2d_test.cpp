#include <gtest/gtest.h>

#include <random>

#include "gvec/errors.hpp"
#include "gvec/indexmap.hpp"
#include "gvec/kron2d.hpp"
#include "gvec/shiftvec.hpp"
#include "support/oracles.hpp"

using namespace gvec;
using gvec::testing::vector_of;

namespace {

Matrix2D random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<Scalar> data(rows * cols);
    for (auto& v : data) v = std::uniform_int_distribution<int>(-20, 20)(rng);
    return Matrix2D(rows, cols, std::move(data));
}

}  // namespace

TEST(Matrix2DTest, RankMustBeTwo) {
    EXPECT_THROW(Matrix2D(gvec::testing::slice_tensor()), DimError);
    EXPECT_THROW(Matrix2D(vector_of({1, 2})), DimError);
    EXPECT_EQ(Matrix2D::column(vector_of({1, 2, 3})).rows(), 3u);
}

TEST(KroneckerTest, IdentityTimesSwapIsBlockDiagonal) {
    const Matrix2D swap(2, 2, {0, 1, 1, 0});
    const Matrix2D want(4, 4, {0, 1, 0, 0,
                               1, 0, 0, 0,
                               0, 0, 0, 1,
                               0, 0, 1, 0});
    EXPECT_EQ(kronecker(Matrix2D::identity(2), swap), want);
}

TEST(KroneckerTest, OneByOneScales) {
    const Matrix2D y(2, 3, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(kronecker(Matrix2D(1, 1, {2}), y), Matrix2D(2, 3, {2, 4, 6, 8, 10, 12}));
    EXPECT_EQ(kronecker(Matrix2D(1, 1, {1}), y), y);
    EXPECT_EQ(kronecker(y, Matrix2D(1, 1, {1})), y);
}

TEST(KroneckerTest, IdentityTimesColumn) {
    const auto b = kronecker(Matrix2D::identity(2), Matrix2D(3, 1, {1, 2, 3}));
    EXPECT_EQ(b, Matrix2D(6, 2, {1, 0, 2, 0, 3, 0, 0, 1, 0, 2, 0, 3}));
}

TEST(KroneckerTest, BlockStructure) {
    std::mt19937_64 rng(41);
    const auto x = random_matrix(rng, 3, 2);
    const auto y = random_matrix(rng, 2, 4);
    const auto k = kronecker(x, y);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 8u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(k(i * 2 + r, j * 4 + s), x(i, j) * y(r, s));
}

TEST(KroneckerTest, ColumnsOfIdentityKronVector) {
    std::mt19937_64 rng(43);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto a = random_matrix(rng, 6, 1);
        const auto b = kronecker(Matrix2D::identity(n), a);
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(b.column_at(k), kronecker(Matrix2D::unit_column(n, k), a));
    }
}

TEST(Vec2Test, Examples) {
    EXPECT_TRUE(tensors_equal(vec2(Matrix2D(2, 2, {1, 2, 3, 4})), vector_of({1, 3, 2, 4})));
    EXPECT_TRUE(tensors_equal(vec2(Matrix2D(3, 1, {5, 6, 7})), vector_of({5, 6, 7})));
    EXPECT_TRUE(tensors_equal(vec2(Matrix2D(1, 4, {1, 3, 2, 4})), vector_of({1, 3, 2, 4})));
}

TEST(KronInverseTest, Examples) {
    EXPECT_EQ(kron_inverse_2d(vector_of({1, 3, 2, 4}), 2, 2), Matrix2D(2, 2, {1, 2, 3, 4}));
    EXPECT_EQ(kron_inverse_2d(vector_of({4, 5, 6}), 3, 1), Matrix2D(3, 1, {4, 5, 6}));
    EXPECT_THROW(kron_inverse_2d(vector_of({1, 2, 3}), 2, 2), ShapeError);
}

TEST(KronInverseTest, MatchesIndexMapAndRoundTrips) {
    std::mt19937_64 rng(47);
    for (std::size_t m = 1; m <= 8; ++m)
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto x = random_matrix(rng, m, n);
            const auto a = vec2(x);
            const auto got = kron_inverse_2d(a, m, n);
            EXPECT_EQ(got, x);
            EXPECT_TRUE(tensors_equal(got.tensor(), unvec_by_index(a, Shape{m, n})));
        }
}

// As printed, the left factor is vec(I_N) (x) I_M^T, an N^2 M x M matrix,
// which cannot multiply the M N^2 x N stack I_N (x) a.
TEST(KronInverseTest, UntransposedSelectorIsNotConformable) {
    const std::size_t m = 2, n = 3;
    const auto a = vec2(Matrix2D(m, n, {1, 2, 3, 4, 5, 6}));
    const auto printed = kronecker(Matrix2D::column(vec2(Matrix2D::identity(n))), transpose(Matrix2D::identity(m)));
    const auto stacked = kronecker(Matrix2D::identity(n), Matrix2D::column(a));
    EXPECT_EQ(printed.rows(), n * n * m);
    EXPECT_EQ(printed.cols(), m);
    EXPECT_EQ(stacked.rows(), m * n * n);
    EXPECT_THROW(matmul(printed, stacked), ShapeError);
}

TEST(VecProductIdentityTest, IdentitySandwich) {
    const auto i2 = Matrix2D::identity(2);
    EXPECT_EQ(vec_product_identity_residual(i2, Matrix2D(2, 2, {1, 2, 3, 4}), i2), 0);
}

TEST(VecProductIdentityTest, RandomConformableTriples) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<std::size_t> e(1, 6);
        const std::size_t r = e(rng), s = e(rng), t = e(rng), u = e(rng);
        EXPECT_EQ(vec_product_identity_residual(random_matrix(rng, r, s), random_matrix(rng, s, t),
                                                random_matrix(rng, t, u)),
                  0);
    }
    EXPECT_EQ(vec_product_identity_residual(random_matrix(rng, 2, 3), random_matrix(rng, 3, 2),
                                            random_matrix(rng, 2, 2)),
              0);
}

TEST(VecProductIdentityTest, NonConformable) {
    const auto a = Matrix2D::identity(2);
    EXPECT_THROW(vec_product_identity_residual(a, Matrix2D::identity(3), a), ShapeError);
}

TEST(VecProductIdentityTest, ColumnIdentityChain) {
    std::mt19937_64 rng(59);
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(kron_column_identity_residual(random_matrix(rng, m, n)), 0);
}

TEST(VecProductIdentityTest, ResidualIsNonzeroForWrongSide) {
    // Swapping O and Q^T in the Kronecker factor breaks the identity.
    const Matrix2D o(2, 2, {1, 2, 3, 4});
    const Matrix2D p(2, 2, {0, 1, 0, 0});
    const Matrix2D q(2, 2, {5, 6, 7, 8});
    const auto lhs = vec2(matmul(matmul(o, p), q));
    const auto wrong = matmul(kronecker(o, transpose(q)), Matrix2D::column(vec2(p)));
    EXPECT_FALSE(tensors_equal(Matrix2D::column(lhs).tensor(), wrong.tensor()));
}
