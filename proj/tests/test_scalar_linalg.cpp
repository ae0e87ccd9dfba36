#include <doctest.h>

#include "bihom/eval.hpp"
#include "bihom/linalg.hpp"

using namespace bihom;

TEST_CASE("scalar normalization and exactness") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(-3, -6) == Scalar(1, 2));
    CHECK(Scalar(1, 3) + Scalar(2, 3) == Scalar(1));
    CHECK(Scalar::parse("5/3").denominator() == "3");
    CHECK(Scalar::parse("-7").str() == "-7");
    CHECK(Scalar(1, 2).str() == "1/2");
    CHECK_THROWS_AS(Scalar::parse("1.5"), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

static Matrix rand_matrix(Mcg64& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational();
    return m;
}

TEST_CASE("matrix composition is exactly associative at random rational entries") {
    Mcg64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + rng.below(7);  // dims up to 8
        Matrix a = rand_matrix(rng, n), b = rand_matrix(rng, n), c = rand_matrix(rng, n);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
}

TEST_CASE("matrix apply follows the column convention") {
    // columns are images of basis vectors
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(2);
    m.at(0, 1) = Scalar(-2);
    Vec e2{Scalar(0), Scalar(1)};
    CHECK(m.apply(e2) == Vec{Scalar(-2), Scalar(0)});
    Matrix swap(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    CHECK(swap.apply(Vec{Scalar(5), Scalar(7)}) == Vec{Scalar(7), Scalar(5)});
    CHECK(Matrix::identity(2).apply(Vec{Scalar(3), Scalar(-1, 2)}) ==
          Vec{Scalar(3), Scalar(-1, 2)});
    CHECK_THROWS_AS(m.apply(Vec{Scalar(1)}), Error);
}

TEST_CASE("transpose swaps indices and is an involution") {
    Mcg64 rng(7);
    Matrix m = rand_matrix(rng, 4);
    CHECK(m.transpose().transpose() == m);
    CHECK(m.transpose().at(1, 3) == m.at(3, 1));
    CHECK(Matrix::identity(3).transpose() == Matrix::identity(3));
}

TEST_CASE("tensor application is bilinear") {
    Mcg64 rng(11);
    Tensor3 t(3, 3, 3);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.at(k, i, j) = rng.rational();
    for (int trial = 0; trial < 5; ++trial) {
        Scalar a = rng.rational(), b = rng.rational();
        Vec u(3), u2(3), v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = rng.rational();
            u2[i] = rng.rational();
            v[i] = rng.rational();
        }
        Vec lhs_arg(3);
        for (int i = 0; i < 3; ++i) lhs_arg[i] = a * u[i] + b * u2[i];
        Vec lhs = t.apply(lhs_arg, v);
        Vec r1 = t.apply(u, v), r2 = t.apply(u2, v);
        for (int k = 0; k < 3; ++k) CHECK(lhs[k] == a * r1[k] + b * r2[k]);
    }
    Tensor3 zero(2, 2, 2);
    CHECK(is_zero(zero.apply(Vec{Scalar(3), Scalar(5)}, Vec{Scalar(-1), Scalar(2)})));
}

TEST_CASE("row space membership by exact reduction") {
    RowSpace rs(3);
    CHECK(rs.insert(Vec{Scalar(1), Scalar(2), Scalar(0)}));
    CHECK(rs.insert(Vec{Scalar(0), Scalar(1), Scalar(1)}));
    CHECK_FALSE(rs.insert(Vec{Scalar(2), Scalar(5), Scalar(1)}));  // dependent
    CHECK(rs.rank() == 2);
    CHECK(rs.contains(Vec{Scalar(1), Scalar(3), Scalar(1)}));
    CHECK_FALSE(rs.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("composition with identity and zero") {
    Mcg64 rng(3);
    Matrix m = rand_matrix(rng, 3);
    CHECK(Matrix::identity(3).compose(m) == m);
    CHECK(m.compose(Matrix::identity(3)) == m);
    CHECK(m.compose(Matrix::zero(3, 3)).is_zero());
    CHECK(Matrix::zero(3, 3).compose(m).is_zero());
}
