#include "doctest.h"

#include <random>

#include "minv/matrix.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

using namespace minv;
using minv_test::leibniz_charpoly;
using minv_test::naive_rank;
using minv_test::principal_minor_sum;
using minv_test::random_invertible;
using minv_test::random_matrix;

namespace {

Matrix from_ints(const FieldCtx& F, std::size_t n, std::initializer_list<long long> rows) {
    Matrix A(F, n, n);
    auto it = rows.begin();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = F.from_int(*it++);
    return A;
}

} // namespace

TEST_CASE("matrix arithmetic basics") {
    std::mt19937_64 rng(41);
    for (const char* desc : {"Q", "F7"}) {
        FieldCtx F = FieldCtx::parse(desc);
        for (std::size_t n = 1; n <= 4; ++n) {
            Matrix A = random_matrix(F, n, rng);
            CHECK(Matrix::identity(F, n) * A == A);
            Matrix B = random_matrix(F, n, rng);
            Matrix C = random_matrix(F, n, rng);
            CHECK((A + B) * C == A * C + B * C);
        }
    }
    FieldCtx q = FieldCtx::rationals();
    CHECK(Matrix::unit(q, 2, 0, 1) * Matrix::unit(q, 2, 1, 0) == Matrix::unit(q, 2, 0, 0));
    CHECK_THROWS_AS((void)(Matrix(q, 2, 2) + Matrix(q, 3, 3)), Error);
    CHECK_THROWS_AS((void)(Matrix(q, 2, 2) + Matrix(FieldCtx::prime(5), 2, 2)), Error);
}

TEST_CASE("charpoly on fixed inputs") {
    FieldCtx q = FieldCtx::rationals();
    Matrix D = from_ints(q, 3, {1, 0, 0, 0, 2, 0, 0, 0, 3});
    CharCoeffs cc = charpoly(D);
    CHECK(cc.c[0] == q.from_int(6));
    CHECK(cc.c[1] == q.from_int(11));
    CHECK(cc.c[2] == q.from_int(6));

    Matrix Z(q, 3, 3);
    for (const FieldElem& c : charpoly(Z).c) CHECK(c.is_zero());
}

TEST_CASE("charpoly matches Leibniz oracle over GF(7)") {
    std::mt19937_64 rng(4242);
    FieldCtx F = FieldCtx::prime(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Matrix A = random_matrix(F, n, rng);
        CHECK(charpoly_poly(A) == leibniz_charpoly(A));
    }
}

TEST_CASE("cs examples") {
    FieldCtx q = FieldCtx::rationals();
    Matrix D = from_ints(q, 2, {1, 0, 0, 2});
    CHECK(cs(D, 1) == q.from_int(3));
    CHECK(cs(D, 2) == q.from_int(2));
    Matrix N = Matrix::unit(q, 2, 0, 1);
    CHECK(cs(N, 1).is_zero());
    CHECK(cs(N, 2).is_zero());
    CHECK_THROWS_AS(cs(D, 0), Error);
    CHECK_THROWS_AS(cs(D, 3), Error);

    // c_2 = trace on the second exterior power = sum of principal 2x2 minors
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix A = random_matrix(q, 3, rng);
        CHECK(cs(A, 2) == principal_minor_sum(A, 2));
    }
}

TEST_CASE("charpoly block-diagonal convolution") {
    std::mt19937_64 rng(6);
    FieldCtx F = FieldCtx::prime(11);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix A = random_matrix(F, 2, rng);
        Matrix B = random_matrix(F, 2, rng);
        Matrix AB(F, 4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                AB.at(i, j) = A.at(i, j);
                AB.at(2 + i, 2 + j) = B.at(i, j);
            }
        CHECK(charpoly_poly(AB) == charpoly_poly(A) * charpoly_poly(B));
    }
}

TEST_CASE("Cayley-Hamilton holds exactly") {
    std::mt19937_64 rng(7);
    for (const char* desc : {"Q", "F5", "F2^2:1,1,1"}) {
        FieldCtx F = FieldCtx::parse(desc);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 1 + rng() % 4;
            Matrix A = random_matrix(F, n, rng);
            CharCoeffs cc = charpoly(A);
            Matrix acc = Matrix::identity(F, n); // A^0
            std::vector<Matrix> powers{acc};
            for (std::size_t i = 1; i <= n; ++i) {
                acc = acc * A;
                powers.push_back(acc);
            }
            Matrix sum = powers[n];
            FieldElem sign = F.one();
            for (std::size_t s = 1; s <= n; ++s) {
                sign = -sign;
                sum = sum + sign * cc.c[s - 1] * powers[n - s];
            }
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("charpoly is conjugation invariant") {
    std::mt19937_64 rng(8);
    FieldCtx F = FieldCtx::prime(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 3;
        Matrix A = random_matrix(F, n, rng);
        Matrix g = random_invertible(F, n, rng);
        Matrix conj = g * A * *inverse(g);
        CHECK(charpoly_poly(conj) == charpoly_poly(A));
    }
}

TEST_CASE("nullspace basics and oracle") {
    FieldCtx q = FieldCtx::rationals();
    CHECK(nullspace(Matrix::identity(q, 3)).empty());
    CHECK(nullspace(Matrix(q, 2, 2)).size() == 2);

    std::mt19937_64 rng(9);
    FieldCtx F = FieldCtx::prime(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix M(F, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = random_element(F, rng);
        auto basis = nullspace(M);

        std::vector<std::vector<FieldElem>> mrows;
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<FieldElem> row;
            for (std::size_t j = 0; j < cols; ++j) row.push_back(M.at(i, j));
            mrows.push_back(std::move(row));
        }
        CHECK(basis.size() == cols - naive_rank(mrows));

        // exactness: every basis vector is annihilated
        for (const auto& v : basis)
            for (std::size_t i = 0; i < rows; ++i) {
                FieldElem dot = F.zero();
                for (std::size_t j = 0; j < cols; ++j) dot += M.at(i, j) * v[j];
                CHECK(dot.is_zero());
            }
        // linear independence
        if (!basis.empty()) CHECK(naive_rank(basis) == basis.size());
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937_64 rng(10);
    FieldCtx F = FieldCtx::prime(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Matrix A = random_invertible(F, n, rng);
        Matrix inv = *inverse(A);
        CHECK((A * inv).is_identity());
        std::vector<FieldElem> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(random_element(F, rng));
        auto x = solve(A, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            FieldElem dot = F.zero();
            for (std::size_t j = 0; j < n; ++j) dot += A.at(i, j) * (*x)[j];
            CHECK(dot == b[i]);
        }
    }
    // singular matrix
    FieldCtx q = FieldCtx::rationals();
    CHECK_FALSE(inverse(Matrix(q, 2, 2)).has_value());
    CHECK_FALSE(solve(Matrix(q, 2, 2), {q.one(), q.zero()}).has_value());
}

TEST_CASE("intertwiner space on fixed pairs") {
    FieldCtx q = FieldCtx::rationals();
    Matrix e12 = Matrix::unit(q, 2, 0, 1), e21 = Matrix::unit(q, 2, 1, 0);

    // centralizer of a generating pair is the scalars
    auto cent = intertwiner_space({e12, e21}, {e12, e21});
    REQUIRE(cent.size() == 1);
    CHECK(cent[0].is_scalar());

    // x = (e12, e21), y = (2 e12, 1/2 e21): intertwiner spanned by diag(1, 1/2)
    Matrix y1 = q.from_int(2) * e12;
    Matrix y2 = q.parse_elem("1/2") * e21;
    auto basis = intertwiner_space({e12, e21}, {y1, y2});
    REQUIRE(basis.size() == 1);
    const Matrix& g = basis[0];
    CHECK(g * e12 == y1 * g);
    CHECK(g * e21 == y2 * g);
    CHECK(g.at(0, 1).is_zero());
    CHECK(g.at(1, 0).is_zero());
    CHECK(g.at(1, 1) / g.at(0, 0) == q.parse_elem("1/2"));

    // fingerprint-separated pair: empty intertwiner space
    Matrix y2b = q.from_int(2) * e21;
    CHECK(intertwiner_space({e12, e21}, {e12, y2b}).empty());
}
