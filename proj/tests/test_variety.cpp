#include "doctest.h"

#include <random>

#include "minv/conjugacy.hpp"
#include "minv/variety.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

using namespace minv;
using minv_test::naive_rank;
using minv_test::random_invertible;
using minv_test::random_matrix;

namespace {

MatTuple st_pair(const FieldCtx& F) {
    return MatTuple({Matrix::unit(F, 2, 0, 1), Matrix::unit(F, 2, 1, 0)});
}

// (A, A, B) triples on the locus x1 = x2, with the tuple still generating.
PointVariety diagonal_locus(const FieldCtx& F, std::mt19937_64& rng, std::size_t count) {
    std::vector<MatTuple> pts;
    while (pts.size() < count) {
        Matrix A = random_matrix(F, 2, rng), B = random_matrix(F, 2, rng);
        MatTuple cand({A, A, B});
        if (in_U(cand).verdict) pts.push_back(std::move(cand));
    }
    return PointVariety::from_points(std::move(pts), "x1 = x2 locus");
}

// (A, B) pairs with A an involution (conjugates of diag(1,-1)).
PointVariety involution_locus(const FieldCtx& F, std::mt19937_64& rng, std::size_t count) {
    Matrix seed(F, 2, 2);
    seed.at(0, 0) = F.one();
    seed.at(1, 1) = -F.one();
    std::vector<MatTuple> pts;
    while (pts.size() < count) {
        Matrix g = random_invertible(F, 2, rng);
        Matrix A = g * seed * *inverse(g);
        Matrix B = random_matrix(F, 2, rng);
        MatTuple cand({A, B});
        if (in_U(cand).verdict) pts.push_back(std::move(cand));
    }
    return PointVariety::from_points(std::move(pts), "x1 involutive");
}

// membership of p in span(basis) over the degree-<= d word list
bool in_span(const NcPoly& p, const std::vector<NcPoly>& basis, std::size_t m, std::size_t d) {
    const FieldCtx& F = p.ctx();
    std::vector<Word> words = enumerate_words(m, d);
    auto to_vec = [&](const NcPoly& q) {
        std::vector<FieldElem> v(words.size(), F.zero());
        for (std::size_t i = 0; i < words.size(); ++i) {
            auto it = q.terms().find(words[i]);
            if (it != q.terms().end()) v[i] = it->second;
        }
        return v;
    };
    std::vector<std::vector<FieldElem>> rows;
    for (const NcPoly& b : basis) rows.push_back(to_vec(b));
    std::size_t base_rank = naive_rank(rows);
    rows.push_back(to_vec(p));
    return naive_rank(rows) == base_rank;
}

} // namespace

TEST_CASE("variety construction") {
    FieldCtx q = FieldCtx::rationals();
    CHECK_NOTHROW(PointVariety::from_points({st_pair(q)}, "one good point"));

    try {
        PointVariety::from_points({MatTuple({Matrix::unit(q, 2, 0, 0), Matrix::unit(q, 2, 0, 1)})}, "bad");
        FAIL("expected PointNotInU");
    } catch (const Error& e) {
        CHECK(e.code() == Err::PointNotInU);
        CHECK(std::string(e.what()).find("point 0") != std::string::npos);
    }

    MatTuple p3({Matrix::unit(q, 3, 0, 1), Matrix::unit(q, 3, 1, 0)});
    CHECK_THROWS_AS(PointVariety::from_points({st_pair(q), p3}, "mixed n"), Error);
    CHECK_THROWS_AS(PointVariety::from_points({}, "empty"), Error);
}

TEST_CASE("ideal kernel basics") {
    FieldCtx q = FieldCtx::rationals();
    PointVariety X = PointVariety::from_points({st_pair(q)}, "one point");
    CHECK(ideal_kernel_basis(X, 1).empty()); // I, e12, e21 are independent

    std::mt19937_64 rng(81);
    FieldCtx F = FieldCtx::prime(7);
    PointVariety D = diagonal_locus(F, rng, 6);
    auto basis = ideal_kernel_basis(D, 1);
    NcPoly x1_minus_x2 = parse_nc_poly(F, "X1 - X2");
    CHECK(in_span(x1_minus_x2, basis, 3, 1));

    PointVariety I = involution_locus(F, rng, 5);
    auto basis2 = ideal_kernel_basis(I, 2);
    NcPoly rel = parse_nc_poly(F, "X1*X1 - 1");
    CHECK(in_span(rel, basis2, 2, 2));
}

TEST_CASE("kernel soundness and monotonicity") {
    std::mt19937_64 rng(82);
    FieldCtx F = FieldCtx::prime(5);
    PointVariety I = involution_locus(F, rng, 4);

    auto basis = ideal_kernel_basis(I, 2);
    for (const NcPoly& p : basis)
        for (const MatTuple& pt : I.points()) CHECK(eval_nc(p, pt).is_zero());

    // enlarging the sample can only shrink the kernel
    auto more_points = I.points();
    PointVariety I2 = involution_locus(F, rng, 4);
    for (const auto& pt : I2.points()) more_points.push_back(pt);
    PointVariety big = PointVariety::from_points(more_points, "larger sample");
    auto basis_big = ideal_kernel_basis(big, 2);
    CHECK(basis_big.size() <= basis.size());
    for (const NcPoly& p : basis_big) {
        for (const MatTuple& pt : I.points()) CHECK(eval_nc(p, pt).is_zero());
        CHECK(in_span(p, basis, 2, 2));
    }

    // enlarging d keeps every lower-degree kernel element in the span
    auto basis3 = ideal_kernel_basis(I, 3);
    for (const NcPoly& p : basis) CHECK(in_span(p, basis3, 2, 3));
}

TEST_CASE("apply_regular_map") {
    FieldCtx q = FieldCtx::rationals();
    MatTuple x = st_pair(q);

    RegularMapSpec ident = RegularMapSpec::identity(q, 2);
    CHECK(apply_regular_map(ident, x) == x);

    RegularMapSpec F = RegularMapSpec::make(
        2, {parse_trace_poly(q, "X1"), parse_trace_poly(q, "X1*X2")});
    MatTuple img = apply_regular_map(F, x);
    CHECK(img.mat(0) == Matrix::unit(q, 2, 0, 1));
    CHECK(img.mat(1) == Matrix::unit(q, 2, 0, 0));

    CHECK_THROWS_AS(RegularMapSpec::make(1, {parse_trace_poly(q, "X2")}), Error);
}

TEST_CASE("apply_regular_map naturality via substitution oracle") {
    // p(F(x)) agrees with the symbolic substitution of the images into p
    std::mt19937_64 rng(83);
    FieldCtx F7 = FieldCtx::prime(7);
    for (int trial = 0; trial < 40; ++trial) {
        // map with 2 source generators and 2 images of degree <= 2
        std::vector<TracePoly> images;
        for (int i = 0; i < 2; ++i) {
            NcPoly p(F7);
            for (int t = 0; t < 3; ++t) {
                Word w;
                std::size_t len = rng() % 3;
                for (std::size_t k = 0; k < len; ++k) w.push_back(1 + rng() % 2);
                p.add_term(w, random_element(F7, rng));
            }
            images.push_back(TracePoly::from_nc(p));
        }
        RegularMapSpec T = RegularMapSpec::make(2, images);

        NcPoly p(F7); // polynomial in the 2 target generators
        for (int t = 0; t < 3; ++t) {
            Word w;
            std::size_t len = rng() % 3;
            for (std::size_t k = 0; k < len; ++k) w.push_back(1 + rng() % 2);
            p.add_term(w, random_element(F7, rng));
        }

        // substitution oracle: replace each letter by its image, symbolically
        TracePoly substituted(F7);
        for (const auto& [w, c] : p.terms()) {
            TracePoly prod = TracePoly::scalar(c);
            for (std::uint32_t letter : w) prod = prod * images[letter - 1];
            substituted = substituted + prod;
        }

        MatTuple x({random_matrix(F7, 2, rng), random_matrix(F7, 2, rng)});
        CHECK(eval_nc(p, apply_regular_map(T, x)) == eval_trace(substituted, x));
    }
}

TEST_CASE("morphism check: the M_2(k[t]) counterexample at desk scale") {
    FieldCtx q = FieldCtx::rationals();
    Matrix e12 = Matrix::unit(q, 2, 0, 1), e21 = Matrix::unit(q, 2, 1, 0);
    Matrix I2 = Matrix::identity(q, 2);

    // source: samples of M_2(k[t]) through generators (e12, e21, t*I)
    std::vector<MatTuple> xs;
    for (int t : {0, 1, 2}) xs.push_back(MatTuple({e12, e21, q.from_int(t) * I2}));
    PointVariety X = PointVariety::from_points(xs, "M2(k[t]) at t=0,1,2");

    // the subring R: matrices with lower-left entry in t*k[t], generated by
    // e11, e12, t*e21, e22, t*I; expressed in the source generators
    RegularMapSpec F = RegularMapSpec::make(3, {parse_trace_poly(q, "X1*X2"), parse_trace_poly(q, "X1"),
                                                parse_trace_poly(q, "X3*X2"), parse_trace_poly(q, "X2*X1"),
                                                parse_trace_poly(q, "X3")});

    // Target samples: images at t != 0 (the implementer's check that the
    // chosen generators do generate R away from t = 0).  Entries of
    // degree-<=2 words are polynomials of degree <= 2 in t, so three
    // nonzero sample values pin the kernel to genuine relations of R.
    std::vector<MatTuple> ys;
    for (int t : {1, 2, 3}) ys.push_back(apply_regular_map(F, MatTuple({e12, e21, q.from_int(t) * I2})));
    for (const auto& y : ys) CHECK(in_U(y).verdict);
    PointVariety Y = PointVariety::from_points(ys, "R samples at t=1,2,3");

    MorphismReport rep = morphism_check(F, X, Y, 2);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.records.size() == 3);
    CHECK_FALSE(rep.records[0].in_u_target);       // t = 0: image is upper triangular
    CHECK(rep.records[0].annihilates_target_ideal); // ... but it satisfies the relations
    CHECK(rep.records[1].pass());
    CHECK(rep.records[2].pass());

    // swapping source and target: the surjection t -> 0 from M_2(k[t]) onto
    // M_2 passes the criterion
    PointVariety X0 = PointVariety::from_points({xs[0]}, "the t=0 fiber");
    RegularMapSpec G = RegularMapSpec::make(
        3, {parse_trace_poly(q, "X1"), parse_trace_poly(q, "X2"), parse_trace_poly(q, "0")});
    MorphismReport rep2 = morphism_check(G, X0, X, 2);
    CHECK(rep2.verdict);
}

TEST_CASE("morphism check: identity and collapsing maps") {
    std::mt19937_64 rng(84);
    FieldCtx F7 = FieldCtx::prime(7);
    PointVariety D = diagonal_locus(F7, rng, 4);
    CHECK(morphism_check(RegularMapSpec::identity(F7, 3), D, D, 2).verdict);

    // a map collapsing to a scalar image drops the PI-degree: in_U fails everywhere
    RegularMapSpec collapse = RegularMapSpec::make(
        3, {parse_trace_poly(F7, "c1(X1)"), parse_trace_poly(F7, "c1(X2)"), parse_trace_poly(F7, "c1(X3)")});
    MorphismReport rep = morphism_check(collapse, D, D, 1);
    CHECK_FALSE(rep.verdict);
    for (const auto& r : rep.records) CHECK_FALSE(r.in_u_target);
}

TEST_CASE("morphism verdict is invariant under conjugating sample points") {
    std::mt19937_64 rng(85);
    FieldCtx F7 = FieldCtx::prime(7);
    PointVariety D = diagonal_locus(F7, rng, 3);
    RegularMapSpec ident = RegularMapSpec::identity(F7, 3);
    bool base = morphism_check(ident, D, D, 2).verdict;

    std::vector<MatTuple> conj;
    for (const auto& pt : D.points()) conj.push_back(conjugate_tuple(random_invertible(F7, 2, rng), pt));
    PointVariety Dc = PointVariety::from_points(conj, "conjugated");
    CHECK(morphism_check(ident, Dc, Dc, 2).verdict == base);
}

TEST_CASE("trace ideal check") {
    std::mt19937_64 rng(86);
    FieldCtx F7 = FieldCtx::prime(7);

    PointVariety D = diagonal_locus(F7, rng, 5);
    TraceIdealReport r1 = trace_ideal_check(D, parse_nc_poly(F7, "X1 - X2"));
    CHECK(r1.precondition_met);
    CHECK(r1.violations.empty());

    PointVariety I = involution_locus(F7, rng, 5);
    TraceIdealReport r2 = trace_ideal_check(I, parse_nc_poly(F7, "X1*X1 - 1"));
    CHECK(r2.precondition_met);
    CHECK(r2.violations.empty());

    TraceIdealReport r3 = trace_ideal_check(I, parse_nc_poly(F7, "X1"));
    CHECK_FALSE(r3.precondition_met); // no claim made
}
