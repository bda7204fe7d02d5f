#include "doctest.h"

#include <random>

#include "minv/field.hpp"

using namespace minv;

namespace {

UniPoly poly_from_ints(const FieldCtx& F, std::initializer_list<long long> coeffs_low_first) {
    std::vector<FieldElem> c;
    for (long long v : coeffs_low_first) c.push_back(F.from_int(v));
    return UniPoly(F, std::move(c));
}

} // namespace

TEST_CASE("field construction and descriptors") {
    FieldCtx q = FieldCtx::rationals();
    CHECK(q.characteristic() == 0);
    CHECK(q.descriptor() == "Q");

    FieldCtx f7 = FieldCtx::prime(7);
    CHECK(f7.characteristic() == 7);
    CHECK(f7.order() == 7);

    CHECK_THROWS_AS(FieldCtx::prime(6), Error);
    try {
        FieldCtx::prime(6);
    } catch (const Error& e) {
        CHECK(e.code() == Err::CompositeModulus);
    }

    FieldCtx f4 = FieldCtx::extension(2, {1, 1, 1}); // x^2 + x + 1
    CHECK(f4.characteristic() == 2);
    CHECK(f4.order() == 4);
    CHECK(f4.ext_degree() == 2);

    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(FieldCtx::extension(2, {1, 0, 1}), Error);
    // x^2 - 2 is irreducible over GF(5)? 2 is not a QR mod 5: 1,4,4,1 -> yes
    CHECK_NOTHROW(FieldCtx::extension(5, {3, 0, 1}));

    CHECK(FieldCtx::parse("Q").same(q));
    CHECK(FieldCtx::parse("F7").same(f7));
    CHECK(FieldCtx::parse("F2^2:1,1,1").same(f4));
    CHECK(FieldCtx::parse(f4.descriptor()).same(f4));
    CHECK_THROWS_AS(FieldCtx::parse("F8^"), Error);
    CHECK_THROWS_AS(FieldCtx::parse("garbage"), Error);
}

TEST_CASE("exact arithmetic in all three kinds") {
    FieldCtx q = FieldCtx::rationals();
    FieldElem third = q.parse_elem("1/3"), sixth = q.parse_elem("1/6");
    CHECK(third + sixth == q.parse_elem("1/2"));
    CHECK(q.to_string(third + sixth) == "1/2");

    FieldCtx f7 = FieldCtx::prime(7);
    CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());

    FieldCtx f4 = FieldCtx::extension(2, {1, 1, 1});
    FieldElem x = f4.parse_elem("0,1");
    CHECK(x * x == f4.parse_elem("1,1")); // x^2 = x + 1

    CHECK_THROWS_AS((void)(f7.one() + q.one()), Error);
    CHECK_THROWS_AS((void)(f7.one() / f7.zero()), Error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(1234);
    for (const char* desc : {"Q", "F2", "F7", "F2^2:1,1,1", "F3^2:1,0,1"}) {
        FieldCtx F = FieldCtx::parse(desc);
        for (int i = 0; i < 10000; ++i) {
            FieldElem a = random_element(F, rng);
            FieldElem b = random_element(F, rng);
            FieldElem c = random_element(F, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + (-a) == F.zero());
            if (!a.is_zero()) REQUIRE(a * a.inverse() == F.one());
        }
    }
}

TEST_CASE("frobenius") {
    FieldCtx f5 = FieldCtx::prime(5);
    CHECK(frobenius(f5.from_int(2)) == f5.from_int(2)); // 32 mod 5 = 2

    FieldCtx f4 = FieldCtx::extension(2, {1, 1, 1});
    CHECK(frobenius(f4.parse_elem("0,1")) == f4.parse_elem("1,1")); // x^2 = x+1

    FieldCtx f3 = FieldCtx::prime(3);
    for (std::uint64_t i = 0; i < 3; ++i)
        for (std::uint64_t j = 0; j < 3; ++j) {
            FieldElem a = f3.element_at(i), b = f3.element_at(j);
            CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        }

    CHECK_THROWS_AS(frobenius(FieldCtx::rationals().one()), Error);
}

TEST_CASE("roots_in_field examples") {
    FieldCtx q = FieldCtx::rationals();
    // t^2 - 3t + 2 = (t-1)(t-2)
    auto r = roots_in_field(poly_from_ints(q, {2, -3, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == q.from_int(1));
    CHECK(r[0].second == 1);
    CHECK(r[1].first == q.from_int(2));
    CHECK(r[1].second == 1);

    FieldCtx f3 = FieldCtx::prime(3);
    CHECK(roots_in_field(poly_from_ints(f3, {1, 0, 1})).empty()); // t^2+1 irreducible

    FieldCtx f5 = FieldCtx::prime(5);
    auto r5 = roots_in_field(poly_from_ints(f5, {0, 0, 1})); // t^2
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].first == f5.zero());
    CHECK(r5[0].second == 2);

    // rational roots with denominators: (2t-1)(t+3) = 2t^2+5t-3
    auto rq = roots_in_field(poly_from_ints(q, {-3, 5, 2}));
    REQUIRE(rq.size() == 2);
    CHECK(rq[0].first == q.from_int(-3));
    CHECK(rq[1].first == q.parse_elem("1/2"));
}

TEST_CASE("roots_in_field exhaustive cross-check over small prime fields") {
    std::mt19937_64 rng(99);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
        FieldCtx F = FieldCtx::prime(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<FieldElem> cs;
            int deg = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < deg; ++i) cs.push_back(random_element(F, rng));
            cs.push_back(F.one()); // monic
            UniPoly f(F, cs);
            auto roots = roots_in_field(f);
            int total_mult = 0;
            for (const auto& [root, mult] : roots) {
                CHECK(f.eval(root).is_zero());
                total_mult += mult;
            }
            CHECK(total_mult <= f.degree());
            // every field point that is a root appears
            for (std::uint64_t i = 0; i < p; ++i) {
                FieldElem x = F.element_at(i);
                bool is_root = f.eval(x).is_zero();
                bool listed = false;
                for (const auto& [root, mult] : roots) listed |= (root == x);
                CHECK(is_root == listed);
            }
        }
    }
}

TEST_CASE("is_squarefree_split") {
    FieldCtx q = FieldCtx::rationals();
    CHECK(is_squarefree_split(poly_from_ints(q, {2, -3, 1})));  // (t-1)(t-2)
    CHECK_FALSE(is_squarefree_split(poly_from_ints(q, {1, -2, 1}))); // (t-1)^2
    FieldCtx f3 = FieldCtx::prime(3);
    CHECK_FALSE(is_squarefree_split(poly_from_ints(f3, {1, 0, 1}))); // no roots in field
    CHECK_THROWS_AS(is_squarefree_split(poly_from_ints(q, {1, 2})), Error); // not monic
}

TEST_CASE("unipoly divmod round trip") {
    std::mt19937_64 rng(7);
    FieldCtx F = FieldCtx::prime(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<FieldElem> ac, bc;
        for (int i = 0; i < 5; ++i) ac.push_back(random_element(F, rng));
        for (int i = 0; i < 3; ++i) bc.push_back(random_element(F, rng));
        UniPoly a(F, ac), b(F, bc);
        if (b.is_zero()) continue;
        auto [quot, rem] = UniPoly::divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("element enumeration and canonical strings") {
    FieldCtx f9 = FieldCtx::extension(3, {1, 0, 1}); // x^2 + 1 irreducible over GF(3)
    REQUIRE(f9.order() == 9);
    for (std::uint64_t i = 0; i < 9; ++i)
        for (std::uint64_t j = 0; j < 9; ++j)
            if (i != j) CHECK(f9.element_at(i) != f9.element_at(j));
    FieldElem e = f9.element_at(5); // digits 5 = 2 + 1*3 -> "2,1"
    CHECK(f9.to_string(e) == "2,1");
    CHECK(f9.parse_elem(f9.to_string(e)) == e);
}
