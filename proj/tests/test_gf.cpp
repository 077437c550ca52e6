#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agclcp/gf.hpp"

#include <set>

using namespace agclcp;

TEST_CASE("table moduli pin the arithmetic") {
    FieldPtr f4 = Field::make(2, 2);
    CHECK(f4->q() == 4);
    FieldElement w = f4->generator();
    CHECK(w * w == f4->parse("w+1")); // w^2 reduced by w^2+w+1

    FieldPtr f8 = Field::make(2, 3);
    FieldElement u = f8->generator();
    CHECK(u.pow(3) == f8->parse("w+1")); // w^3 reduced by w^3+w+1
    CHECK(u * (u * u) == f8->parse("w+1"));

    FieldPtr f16 = Field::make(2, 4);
    CHECK(f16->generator().pow(4) == f16->parse("w+1"));

    FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->q() == 9);
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);  // 4 not prime
    CHECK_THROWS_AS(Field::make(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument); // (w+1)^2
    CHECK_THROWS_AS(Field::make(2, 4, {1, 0, 0, 0, 1}), std::invalid_argument); // (w+1)^4
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), std::invalid_argument); // degree mismatch
    CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument); // beyond 2^16
}

TEST_CASE("inverse of w in GF(4) by exhaustive oracle") {
    FieldPtr f4 = Field::make(2, 2);
    FieldElement w = f4->generator();
    FieldElement found = f4->zero();
    for (auto y : f4->elements())
        if (w * y == f4->one()) found = y;
    CHECK(found == f4->parse("w^2"));
    CHECK(w.inv() == found);
}

TEST_CASE("elements() enumerates in index order") {
    FieldPtr f2 = Field::make(2, 1);
    auto e2 = f2->elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_one());

    FieldPtr f4 = Field::make(2, 2);
    auto e4 = f4->elements();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0] == f4->zero());
    CHECK(e4[1] == f4->one());
    CHECK(e4[2] == f4->generator());
    CHECK(e4[3] == f4->parse("w+1"));

    CHECK(Field::make(2, 3)->elements().size() == 8);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                        {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        FieldPtr f = Field::make(p, m);
        auto es = f->elements();
        for (const auto& a : es)
            for (const auto& b : es) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                // Frobenius
                CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
                for (const auto& c : es) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        for (const auto& a : es) {
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK(a + (-a) == f->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == f->one());
                CHECK(a.pow(f->q() - 1) == f->one());
            }
        }
    }
}

TEST_CASE("generator order is exactly q-1") {
    for (auto [p, m] : {std::pair{2, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        FieldPtr f = Field::make(p, m);
        FieldElement g = f->generator();
        std::set<uint32_t> seen;
        FieldElement acc = f->one();
        for (int k = 0; k < f->q() - 1; ++k) {
            seen.insert(acc.index());
            acc = acc * g;
        }
        CHECK(acc == f->one());
        CHECK((int)seen.size() == f->q() - 1); // powers hit every nonzero element
    }
}

TEST_CASE("GF(9) generator is primitive even though the variable is not") {
    FieldPtr f9 = Field::make(3, 2);
    // residue class of the variable has order 4 under w^2+1
    FieldElement var = f9->element(3);
    CHECK(var.pow(4) == f9->one());
    CHECK(var.pow(2) != f9->one());
    FieldElement g = f9->generator();
    for (int k = 1; k < 8; ++k) CHECK(g.pow(k) != f9->one());
    CHECK(g.pow(8) == f9->one());
}

TEST_CASE("text round trips and parse forms") {
    FieldPtr f4 = Field::make(2, 2);
    CHECK(f4->zero().str() == "0");
    CHECK(f4->one().str() == "1");
    CHECK(f4->generator().str() == "w");
    CHECK(f4->parse("w+1").str() == "w^2");
    CHECK(f4->parse("w^2") == f4->parse("1+w"));
    CHECK(f4->parse(" w ^ 2 ") == f4->parse("w^2"));

    FieldPtr f9 = Field::make(3, 2);
    for (auto e : f9->elements()) CHECK(f9->parse(e.str()) == e);
    CHECK(f9->parse("2w+1") == f9->parse("w") + f9->parse("w") + f9->one());

    FieldPtr f5 = Field::make(5, 1);
    CHECK(f5->element(3).str() == "3");
    CHECK(f5->parse("7") == f5->element(2));
    CHECK(f5->parse("w") == f5->generator());

    CHECK_THROWS_AS(f4->parse(""), std::invalid_argument);
    CHECK_THROWS_AS(f4->parse("q"), std::invalid_argument);
    CHECK_THROWS_AS(f4->parse("w^"), std::invalid_argument);
}

TEST_CASE("error paths: zero inverse and mixed fields") {
    FieldPtr f4 = Field::make(2, 2);
    FieldPtr f8 = Field::make(2, 3);
    CHECK_THROWS_AS(f4->zero().inv(), std::domain_error);
    CHECK_THROWS_AS(f4->zero().pow(-1), std::domain_error);
    CHECK_THROWS_AS(f4->one() + f8->one(), std::invalid_argument);
    CHECK_THROWS_AS(f4->generator() * f8->generator(), std::invalid_argument);
}

TEST_CASE("pow handles negative and large exponents") {
    FieldPtr f8 = Field::make(2, 3);
    FieldElement w = f8->generator();
    CHECK(w.pow(-1) == w.inv());
    CHECK(w.pow(7) == f8->one());
    CHECK(w.pow(7'000'000'000'021LL) == w.pow(7'000'000'000'021LL % 7));
    CHECK(f8->zero().pow(0) == f8->one());
    CHECK(f8->zero().pow(5) == f8->zero());
}

TEST_CASE("interning returns the same field instance") {
    CHECK(Field::make(2, 2).get() == Field::make(2, 2, {1, 1, 1}).get());
    CHECK(Field::make(2, 2).get() != Field::make(2, 3).get());
}
