#include "doctest.h"

#include "gradekit/ffield.hpp"

using namespace gradekit;

TEST_CASE("prime fields")
{
    FieldSpec F5 = make_field(5);
    CHECK(F5.q() == 5);
    CHECK(F5.mul(Fq(2), Fq(3)) == Fq(1));
    FieldSpec F7 = make_field(7);
    CHECK(F7.inv(Fq(2)) == Fq(4));
    FieldSpec F2 = make_field(2);
    CHECK(!F2.has_generator());
    CHECK_THROWS_AS(primitive_root(F2), Error);
    CHECK(F2.dlog(Fq(1)) == 0);
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(make_field(6), Error);
    CHECK_THROWS_AS(make_field(2, 17), Error);
    CHECK_THROWS_AS(make_field(3, 2, std::vector<int>{2, 0, 1}), Error);  // x^2 + 2 = (x+1)(x+2)
    try {
        make_field(4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPrime);
    }
}

TEST_CASE("GF(9) default modulus and reduction")
{
    FieldSpec F = make_field(3, 2);
    // Oracle: scan monic quadratics in code order and keep the first without a root.
    std::vector<int> expect;
    for (int t = 0; t < 9 && expect.empty(); ++t) {
        int c0 = t % 3, c1 = t / 3;
        bool root = false;
        for (int x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
        if (!root) expect = {c0, c1, 1};
    }
    CHECK(F.modulus() == expect);
    CHECK(F.modulus() == std::vector<int>{1, 0, 1});
    Fq x = F.parse("x");
    CHECK(F.mul(x, x) == Fq(2));
    CHECK(F.format(F.parse("2x+1")) == "2x+1");
    CHECK(F.parse("x+4") == F.parse("x+1"));
}

TEST_CASE("primitive roots and dlog")
{
    auto order = [](const FieldSpec& F, Fq g) {
        Fq x = g;
        int k = 1;
        while (x != F.one()) {
            x = F.mul(x, g);
            ++k;
        }
        return k;
    };
    CHECK(primitive_root(make_field(7)) == Fq(3));
    CHECK(primitive_root(make_field(5)) == Fq(2));
    CHECK(primitive_root(make_field(3)) == Fq(2));
    FieldSpec F7 = make_field(7);
    CHECK(F7.dlog(Fq(1)) == 0);
    CHECK(F7.dlog(Fq(3)) == 1);
    CHECK(make_field(5).dlog(Fq(4)) == 2);
    for (int p : {2, 3, 5, 7}) {
        for (int k : {1, 2, 3}) {
            FieldSpec F = make_field(p, k);
            if (F.q() > 64) continue;
            if (F.q() > 2) CHECK(order(F, F.generator()) == int(F.q()) - 1);
            const std::uint32_t m = F.q() - 1;
            for (std::uint32_t a = 1; a < F.q(); ++a) {
                CHECK(F.mul(Fq(a), F.inv(Fq(a))) == F.one());
                CHECK(F.pow(Fq(a), m) == F.one());
                for (std::uint32_t b = 1; b < F.q(); ++b)
                    CHECK(F.dlog(F.mul(Fq(a), Fq(b))) == (F.dlog(Fq(a)) + F.dlog(Fq(b))) % m);
            }
        }
    }
}

TEST_CASE("extension field addition matches coefficient arithmetic")
{
    FieldSpec F = make_field(3, 3);
    for (std::uint32_t a = 0; a < F.q(); ++a)
        for (std::uint32_t b = 0; b < F.q(); ++b) {
            auto ca = F.coeffs(Fq(a)), cb = F.coeffs(Fq(b));
            std::vector<int> s(3);
            for (int i = 0; i < 3; ++i) s[i] = (ca[i] + cb[i]) % 3;
            CHECK(F.add(Fq(a), Fq(b)) == F.from_coeffs(s));
        }
    CHECK_THROWS_AS(arith(F, ArithOp::Add, Fq(27), Fq(0)), Error);
    CHECK_THROWS_AS(F.inv(Fq(0)), Error);
}

TEST_CASE("field literals")
{
    CHECK(parse_field("GF(9)").k() == 2);
    CHECK(parse_field("GF(3^2)").q() == 9);
    CHECK(parse_field("GF(5)").p() == 5);
    CHECK_THROWS_AS(parse_field("GF(6)"), Error);
    CHECK_THROWS_AS(parse_field("F5"), Error);
}
