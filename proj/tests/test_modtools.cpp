#include "doctest.h"

#include <random>

#include "gradekit/modtools.hpp"

using namespace gradekit;

namespace {

FqMatrix random_matrix(const FieldSpec& F, int m, std::mt19937_64& rng)
{
    FqMatrix X(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) X(i, j) = random_element(F, rng);
    return X;
}

// Simple iff every nonzero vector spins to the whole space.
bool simple_by_enumeration(const FieldSpec& F, const MatList& gens, int m)
{
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= F.q();
    for (long long t = 1; t < total; ++t) {
        FqVector v(m);
        long long u = t;
        for (int i = 0; i < m; ++i) {
            v(i) = Fq(static_cast<std::uint32_t>(u % F.q()));
            u /= F.q();
        }
        if (spin(F, gens, v).cols() < m) return false;
    }
    return true;
}

bool invariant(const FieldSpec& F, const MatList& gens, const FqMatrix& U)
{
    const int r = rank(F, U);
    for (const auto& g : gens) {
        FqMatrix both(U.rows(), 2 * U.cols());
        both << U, mul(F, g, U);
        if (rank(F, both) != r) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("find_submodule agrees with vector enumeration")
{
    std::mt19937_64 rng(7);
    for (int p : {2, 3}) {
        FieldSpec F = make_field(p);
        for (int m = 2; m <= 4; ++m)
            for (int trial = 0; trial < 40; ++trial) {
                MatList gens;
                int k = 1 + trial % 2;
                for (int i = 0; i < k; ++i) gens.push_back(random_matrix(F, m, rng));
                std::mt19937_64 r2(trial);
                auto U = find_submodule(F, gens, m, r2);
                CHECK(!U.has_value() == simple_by_enumeration(F, gens, m));
                if (U) {
                    CHECK(U->cols() > 0);
                    CHECK(U->cols() < m);
                    CHECK(invariant(F, gens, *U));
                }
            }
    }
}

TEST_CASE("simple module with a field of endomorphisms")
{
    // companion matrix of x^2 + x + 1 over GF(2): a copy of GF(4)
    FieldSpec F = make_field(2);
    FqMatrix C(2, 2);
    C << Fq(0u), Fq(1u), Fq(1u), Fq(1u);
    std::mt19937_64 rng(1);
    CHECK(!find_submodule(F, {C}, 2, rng).has_value());
    MatList D = commutant(F, {C}, 2);
    CHECK(D.size() == 2);
    CHECK(is_field(F, D));
    auto fs = composition_factors(F, {C}, 2, rng);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].end_dim == 2);
}

TEST_CASE("zero divisor in a split commutant")
{
    FieldSpec F = make_field(5);
    // scalar action on F^2: commutant is M_2(F)
    MatList gens{identity(2)};
    std::mt19937_64 rng(3);
    auto z = zero_divisor(F, commutant(F, gens, 2), rng, 64);
    REQUIRE(z.has_value());
    CHECK(!is_zero(*z));
    CHECK(!is_invertible(F, *z));
    auto U = find_submodule(F, gens, 2, rng);
    REQUIRE(U.has_value());
    CHECK(U->cols() == 1);
}

TEST_CASE("minimal polynomial and roots")
{
    FieldSpec F = make_field(7);
    FqMatrix X = zeros(3, 3);
    X(0, 0) = Fq(2u);
    X(1, 1) = Fq(2u);
    X(2, 2) = Fq(3u);
    auto mp = minimal_polynomial(F, X);
    // (x - 2)(x - 3) = x^2 - 5x + 6
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == Fq(6u));
    CHECK(mp[1] == Fq(2u));
    CHECK(mp[2] == Fq(1u));
    auto r = roots(F, mp);
    CHECK(r == std::vector<Fq>{Fq(2u), Fq(3u)});
}

TEST_CASE("quotient and restricted actions of a triangular module")
{
    FieldSpec F = make_field(3);
    FqMatrix g(3, 3);
    g << Fq(1u), Fq(2u), Fq(0u), Fq(0u), Fq(2u), Fq(1u), Fq(0u), Fq(0u), Fq(1u);
    FqMatrix U = zeros(3, 1);
    U(0, 0) = Fq(1u);
    CHECK(restrict_action(F, g, U)(0, 0) == Fq(1u));
    auto Q = quotient_basis(F, U, 3);
    CHECK(Q.free == std::vector<int>{1, 2});
    FqMatrix R = quotient_action(F, g, Q);
    CHECK(R(0, 0) == Fq(2u));
    CHECK(R(0, 1) == Fq(1u));
    CHECK(R(1, 1) == Fq(1u));
    std::mt19937_64 rng(5);
    auto fs = composition_factors(F, {g}, 3, rng);
    int total = 0;
    for (auto& f : fs) total += f.dim * f.multiplicity;
    CHECK(total == 3);
}
