#include "doctest.h"

#include <random>

#include "gradekit/smith.hpp"

using namespace gradekit;
using IMat = IntMatrix<long long>;
using IVec = IntVector<long long>;

namespace {

IMat mulmod(const IMat& A, const IMat& B, long long m)
{
    IMat C = A * B;
    if (m)
        for (Eigen::Index i = 0; i < C.size(); ++i) C.data()[i] = mod_reduce(C.data()[i], m);
    return C;
}

bool is_identity_mod(const IMat& A, long long m)
{
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (mod_reduce(A(i, j) - (i == j), m) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("integer smith form")
{
    IMat A(3, 3);
    A << 2, 4, 4, -6, 6, 12, 10, -4, -16;
    auto S = smith_normal_form<long long>(A);
    CHECK(S.diagonal() == std::vector<long long>{2, 6, 12});
    CHECK(S.P * A * S.Q == S.D);
    CHECK(is_identity_mod(S.P * S.Pinv, 0));
    CHECK(is_identity_mod(S.Q * S.Qinv, 0));
}

TEST_CASE("smith form modulo m on random matrices")
{
    std::mt19937_64 rng(7);
    for (long long m : {4LL, 6LL, 12LL, 30LL}) {
        for (int trial = 0; trial < 20; ++trial) {
            int r = 1 + rng() % 5, c = 1 + rng() % 5;
            IMat A(r, c);
            for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = rng() % m;
            auto S = smith_normal_form<long long>(A, m);
            CHECK(mulmod(mulmod(S.P, A, m), S.Q, m) == S.D);
            CHECK(is_identity_mod(mulmod(S.P, S.Pinv, m), m));
            CHECK(is_identity_mod(mulmod(S.Q, S.Qinv, m), m));
            auto d = S.diagonal();
            for (std::size_t i = 0; i + 1 < d.size(); ++i)
                if (d[i] != 0) CHECK(m % d[i] == 0);
            // kernel size against brute force when small
            long long total = 1;
            for (int j = 0; j < c; ++j) total *= m;
            if (total > 50000) continue;
            long long count = 0;
            for (long long t = 0; t < total; ++t) {
                IVec x(c);
                long long u = t;
                for (int j = 0; j < c; ++j) {
                    x(j) = u % m;
                    u /= m;
                }
                IVec y = A * x;
                bool zero = true;
                for (int i = 0; i < r; ++i) zero &= mod_reduce(y(i), m) == 0;
                count += zero;
            }
            auto K = kernel_mod<long long>(A, m);
            long long ksize = 1;
            for (auto o : K.orders) ksize *= o;
            CHECK(ksize == count);
        }
    }
}

TEST_CASE("solve modulo m")
{
    IMat A(2, 2);
    A << 2, 0, 0, 3;
    IVec b(2);
    b << 4, 3;
    auto x = solve_mod<long long>(A, b, 6);
    REQUIRE(x);
    CHECK(mod_reduce(2 * (*x)(0), 6LL) == 4);
    CHECK(mod_reduce(3 * (*x)(1), 6LL) == 3);
    b << 1, 0;
    CHECK(!solve_mod<long long>(A, b, 6));
}

TEST_CASE("streaming echelon keeps solutions")
{
    ModEchelon<long long> e(2, 6);
    e.add({2, 0}, 4);
    e.add({4, 0}, 2);
    e.add({0, 3}, 3);
    CHECK(!e.inconsistent());
    e.add({0, 0}, 1);
    CHECK(e.inconsistent());
}
