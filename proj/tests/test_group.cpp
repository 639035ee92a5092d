#include "doctest.h"

#include <algorithm>
#include <map>

#include "gradekit/group.hpp"

using namespace gradekit;

namespace {

std::map<int, int> order_census(const FiniteGroup& G)
{
    std::map<int, int> c;
    for (int g = 0; g < G.n; ++g) ++c[G.element_order(g)];
    return c;
}

}  // namespace

TEST_CASE("table validation")
{
    auto Z2 = group_from_table({"e", "x"}, {{0, 1}, {1, 0}});
    CHECK(Z2.n == 2);
    CHECK(Z2.inv[1] == 1);
    CHECK_THROWS_AS(group_from_table({"e", "x"}, {{0, 1}, {0, 1}}), Error);
    try {
        group_from_table({"e", "x"}, {{0, 1}, {0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLatinSquare);
    }
    // x*y = -x-y mod 3 is a Latin square without identity
    try {
        group_from_table({"a", "b", "c"}, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoIdentity);
    }
    CHECK_THROWS_AS(cyclic(65), Error);
}

TEST_CASE("builtins")
{
    auto Q = quaternion8();
    CHECK(Q.labels == std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    int m1 = Q.index_of("-1"), i = Q.index_of("i"), j = Q.index_of("j"), k = Q.index_of("k");
    CHECK(Q.mul(i, i) == m1);
    CHECK(Q.mul(j, j) == m1);
    CHECK(Q.mul(k, k) == m1);
    CHECK(Q.mul(Q.mul(i, j), k) == m1);
    // center by direct commutation scan
    std::vector<int> z;
    for (int g = 0; g < 8; ++g) {
        bool c = true;
        for (int h = 0; h < 8; ++h) c &= Q.mul(g, h) == Q.mul(h, g);
        if (c) z.push_back(g);
    }
    CHECK(z.size() == 2);
    CHECK(center(Q) == z);

    auto V = direct_product(cyclic(2), cyclic(2));
    CHECK(iso_search(V, klein4()).has_value());
    CHECK(!iso_search(cyclic(4), klein4()).has_value());
    CHECK(symmetric3().n == 6);
    CHECK(dihedral(4).n == 8);
    CHECK(order_census(dihedral(4)) != order_census(Q));
}

TEST_CASE("subgroups and quotients")
{
    auto Q = quaternion8();
    auto Z = subgroup(Q, {Q.index_of("-1")});
    CHECK(Z.group.n == 2);
    CHECK(is_hom(Z.embedding));
    CHECK(subgroup(Q, {}).group.n == 1);
    CHECK(subgroup(klein4(), {1}).group.n == 2);

    auto Qz = quotient(Q, center(Q));
    CHECK(Qz.group.n == 4);
    CHECK(is_hom(Qz.projection));
    CHECK(is_surjective(Qz.projection));
    for (int g = 1; g < 4; ++g) CHECK(Qz.group.element_order(g) == 2);
    auto iso = iso_search(Qz.group, klein4());
    REQUIRE(iso);
    // the kernel of the projection is N
    std::vector<int> ker;
    for (int g = 0; g < 8; ++g)
        if (Qz.projection(g) == Qz.group.e) ker.push_back(g);
    CHECK(ker == center(Q));

    CHECK(quotient(cyclic(4), {0, 2}).group.n == 2);
    CHECK(quotient(Q, closure(Q, {0, 1, 2, 3, 4, 5, 6, 7})).group.n == 1);
    CHECK_THROWS_AS(quotient(symmetric3(), closure(symmetric3(), {1})), Error);
}

TEST_CASE("pullbacks")
{
    auto Z4 = cyclic(4);
    auto pi = quotient(Z4, {0, 2}).projection;
    auto pb = pullback(pi, pi);
    CHECK(pb.group.n == 8);
    for (int x = 0; x < pb.group.n; ++x) CHECK(pi(pb.pr1(x)) == pi(pb.pr2(x)));
    CHECK(is_hom(pb.pr1));
    CHECK(is_hom(pb.pr2));
    // census of Z4 x_{Z2} Z4 = Z4 x Z2: orders 1,2,2,2,4,4,4,4
    std::map<int, int> expect{{1, 1}, {2, 3}, {4, 4}};
    CHECK(order_census(pb.group) == expect);

    auto diag = pullback(identity_hom(cyclic(2)), identity_hom(cyclic(2)));
    CHECK(diag.group.n == 2);

    auto Q = quaternion8();
    auto proj = quotient(Q, center(Q)).projection;
    auto graph = pullback(proj, identity_hom(proj.target));
    CHECK(graph.group.n == 8);
    CHECK(iso_search(graph.group, Q).has_value());

    CHECK_THROWS_AS(pullback(pi, identity_hom(cyclic(3))), Error);
}

TEST_CASE("inner automorphisms")
{
    auto Q = quaternion8();
    auto c = inner_aut(Q, Q.index_of("i"));
    CHECK(c[Q.index_of("j")] == Q.index_of("-j"));
    CHECK(c[Q.index_of("k")] == Q.index_of("-k"));
    CHECK(c[Q.index_of("i")] == Q.index_of("i"));
    auto S = symmetric3();
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            auto a = inner_aut(S, g), b = inner_aut(S, h), ab = inner_aut(S, S.mul(g, h));
            for (int x = 0; x < 6; ++x) CHECK(a[b[x]] == ab[x]);
        }
    auto id = inner_aut(klein4(), 3);
    for (int x = 0; x < 4; ++x) CHECK(id[x] == x);
}
