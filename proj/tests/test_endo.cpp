#include "doctest.h"

#include <algorithm>

#include "gradekit/endo.hpp"
#include "gradekit/modtools.hpp"

using namespace gradekit;

namespace {

AlgebraPtr share(GradedAlgebra A) { return std::make_shared<const GradedAlgebra>(std::move(A)); }

GradedModule direct_sum(const GradedModule& W, const GradedModule& W2)
{
    GradedModule out{W.alg, W.dim + W2.dim, W.mdeg, {}};
    out.mdeg.insert(out.mdeg.end(), W2.mdeg.begin(), W2.mdeg.end());
    for (std::size_t i = 0; i < W.act.size(); ++i) {
        FqMatrix X = zeros(out.dim, out.dim);
        X.topLeftCorner(W.dim, W.dim) = W.act[i];
        X.bottomRightCorner(W2.dim, W2.dim) = W2.act[i];
        out.act.push_back(X);
    }
    return out;
}

std::vector<int> dims(const std::vector<SimpleModule>& s)
{
    std::vector<int> d;
    for (auto& m : s) d.push_back(m.module.dim);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("hom_graded on the free module of a group algebra")
{
    FieldSpec F = make_field(5);
    GradedModule W = regular_module(share(group_algebra(klein4(), F)));
    for (int h = 0; h < 4; ++h) CHECK(hom_graded(W, W, h).size() == 1);
    GradedModule Z{W.alg, 0, {}, std::vector<FqMatrix>(4, FqMatrix(0, 0))};
    CHECK(hom_graded(Z, W, 0).empty());
    // suspension moves the degree: Hom^e(W(h), W) = Hom^h(W, W) in size
    GradedModule S = suspend(W, 2);
    CHECK(hom_graded(W, S, 0).size() == hom_graded(W, W, 2).size());
}

TEST_CASE("end of a free twisted module recovers the cocycle")
{
    FieldSpec F = make_field(5);
    auto H = h2(klein4(), F);
    for (auto& c : all_classes(H)) {
        Cocycle2 a = class_representative(H, c);
        GradedModule W = regular_module(share(twisted_group_algebra(a)));
        GradedEndAlgebra E = end_graded(W);
        validate(E.alg);
        // intertwining and composition convention
        for (std::size_t x = 0; x < E.matrices.size(); ++x) {
            for (auto& act : W.act) CHECK(mul(F, act, E.matrices[x]) == mul(F, E.matrices[x], act));
            for (std::size_t y = 0; y < E.matrices.size(); ++y) {
                FqMatrix lhs = compose(F, E.matrices[x], E.matrices[y]);
                FqMatrix rhs = zeros(4, 4);
                FqVector p = E.alg.basis_product(static_cast<int>(x), static_cast<int>(y));
                for (int k = 0; k < E.alg.dim; ++k) rhs = add(F, rhs, scale(F, p(k), E.matrices[k]));
                CHECK(lhs == rhs);
            }
        }
        TwistedCocycle t = extract_twisted_cocycle(E.alg);
        CHECK(t.support.group == klein4());
        CHECK(cohomologous(t.alpha, a).has_value());
        CHECK(is_abs_graded_simple(W));
    }
}

TEST_CASE("extract_twisted_cocycle failures")
{
    FieldSpec F = make_field(5);
    GradedAlgebra A = quotient_grading(group_algebra(quaternion8(), F), {0, 1});
    try {
        extract_twisted_cocycle(A);
        FAIL("expected ComponentNotLine");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ComponentNotLine);
    }
    GradedAlgebra D = group_algebra(cyclic(2), F);
    D.group = cyclic(4);
    D.deg = {0, 1};
    try {
        extract_twisted_cocycle(D);
        FAIL("expected SupportNotSubgroup");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SupportNotSubgroup);
    }
    TwistedCocycle t = extract_twisted_cocycle(group_algebra(cyclic(3), F));
    CHECK(class_of(t.alpha, h2(cyclic(3), F)).is_zero());
}

TEST_CASE("graded simplicity")
{
    FieldSpec F = make_field(5);
    GradedModule W = regular_module(share(twisted_group_algebra(klein4_pauli(F))));
    CHECK(is_graded_simple(W));
    GradedModule W2 = direct_sum(W, W);
    auto s = graded_simplicity(W2);
    CHECK(!s.simple);
    REQUIRE(s.witness.has_value());
    GradedSubmodule sub = graded_submodule(W2, *s.witness);
    validate(sub.module);
    CHECK(sub.module.dim > 0);
    CHECK(sub.module.dim < 8);
    GradedModule q = graded_quotient(W2, *s.witness);
    validate(q);
    CHECK(q.dim + sub.module.dim == 8);
    CHECK_THROWS_AS(is_abs_graded_simple(W2), Error);

    // the base F[Z2] splits over GF(5), so the regular module of FQ8 graded by K4 decomposes
    GradedModule R = regular_module(share(quotient_grading(group_algebra(quaternion8(), F), {0, 1})));
    CHECK(is_graded_simple(R) == false);
    CHECK(is_graded_simple(twisted_group_algebra(klein4_pauli(F))));
    CHECK(!is_graded_simple(quotient_grading(group_algebra(quaternion8(), F), {0, 1})));
}

TEST_CASE("graded Schur on graded simple modules")
{
    FieldSpec F = make_field(5);
    auto A = share(elementary_matrix_algebra(F, cyclic(2), {0, 1}));
    GradedSubmodule col = minimal_graded_ideal(A);
    CHECK(col.module.dim == 2);
    GradedEndAlgebra E = end_graded(col.module);
    for (auto& X : E.matrices) CHECK(is_invertible(F, X));
    CHECK(inertia(col.module).group.n == 1);
    CHECK(inertia_bruteforce(col.module).group.n == 1);
}

TEST_CASE("inertia of free modules and suspension sums")
{
    FieldSpec F = make_field(5);
    auto A = share(twisted_group_algebra(klein4_pauli(F)));
    GradedModule W = regular_module(A);
    CHECK(inertia(W).group.n == 4);
    CHECK(inertia_bruteforce(W).group.n == 4);

    auto M = share(elementary_matrix_algebra(F, klein4(), {0, 1}));
    GradedModule col = minimal_graded_ideal(M).module;
    GradedModule sum = direct_sum(col, suspend(col, 1));
    auto I = inertia_bruteforce(sum).elements();
    CHECK(std::find(I.begin(), I.end(), 1) != I.end());
}

TEST_CASE("left representation kernel")
{
    FieldSpec F = make_field(5);
    auto A = share(group_algebra(cyclic(2), F));
    CHECK(left_rep(regular_module(A)).kernel.cols() == 0);
    // sign module: 1 acts as 1, x as -1; kernel spanned by 1 + x
    GradedModule sign{A, 1, {0}, {identity(1), FqMatrix::Constant(1, 1, F.neg(F.one()))}};
    LeftRep L = left_rep(sign);
    CHECK(L.kernel.cols() == 1);
}

TEST_CASE("simple module census")
{
    FieldSpec F5 = make_field(5);
    auto q8 = simple_modules(share(group_algebra(quaternion8(), F5)));
    CHECK(dims(q8) == std::vector<int>{1, 1, 1, 1, 2});
    for (auto& s : q8) {
        validate(s.module);
        CHECK(s.end_dim == 1);
    }
    for (std::size_t i = 0; i < q8.size(); ++i)
        for (std::size_t j = i + 1; j < q8.size(); ++j)
            if (q8[i].module.dim == q8[j].module.dim)
                CHECK(intertwiners(F5, q8[i].module.act, q8[j].module.act, q8[i].module.dim, q8[j].module.dim).empty());

    auto z2 = simple_modules(share(group_algebra(cyclic(2), make_field(3))));
    CHECK(dims(z2) == std::vector<int>{1, 1});

    auto pauli = simple_modules(share(twisted_group_algebra(klein4_pauli(F5))));
    REQUIRE(pauli.size() == 1);
    CHECK(pauli[0].module.dim == 2);
    CHECK(pauli[0].multiplicity == 2);

    try {
        simple_modules(share(group_algebra(cyclic(3), make_field(3))));
        FAIL("expected NotSemisimple");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSemisimple);
    }
}
