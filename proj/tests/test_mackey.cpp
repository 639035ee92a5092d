#include "doctest.h"

#include "gradekit/instances.hpp"
#include "gradekit/mackey.hpp"
#include "oracles.hpp"

using namespace gradekit;
using gradekit::oracle::one_dim_extensions;

namespace {

AlgebraPtr share(GradedAlgebra A) { return std::make_shared<const GradedAlgebra>(std::move(A)); }

}  // namespace

TEST_CASE("induced module of a trivially graded algebra is M")
{
    FieldSpec F = make_field(5);
    auto A = share(group_algebra(trivial_group(), F));
    auto base = share(base_algebra(*A));
    UngradedModule M = scalar_module(base, {F.one()});
    InducedModule I = induced_graded(A, M);
    CHECK(I.module.dim == 1);
    CHECK(I.iota == identity(1));
}

TEST_CASE("regular base module induces the algebra")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    UngradedModule R{q.base, 2, {q.base->left_mult(0), q.base->left_mult(1)}};
    InducedModule I = induced_graded(q.algebra, R);
    CHECK(I.module.dim == 8);
    validate(I.module);
    CHECK(localizing_radical(I.module, 0).module.dim == 0);
}

TEST_CASE("localizing radical away from the support")
{
    FieldSpec F = make_field(5);
    // A concentrated in degree e of Z2: induced module lives in degree e only, so nothing to kill
    auto A = share(elementary_matrix_algebra(F, cyclic(2), {0, 0}));
    auto base = share(base_algebra(*A));
    GradedSubmodule col = minimal_graded_ideal(base);
    UngradedModule M{base, col.module.dim, col.module.act};
    InducedModule W = associated(A, M);
    CHECK(W.module.dim == 2);
    // the radical at x kills all of W_e since A_x = 0
    GradedSubmodule t = localizing_radical(W.module, 1);
    CHECK(t.module.dim == 2);
}

TEST_CASE("Q8 sign module: inertia, obstruction and extension")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CHECK(inertia_of_base(q.algebra, q.sign).group.n == 4);
    ObstructionReport rep = obstruction(q.algebra, q.sign);
    CHECK(rep.invariant);
    CHECK(rep.strongly_graded);
    CHECK(rep.associated.module.dim == 4);
    CHECK(is_graded_simple(rep.associated.module));
    CohomologyGroup H = h2(klein4(), F);
    Cocycle2 omega{klein4(), F, rep.omega.table};
    CHECK(class_of(omega, H) == class_of(klein4_pauli(F), H));

    GroupHom pi = quotient_onto(quaternion8(), {0, 1}, klein4());
    CHECK(one_dim_extensions(F, trivial_cocycle(klein4(), F), pi) == 0);
    ExtendResult r = extend(q.algebra, q.sign);
    CHECK(r.status == ExtendStatus::Refuted);
    CHECK(extend_by_search(q.algebra, q.sign).status == ExtendStatus::Refuted);

    auto B = share(twist_algebra(cocycle_inverse(omega), *q.algebra));
    UngradedModule MB = rebase(q.sign, B);
    CHECK(one_dim_extensions(F, cocycle_inverse(omega), pi) > 0);
    ExtendResult rb = extend(B, MB);
    REQUIRE(rb.status == ExtendStatus::Extended);
    validate(*rb.module);
    CHECK(extend_by_search(B, MB).status == ExtendStatus::Extended);

    // trivial module of the center extends to FQ8 itself
    ExtendResult rt = extend(q.algebra, q.trivial);
    CHECK(rt.status == ExtendStatus::Extended);
}

TEST_CASE("extension truth table over all twists of the Q8 instance")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    TheoremATable t = verify_theorem_A(q.algebra, q.sign);
    CHECK(t.rows.size() == 8);
    CHECK(t.all_consistent());
    int extended = 0;
    for (auto& r : t.rows) extended += r.extended;
    CHECK(extended == 1);
}

TEST_CASE("graded Wedderburn decompositions")
{
    FieldSpec F = make_field(5);
    WedderburnReport a = wedderburn(share(twisted_group_algebra(klein4_pauli(F))));
    CHECK(a.n == 1);
    CHECK(a.inertia.group.n == 4);
    CHECK(a.kernel_dim == 0);
    CHECK(a.certificate_verified);

    WedderburnReport b = wedderburn(share(elementary_matrix_algebra(F, cyclic(2), {0, 1})));
    CHECK(b.n == 2);
    CHECK(b.inertia.group.n == 1);
    CHECK(b.kernel_dim == 0);
    CHECK(b.graded_simple);
    CHECK(b.certificate_verified);

    WedderburnReport c = wedderburn(q8_instance(F).algebra);
    CHECK(!c.graded_simple);
    CHECK(c.kernel_dim > 0);
    CHECK(c.surjective);

    WedderburnReport d = wedderburn(share(matrix_twisted_algebra(F, klein4(), {0, 1}, klein4_pauli(F), identity_hom(klein4()))));
    CHECK(d.n == 2);
    CHECK(d.inertia.group.n == 4);
    CHECK(d.certificate_verified);

    // graded product of the Pauli algebra with M_2 graded through Z2 -> klein4: supported on {e, a} only
    GroupHom emb{cyclic(2), klein4(), {0, 1}};
    GradedAlgebra M2 = regrade(elementary_matrix_algebra(F, cyclic(2), {0, 1}), emb);
    WedderburnReport p = wedderburn(share(graded_product(twisted_group_algebra(klein4_pauli(F)), M2)));
    CHECK(p.n == 2);
    CHECK(p.inertia.group.n == 1);
    CHECK(p.kernel_dim == 0);
    CHECK(p.certificate_verified);
}

TEST_CASE("splitting failure is loud")
{
    // F^alpha Z2 with v_x^2 = -1 over GF(3) is GF(9); trivially graded it is its own base
    FieldSpec F = make_field(3);
    Cocycle2 a = make_cocycle(cyclic(2), F, {Fq(1u), Fq(1u), Fq(1u), Fq(2u)});
    GroupHom f{cyclic(2), trivial_group(), {0, 0}};
    auto A = share(regrade(twisted_group_algebra(a), f));
    try {
        wedderburn(A);
        FAIL("expected SplittingFails");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SplittingFails);
    }
}

TEST_CASE("Mackey correspondence on the Q8 instance")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    ObstructionReport rep = obstruction(q.algebra, q.sign);
    Cocycle2 alpha{klein4(), F, rep.omega.table};
    auto B = share(twist_algebra(cocycle_inverse(alpha), *q.algebra));
    ExtendResult r = extend(B, rebase(q.sign, B));
    REQUIRE(r.module.has_value());
    Correspondence c = correspondence(q.algebra, q.sign, alpha, *r.module);
    CHECK(c.twisted_simples.size() == 1);
    CHECK(c.simples_above.size() == 1);
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0].dim == 2);
    CHECK(c.bijective);
}

TEST_CASE("End of twisted modules and of graded products")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    GradedModule W = associated(q.algebra, q.sign).module;
    CohomologyGroup H = h2(klein4(), F);
    for (auto& c : all_classes(H)) CHECK(endtwist_check(W, class_representative(H, c)).ok());

    GradedModule R = regular_module(share(twisted_group_algebra(klein4_pauli(F))));
    CHECK(end_tensor_check(W, R).ok());
    CHECK(end_tensor_check(W, W).ok());
}

TEST_CASE("twist equivariance of the obstruction")
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);
    ObstructionReport base = obstruction(q.algebra, q.sign);
    ClassCoords w = class_of(Cocycle2{klein4(), F, base.omega.table}, H);
    for (auto& c : all_classes(H)) {
        Cocycle2 alpha = class_representative(H, c);
        auto B = share(twist_algebra(alpha, *q.algebra));
        ObstructionReport t = obstruction(B, rebase(q.sign, B));
        ClassCoords got = class_of(Cocycle2{klein4(), F, t.omega.table}, H);
        CHECK(got == class_of(cocycle_product(alpha, class_representative(H, w)), H));
    }
}
