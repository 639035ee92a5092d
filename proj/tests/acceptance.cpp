// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradekit/instances.hpp"
#include "gradekit/mackey.hpp"
#include "gradekit/modtools.hpp"
#include "oracles.hpp"

using namespace gradekit;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok) throw Failure{what};
}

AlgebraPtr share(GradedAlgebra A) { return std::make_shared<const GradedAlgebra>(std::move(A)); }

std::string coords(const ClassCoords& c)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.r.size(); ++i) os << (i ? "," : "") << c.r[i];
    os << ')';
    return os.str();
}

// Class of a cocycle whose table is indexed like klein4().
ClassCoords k4_class(const Cocycle2& c, const CohomologyGroup& H)
{
    return class_of(Cocycle2{klein4(), c.field, c.table}, H);
}

bool same_module(const GradedModule& a, const GradedModule& b)
{
    return *a.alg == *b.alg && a.dim == b.dim && a.mdeg == b.mdeg && a.act == b.act;
}

// --- 1 -----------------------------------------------------------------------

std::string h2_oracles()
{
    struct Case {
        FiniteGroup G;
        int q;
    };
    std::ostringstream os;
    for (const Case& c : {Case{cyclic(2), 3}, Case{cyclic(4), 5}, Case{klein4(), 5}, Case{symmetric3(), 7}}) {
        FieldSpec F = make_field(c.q);
        CohomologyGroup H = h2(c.G, F);
        oracle::OracleResult o = oracle::oracle_h2(c.G, F);
        expect(H.order == o.order, "order differs from enumeration");
        expect(oracle::census_of(H.invariant_factors) == o.census, "class orders differ from enumeration");
        for (std::size_t i = 0; i + 1 < H.invariant_factors.size(); ++i)
            expect(H.invariant_factors[i + 1] % H.invariant_factors[i] == 0, "invariant factors not a divisor chain");
        os << " |H2|=" << H.order;
    }
    return os.str();
}

// --- 2 -----------------------------------------------------------------------

std::string unit_group_law()
{
    FieldSpec F = make_field(5);
    CohomologyGroup H = h2(klein4(), F);
    auto classes = all_classes(H);
    int pairs = 0;
    for (auto& c1 : classes)
        for (auto& c2 : classes) {
            Cocycle2 a = class_representative(H, c1), b = class_representative(H, c2);
            TwistedCocycle t = extract_twisted_cocycle(graded_product(twisted_group_algebra(a), twisted_group_algebra(b)));
            expect(t.support.group.n == 4, "support of the product is not klein4");
            expect(cohomologous(Cocycle2{klein4(), F, t.alpha.table}, cocycle_product(a, b)).has_value(),
                   "extracted cocycle not cohomologous to the product");
            ++pairs;
        }
    return " pairs=" + std::to_string(pairs);
}

// --- 3 -----------------------------------------------------------------------

// graded_product(F^c Gamma, F^c2 Gamma'), both graded through pi, pi2, against F^{c x c2} of the pullback.
void check_pullback(const Cocycle2& c, const GroupHom& pi, const Cocycle2& c2, const GroupHom& pi2)
{
    Pullback pb = pullback(pi, pi2);
    GradedAlgebra A = regrade(twisted_group_algebra(c), pi);
    GradedAlgebra A2 = regrade(twisted_group_algebra(c2), pi2);
    GradedAlgebra P = graded_product(A, A2);
    GroupHom down{pb.group, pi.target, {}};
    for (int x = 0; x < pb.group.n; ++x) down.map.push_back(pi(pb.pr1(x)));
    GradedAlgebra T = regrade(twisted_group_algebra(pullback_cocycle(c, c2, pb)), down);
    auto pairs = product_pairs(A, A2);
    expect(static_cast<int>(pairs.size()) == pb.group.n, "graded product and pullback differ in dimension");
    // basis element k of P is v_gamma (x) v_gamma'; find the pullback element with that pair
    std::vector<int> to(pairs.size(), -1);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        for (int x = 0; x < pb.group.n; ++x)
            if (pb.pairs[x] == pairs[k]) to[k] = x;
    for (int i = 0; i < P.dim; ++i) {
        expect(to[i] >= 0, "product basis element outside the pullback");
        expect(P.deg[i] == T.deg[to[i]], "degrees differ under the pairing");
        for (int j = 0; j < P.dim; ++j)
            for (int k = 0; k < P.dim; ++k)
                expect(P.c(i, j, k) == T.c(to[i], to[j], to[k]), "structure constants differ under the pairing");
    }
}

std::string pullback_theorem()
{
    FieldSpec F = make_field(5);
    GroupHom p4 = quotient_onto(cyclic(4), {0, 2}, cyclic(2));
    CohomologyGroup H4 = h2(cyclic(4), F);
    int n = 0;
    for (auto& c1 : all_classes(H4))
        for (auto& c2 : all_classes(H4)) {
            check_pullback(class_representative(H4, c1), p4, class_representative(H4, c2), p4);
            ++n;
        }
    GroupHom pi = quotient_onto(quaternion8(), {0, 1}, klein4());
    CohomologyGroup HK = h2(klein4(), F);
    int m = 0;
    for (auto& c : all_classes(HK)) {
        check_pullback(trivial_cocycle(quaternion8(), F), pi, class_representative(HK, c), identity_hom(klein4()));
        ++m;
    }
    return " Z4 pairs=" + std::to_string(n) + " Q8->K4 classes=" + std::to_string(m);
}

// --- 4 -----------------------------------------------------------------------

std::string q8_pipeline()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);
    GroupHom pi = quotient_onto(quaternion8(), {0, 1}, klein4());

    expect(inertia_of_base(q.algebra, q.sign).group.n == 4, "inertia is not klein4");
    ObstructionReport rep = obstruction(q.algebra, q.sign);
    ClassCoords w = k4_class(rep.omega, H);
    expect(!w.is_zero(), "obstruction class is trivial");
    expect(w == class_of(klein4_pauli(F), H), "obstruction class is not the Pauli class");
    expect(class_of(cocycle_power(class_representative(H, w), 2), H).is_zero(), "obstruction class not of order 2");

    // refusal on A, with the brute-force oracle and the skew-system search agreeing
    expect(oracle::one_dim_extensions(F, trivial_cocycle(klein4(), F), pi) == 0, "oracle finds an extension on A");
    expect(extend(q.algebra, q.sign).status == ExtendStatus::Refuted, "extend does not refuse on A");
    expect(extend_by_search(q.algebra, q.sign).status == ExtendStatus::Refuted, "skew search does not refuse on A");

    Cocycle2 alpha = class_representative(H, w);
    auto B = share(twist_algebra(cocycle_inverse(alpha), *q.algebra));
    UngradedModule MB = rebase(q.sign, B);
    expect(oracle::one_dim_extensions(F, cocycle_inverse(alpha), pi) > 0, "oracle finds no extension on the twist");
    ExtendResult r = extend(B, MB);
    expect(r.status == ExtendStatus::Extended && r.module.has_value(), "extend fails on the twist");
    validate(*r.module);
    UngradedModule back = restrict_to_base(*r.module, share(base_algebra(*B)));
    expect(back.act == MB.act, "extension does not restrict to M");
    expect(extend_by_search(B, MB).status == ExtendStatus::Extended, "skew search fails on the twist");

    TheoremATable t = verify_theorem_A(q.algebra, q.sign);
    expect(t.rows.size() == static_cast<std::size_t>(H.order), "truth table misses classes");
    expect(t.all_consistent(), "truth table inconsistent");
    int extended = 0;
    for (auto& row : t.rows) {
        bool oracle_says = oracle::one_dim_extensions(F, cocycle_inverse(class_representative(H, row.alpha_class)), pi) > 0;
        expect(row.extended == oracle_says, "truth table row disagrees with the oracle at " + coords(row.alpha_class));
        expect(row.extended == (row.alpha_class == w), "extension at a class other than the obstruction");
        extended += row.extended;
    }
    expect(extended == 1, "truth table does not have exactly one extendable class");
    return " omega=" + coords(w) + " rows=" + std::to_string(t.rows.size());
}

// --- 5 -----------------------------------------------------------------------

std::string omega_monoid()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);

    struct Instance {
        AlgebraPtr A;
        UngradedModule M;
    };
    std::vector<Instance> pool{{q.algebra, q.trivial}, {q.algebra, q.sign}};
    for (auto& c : all_classes(H)) {
        auto B = share(twist_algebra(class_representative(H, c), *q.algebra));
        pool.push_back({B, rebase(q.sign, B)});
    }

    std::vector<GradedModule> W;
    std::vector<ClassCoords> cls;
    for (auto& in : pool) {
        ObstructionReport r = obstruction(in.A, in.M);
        W.push_back(r.associated.module);
        cls.push_back(k4_class(r.omega, H));
        expect(k4_class(end_cocycle(W.back()), H) == cls.back(), "end_cocycle disagrees with obstruction");
    }
    expect(cls[0].is_zero(), "trivial module has a nontrivial class");

    auto times = [&](const ClassCoords& a, const ClassCoords& b) {
        return class_of(cocycle_product(class_representative(H, a), class_representative(H, b)), H);
    };
    int pairs = 0;
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = 0; j < W.size(); ++j) {
            ClassCoords got = k4_class(end_cocycle(module_product(W[i], W[j])), H);
            expect(got == times(cls[i], cls[j]), "omega not multiplicative on a pair");
            ++pairs;
        }
    expect(k4_class(end_cocycle(module_product(W[1], W[1])), H).is_zero(), "Q8 class squared is not trivial");

    // surjectivity: twisting by theta * omega^{-1} reaches theta
    ClassCoords w = cls[1];
    Cocycle2 winv = cocycle_inverse(class_representative(H, w));
    for (auto& theta : all_classes(H)) {
        auto B = share(twist_algebra(cocycle_product(class_representative(H, theta), winv), *q.algebra));
        expect(k4_class(obstruction(B, rebase(q.sign, B)).omega, H) == theta, "twist misses a target class");
    }

    // twist equivariance on every instance
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (auto& c : all_classes(H)) {
            Cocycle2 a = class_representative(H, c);
            auto B = share(twist_algebra(a, *pool[i].A));
            ClassCoords got = k4_class(obstruction(B, rebase(pool[i].M, B)).omega, H);
            expect(got == times(c, cls[i]), "twist equivariance fails");
        }

    // iota_G injective on the two base modules: distinct e-components
    expect(intertwiners(F, q.sign.act, q.trivial.act, 1, 1).empty(), "sign and trivial modules are isomorphic");
    return " instances=" + std::to_string(pool.size()) + " pairs=" + std::to_string(pairs);
}

// --- 6 -----------------------------------------------------------------------

std::string twist_suspension()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);
    auto classes = all_classes(H);

    std::vector<GradedModule> Ws{associated(q.algebra, q.sign).module, associated(q.algebra, q.trivial).module,
                                 regular_module(q.algebra)};
    for (auto& c : classes) Ws.push_back(regular_module(share(twisted_group_algebra(class_representative(H, c)))));
    int checks = 0;
    for (auto& W : Ws) {
        expect(W.dim <= 8, "instance too large");
        for (auto& c : classes) {
            EndTwistCheck e = endtwist_check(W, class_representative(H, c));
            expect(e.maps_into && e.bijective && e.multiplicative, "End twist identity fails");
            expect(e.scalar_law, "scalar law fails");
            ++checks;
        }
    }
    for (auto& W : Ws)
        for (auto& W2 : Ws)
            for (int h = 0; h < 4; ++h)
                expect(same_module(suspend(module_product(W, W2), h), module_product(suspend(W, h), suspend(W2, h))),
                       "suspension does not commute with the product");

    for (const UngradedModule* M : {&q.sign, &q.trivial}) {
        std::vector<int> I = inertia_of_base(q.algebra, *M).elements();
        for (auto& c : classes) {
            auto B = share(twist_algebra(class_representative(H, c), *q.algebra));
            expect(inertia_of_base(B, rebase(*M, B)).elements() == I, "inertia changes under a twist");
        }
    }
    return " modules=" + std::to_string(Ws.size()) + " twist checks=" + std::to_string(checks);
}

// --- 7 -----------------------------------------------------------------------

std::string wedderburn_suite()
{
    FieldSpec F = make_field(5);
    WedderburnReport a = wedderburn(share(twisted_group_algebra(klein4_pauli(F))));
    expect(a.n == 1 && a.inertia.group.n == 4, "(a) wrong n or I");
    expect(a.graded_simple && a.kernel_dim == 0, "(a) kernel not zero");
    expect(a.certificate_verified, "(a) certificate not verified");

    WedderburnReport b = wedderburn(share(elementary_matrix_algebra(F, cyclic(2), {0, 1})));
    expect(b.n == 2 && b.inertia.group.n == 1, "(b) wrong n or I");
    expect(b.omega_class.is_zero(), "(b) omega not trivial");
    expect(b.graded_simple && b.kernel_dim == 0, "(b) kernel not zero");
    expect(b.certificate_verified, "(b) certificate not verified");

    WedderburnReport d = wedderburn(share(matrix_twisted_algebra(F, klein4(), {0, 1}, klein4_pauli(F), identity_hom(klein4()))));
    expect(d.n == 2 && d.inertia.group.n == 4, "M_2 (x) F^pauli: wrong n or I");
    expect(d.graded_simple && d.kernel_dim == 0 && d.certificate_verified, "M_2 (x) F^pauli: no certificate");

    WedderburnReport c = wedderburn(q8_instance(F).algebra);
    expect(!c.graded_simple, "(c) control reported graded simple");
    expect(c.kernel_dim > 0, "(c) control kernel is zero");
    expect(c.surjective, "(c) control map not surjective");
    return " kernel(FQ8/K4)=" + std::to_string(c.kernel_dim);
}

// --- 8 -----------------------------------------------------------------------

std::string correspondence_suite()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    ObstructionReport rep = obstruction(q.algebra, q.sign);
    Cocycle2 alpha{klein4(), F, rep.omega.table};
    auto B = share(twist_algebra(cocycle_inverse(alpha), *q.algebra));
    ExtendResult r = extend(B, rebase(q.sign, B));
    expect(r.module.has_value(), "no extension on the twist");
    Correspondence c = correspondence(q.algebra, q.sign, alpha, *r.module);
    expect(c.twisted_simples.size() == 1, "not exactly one simple twisted module");
    expect(c.simples_above.size() == 1, "not exactly one simple module above M");
    expect(c.rows.size() == 1 && c.rows[0].dim == 2, "image not 2-dimensional");
    expect(c.rows[0].simple && c.rows[0].lies_above, "image not simple above M");
    expect(c.bijective, "not a bijection");

    auto census = simple_modules(share(group_algebra(quaternion8(), F)));
    int ones = 0, twos = 0;
    for (auto& s : census) {
        ones += s.module.dim == 1;
        twos += s.module.dim == 2;
    }
    expect(census.size() == 5 && ones == 4 && twos == 1, "census of FQ8 is not 1,1,1,1,2");
    return " census=4x1+1x2";
}

// --- 9 -----------------------------------------------------------------------

std::string hom_tensor()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);
    std::vector<GradedModule> Ws{associated(q.algebra, q.sign).module, associated(q.algebra, q.trivial).module,
                                 regular_module(q.algebra)};
    for (auto& c : all_classes(H)) {
        auto A = share(twist_algebra(class_representative(H, c), *q.algebra));
        Ws.push_back(associated(A, rebase(q.sign, A)).module);
        Ws.push_back(regular_module(share(twisted_group_algebra(class_representative(H, c)))));
    }
    Ws.push_back(regular_module(share(matrix_twisted_algebra(F, klein4(), {0, 1}, klein4_pauli(F), identity_hom(klein4())))));
    for (auto& W : Ws) expect(classify(*W.alg).strongly_graded, "instance not strongly graded");
    int pairs = 0;
    for (auto& W : Ws)
        for (auto& W2 : Ws) {
            if (W.dim > 16 || W2.dim > 16) continue;
            expect(end_tensor_check(W, W2).ok(), "End-Tensor map not an isomorphism");
            expect(induction_identity(W, W2).isomorphic(), "induction identity fails");
            ++pairs;
        }
    return " pairs=" + std::to_string(pairs);
}

// --- 10 ----------------------------------------------------------------------

constexpr std::uint64_t kSeed = 20240601;

std::string robustness()
{
    FieldSpec F = make_field(5);
    Q8Instance q = q8_instance(F);
    CohomologyGroup H = h2(klein4(), F);
    Cocycle2 w{klein4(), F, obstruction(q.algebra, q.sign).omega.table};
    auto B = share(twist_algebra(cocycle_inverse(w), *q.algebra));

    expect(extend(q.algebra, q.sign).status == ExtendStatus::Refuted, "not refused on A");
    expect(extend(B, rebase(q.sign, B)).status == ExtendStatus::Extended, "not extended on the twisted instance");

    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 20; ++t) {
        std::vector<Fq> lambda(4, F.one());
        for (int g = 1; g < 4; ++g) lambda[g] = Fq(static_cast<std::uint32_t>(1 + rng() % (F.q() - 1)));
        Cocycle2 beta = coboundary(klein4(), F, lambda);
        expect(class_of(beta, H).is_zero(), "beta not a coboundary");
        auto A1 = share(twist_algebra(beta, *q.algebra));
        expect(extend(A1, rebase(q.sign, A1)).status == ExtendStatus::Refuted, "twisted A not refused");
        auto B1 = share(twist_algebra(beta, *B));
        ExtendResult r = extend(B1, rebase(q.sign, B1));
        expect(r.status == ExtendStatus::Extended && r.module.has_value(), "twisted extendable instance refused");
        validate(*r.module);
    }
    return " seed=" + std::to_string(kSeed) + " coboundaries=20";
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> all{
        {1, "h2 oracle equivalence", h2_oracles},
        {2, "unit-group law", unit_group_law},
        {3, "pullback identity", pullback_theorem},
        {4, "Mackey pipeline on Q8", q8_pipeline},
        {5, "omega monoid homomorphism", omega_monoid},
        {6, "twist/suspension coherence", twist_suspension},
        {7, "graded Wedderburn", wedderburn_suite},
        {8, "Mackey correspondence", correspondence_suite},
        {9, "Hom-Tensor suites", hom_tensor},
        {10, "extension robustness", robustness},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = " " + f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string(" exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s:%s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(), secs);
        std::fflush(stdout);
        failed += !ok;
    }
    return failed ? 1 : 0;
}
