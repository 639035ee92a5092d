#include "gradekit/endo.hpp"

#include <random>

#include "gradekit/modtools.hpp"

namespace gradekit {

namespace {

MatList generator_actions(const GradedModule& W)
{
    MatList out;
    for (int i : algebra_generators(*W.alg)) out.push_back(W.act[i]);
    return out;
}

// Action generators plus the component projections, so invariant subspaces are graded.
MatList graded_generators(const GradedModule& W)
{
    MatList out = generator_actions(W);
    auto supp = W.support();
    if (supp.size() > 1)
        for (int g : supp) out.push_back(W.projection(g));
    return out;
}

SplitOptions split_options(const Caps& caps) { return {caps.exhaustive, caps.random_trials}; }

FqMatrix combination(const FieldSpec& F, const MatList& basis, const std::vector<std::uint32_t>& c)
{
    FqMatrix X = zeros(basis[0].rows(), basis[0].cols());
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (c[t]) X = add(F, X, scale(F, Fq(c[t]), basis[t]));
    return X;
}

// Invertible member of the span of square matrices: basis elements, then a
// full scan when it fits the cap, then random combinations.
std::optional<FqMatrix> invertible_in_span(const FieldSpec& F, const MatList& basis, const Caps& caps)
{
    if (basis.empty()) return std::nullopt;
    for (const auto& X : basis)
        if (is_invertible(F, X)) return X;
    const int k = static_cast<int>(basis.size());
    long long total = 1;
    for (int i = 0; i < k && total <= caps.exhaustive; ++i) total *= F.q();
    std::vector<std::uint32_t> c(k, 0);
    if (total <= caps.exhaustive) {
        for (long long t = 1; t < total; ++t) {
            long long u = t;
            for (int i = k - 1; i >= 0; --i) {
                c[i] = static_cast<std::uint32_t>(u % F.q());
                u /= F.q();
            }
            FqMatrix X = combination(F, basis, c);
            if (is_invertible(F, X)) return X;
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(caps.seed);
    for (int t = 0; t < caps.random_trials; ++t) {
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % F.q());
        FqMatrix X = combination(F, basis, c);
        if (is_invertible(F, X)) return X;
    }
    throw Error(Errc::CapExceededUndetermined, "invertibility scan exceeded the caps");
}

bool same_component_dims(const GradedModule& W, const GradedModule& W2)
{
    for (int g = 0; g < W.group().n; ++g)
        if (W.component(g).size() != W2.component(g).size()) return false;
    return true;
}

}  // namespace

std::vector<FqMatrix> hom_graded(const GradedModule& W, const GradedModule& W2, int h)
{
    if (!same_algebra(W.alg, W2.alg)) throw Error(Errc::AlgebraMismatch, "modules over different algebras");
    const FieldSpec& F = W.field();
    const FiniteGroup& G = W.group();
    const int m = W.dim, m2 = W2.dim;
    std::vector<int> unknown(static_cast<std::size_t>(m2) * m, -1);
    std::vector<std::pair<int, int>> cells;
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < m2; ++r)
            if (W2.mdeg[r] == G.mul(W.mdeg[c], h)) {
                unknown[static_cast<std::size_t>(r) * m + c] = static_cast<int>(cells.size());
                cells.emplace_back(r, c);
            }
    const int n = static_cast<int>(cells.size());
    if (n == 0) return {};
    RowSystem sys(F, n);
    for (int i : algebra_generators(*W.alg)) {
        const FqMatrix& a = W.act[i];
        const FqMatrix& a2 = W2.act[i];
        // entry (r, c) of a2 X - X a
        for (int r = 0; r < m2; ++r)
            for (int c = 0; c < m; ++c) {
                FqVector row = zero_vector(n);
                bool any = false;
                for (int k = 0; k < m2; ++k) {
                    int u = unknown[static_cast<std::size_t>(k) * m + c];
                    if (u >= 0 && a2(r, k).v) {
                        row(u) = F.add(row(u), a2(r, k));
                        any = true;
                    }
                }
                for (int k = 0; k < m; ++k) {
                    int u = unknown[static_cast<std::size_t>(r) * m + k];
                    if (u >= 0 && a(k, c).v) {
                        row(u) = F.sub(row(u), a(k, c));
                        any = true;
                    }
                }
                if (any && !is_zero(row)) sys.add_row(row);
            }
    }
    FqMatrix N = sys.nullspace();
    std::vector<FqMatrix> out;
    for (Eigen::Index j = 0; j < N.cols(); ++j) {
        FqMatrix X = zeros(m2, m);
        for (int u = 0; u < n; ++u) X(cells[u].first, cells[u].second) = N(u, j);
        out.push_back(X);
    }
    return out;
}

GradedEndAlgebra end_graded(const GradedModule& W)
{
    if (W.dim == 0) throw Error(Errc::ZeroModule, "endomorphisms of the zero module");
    const FieldSpec& F = W.field();
    const FiniteGroup& G = W.group();
    GradedEndAlgebra E;
    std::vector<std::vector<int>> by_degree(G.n);
    std::vector<SpanBuilder> spans;
    for (int h = 0; h < G.n; ++h) {
        spans.emplace_back(F, W.dim * W.dim, true);
        for (auto& X : hom_graded(W, W, h)) {
            spans.back().add(vec(X));
            by_degree[h].push_back(static_cast<int>(E.matrices.size()));
            E.matrices.push_back(std::move(X));
            E.alg.deg.push_back(h);
        }
    }
    const int d = static_cast<int>(E.matrices.size());
    GradedAlgebra& A = E.alg;
    A.field = F;
    A.group = G;
    A.dim = d;
    A.sc.assign(static_cast<std::size_t>(d) * d * d, Fq(0u));
    auto coords = [&](int h, const FqMatrix& X) {
        auto c = spans[h].coordinates(vec(X));
        if (!c) throw Error(Errc::InvalidStructure, "endomorphism space not closed under composition");
        return *c;
    };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int h = G.mul(A.deg[a], A.deg[b]);
            FqVector c = coords(h, compose(F, E.matrices[a], E.matrices[b]));
            for (Eigen::Index t = 0; t < c.size(); ++t) A.c(a, b, by_degree[h][t]) = c(t);
        }
    A.unit = zero_vector(d);
    FqVector u = coords(G.e, identity(W.dim));
    for (Eigen::Index t = 0; t < u.size(); ++t) A.unit(by_degree[G.e][t]) = u(t);
    return E;
}

std::optional<FqVector> end_coordinates(const GradedEndAlgebra& E, const FqMatrix& X)
{
    if (E.matrices.empty()) return is_zero(X) ? std::optional<FqVector>(FqVector(0)) : std::nullopt;
    SpanBuilder span(E.alg.field, static_cast<int>(X.size()), true);
    for (const auto& M : E.matrices) span.add(vec(M));
    return span.coordinates(vec(X));
}

LeftRep left_rep(const GradedModule& W)
{
    LeftRep out{W.act, {}};
    const int d = W.alg->dim;
    FqMatrix V = zeros(static_cast<Eigen::Index>(W.dim) * W.dim, d);
    for (int i = 0; i < d; ++i) V.col(i) = vec(W.act[i]);
    out.kernel = nullspace(W.field(), V);
    return out;
}

GradedSubmodule graded_submodule(const GradedModule& W, const FqMatrix& U)
{
    const FieldSpec& F = W.field();
    GradedSubmodule out;
    out.module.alg = W.alg;
    std::vector<FqVector> cols;
    for (int g = 0; g < W.group().n; ++g) {
        FqMatrix PU = mul(F, W.projection(g), U);
        SpanBuilder span(F, W.dim);
        for (Eigen::Index j = 0; j < PU.cols(); ++j)
            if (span.add(PU.col(j))) {
                cols.push_back(PU.col(j));
                out.module.mdeg.push_back(g);
            }
    }
    out.embedding = zeros(W.dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.embedding.col(j) = cols[j];
    if (rank(F, out.embedding) != rank(F, U)) throw Error(Errc::InvalidStructure, "subspace is not graded");
    out.module.dim = static_cast<int>(cols.size());
    for (const auto& a : W.act) out.module.act.push_back(restrict_action(F, a, out.embedding));
    return out;
}

GradedModule graded_quotient(const GradedModule& W, const FqMatrix& U)
{
    const FieldSpec& F = W.field();
    GradedSubmodule S = graded_submodule(W, U);
    auto Q = quotient_basis(F, S.embedding, W.dim);
    GradedModule out{W.alg, static_cast<int>(Q.free.size()), {}, {}};
    for (int j : Q.free) out.mdeg.push_back(W.mdeg[j]);
    for (const auto& a : W.act) out.act.push_back(quotient_action(F, a, Q));
    return out;
}

GradedSimplicity graded_simplicity(const GradedModule& W, const Caps& caps)
{
    if (W.dim == 0) return {false, std::nullopt};
    std::mt19937_64 rng(caps.seed);
    auto U = find_submodule(W.field(), graded_generators(W), W.dim, rng, split_options(caps));
    if (!U) return {true, std::nullopt};
    return {false, *U};
}

bool is_graded_simple(const GradedModule& W, const Caps& caps) { return graded_simplicity(W, caps).simple; }

bool is_abs_graded_simple(const GradedModule& W, const Caps& caps)
{
    if (!is_graded_simple(W, caps)) throw Error(Errc::NotGradedSimple, "module has a proper graded submodule");
    return hom_graded(W, W, W.group().e).size() == 1;
}

GradedSimplicity graded_simplicity(const GradedAlgebra& A, const Caps& caps)
{
    if (A.dim == 0) return {false, std::nullopt};
    MatList gens;
    for (int i : algebra_generators(A)) {
        gens.push_back(A.left_mult(i));
        gens.push_back(A.right_mult(i));
    }
    auto supp = A.support();
    if (supp.size() > 1)
        for (int g : supp) {
            FqMatrix P = zeros(A.dim, A.dim);
            for (int i : A.component(g)) P(i, i) = Fq(1u);
            gens.push_back(P);
        }
    std::mt19937_64 rng(caps.seed);
    auto U = find_submodule(A.field, gens, A.dim, rng, split_options(caps));
    if (!U) return {true, std::nullopt};
    return {false, *U};
}

bool is_graded_simple(const GradedAlgebra& A, const Caps& caps) { return graded_simplicity(A, caps).simple; }

TwistedCocycle extract_twisted_cocycle(const GradedAlgebra& E)
{
    const FiniteGroup& G = E.group;
    const FieldSpec& F = E.field;
    auto supp = E.support();
    std::vector<int> index(G.n, -1);
    for (int g : supp) {
        auto comp = E.component(g);
        if (comp.size() != 1)
            throw Error(Errc::ComponentNotLine, "component " + G.labels[g] + " has dimension " + std::to_string(comp.size()));
        index[g] = comp[0];
    }
    if (index[G.e] < 0 || !is_subgroup(G, supp)) throw Error(Errc::SupportNotSubgroup, "support is not a subgroup");
    TwistedCocycle out;
    out.support = subgroup(G, supp);
    const auto& els = out.support.embedding.map;
    const int k = static_cast<int>(els.size());
    for (int s = 0; s < k; ++s)
        out.basis.push_back(els[s] == G.e ? E.unit : unit_vector(E.dim, index[els[s]]));
    // a line's basis vector has a single nonzero coordinate
    auto coefficient = [&](const FqVector& x, int g) {
        int i = index[g];
        return F.div(x(i), g == G.e ? E.unit(i) : Fq(1u));
    };
    std::vector<Fq> table(static_cast<std::size_t>(k) * k);
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t) {
            int g = els[s], h = els[t];
            Fq c = coefficient(E.mul(out.basis[s], out.basis[t]), G.mul(g, h));
            if (!c.v)
                throw Error(Errc::NotInvertible, "v_" + G.labels[g] + " v_" + G.labels[h] + " vanishes");
            table[static_cast<std::size_t>(s) * k + t] = c;
        }
    out.alpha = make_cocycle(out.support.group, F, std::move(table));
    return out;
}

std::vector<FqVector> detect_crossed_product(const GradedAlgebra& A, const Caps& caps)
{
    std::vector<FqVector> out;
    for (int g = 0; g < A.group.n; ++g) {
        auto u = find_homogeneous_unit(A, g, caps);
        if (!u) throw Error(Errc::NoUnitInComponent, "no homogeneous unit of degree " + A.group.labels[g]);
        out.push_back(*u);
    }
    return out;
}

Subgroup inertia(const GradedModule& W, const Caps& caps)
{
    if (!is_graded_simple(W, caps)) throw Error(Errc::NotGradedSimple, "inertia via End support needs a graded simple module");
    auto supp = end_graded(W).alg.support();
    if (!is_subgroup(W.group(), supp)) throw Error(Errc::InvalidStructure, "endomorphism support is not a subgroup");
    return subgroup(W.group(), supp);
}

std::optional<FqMatrix> graded_isomorphism(const GradedModule& W, const GradedModule& W2, const Caps& caps)
{
    if (W.dim != W2.dim || !same_component_dims(W, W2)) return std::nullopt;
    if (W.dim == 0) return FqMatrix(0, 0);
    return invertible_in_span(W.field(), hom_graded(W, W2, W.group().e), caps);
}

Subgroup inertia_bruteforce(const GradedModule& W, const Caps& caps)
{
    std::vector<int> els;
    for (int g = 0; g < W.group().n; ++g)
        if (graded_isomorphism(W, suspend(W, g), caps)) els.push_back(g);
    return subgroup(W.group(), els);
}

GradedSubmodule minimal_graded_submodule(const GradedModule& W, const Caps& caps)
{
    if (W.dim == 0) throw Error(Errc::ZeroModule, "zero module has no minimal submodule");
    GradedSubmodule cur{W, identity(W.dim)};
    for (;;) {
        auto s = graded_simplicity(cur.module, caps);
        if (s.simple) return cur;
        GradedSubmodule next = graded_submodule(cur.module, *s.witness);
        next.embedding = mul(W.field(), cur.embedding, next.embedding);
        cur = std::move(next);
    }
}

GradedSubmodule minimal_graded_ideal(const AlgebraPtr& A, const Caps& caps)
{
    return minimal_graded_submodule(regular_module(A), caps);
}

std::vector<SimpleModule> simple_modules(const AlgebraPtr& A, const Caps& caps)
{
    const FieldSpec& F = A->field;
    MatList gens;
    for (int i = 0; i < A->dim; ++i) gens.push_back(A->left_mult(i));
    std::mt19937_64 rng(caps.seed);
    auto factors = composition_factors(F, gens, A->dim, rng, split_options(caps));
    // A/J(A) has dimension sum dim(S)^2 / dim End(S); equality with dim A means J(A) = 0.
    long long semisimple_dim = 0;
    for (const auto& f : factors) semisimple_dim += static_cast<long long>(f.dim) * f.dim / f.end_dim;
    if (semisimple_dim != A->dim)
        throw Error(Errc::NotSemisimple, "radical has dimension " + std::to_string(A->dim - semisimple_dim));
    std::vector<SimpleModule> out;
    for (auto& f : factors) out.push_back({UngradedModule{A, f.dim, std::move(f.act)}, f.end_dim, f.multiplicity});
    return out;
}

}  // namespace gradekit
