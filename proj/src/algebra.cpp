#include "gradekit/algebra.hpp"

#include <map>

#include "gradekit/modtools.hpp"

namespace gradekit {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidStructure, what); }

void require_same(const FieldSpec& F1, const FiniteGroup& G1, const FieldSpec& F2, const FiniteGroup& G2)
{
    if (!(F1 == F2) || G1 != G2) throw Error(Errc::GroupOrFieldMismatch, "operands live over different groups or fields");
}

GradedAlgebra empty_algebra(const FieldSpec& F, const FiniteGroup& G, int d)
{
    GradedAlgebra A;
    A.field = F;
    A.group = G;
    A.dim = d;
    A.deg.assign(d, G.e);
    A.sc.assign(static_cast<std::size_t>(d) * d * d, Fq(0u));
    A.unit = zero_vector(d);
    return A;
}

}  // namespace

std::vector<int> GradedAlgebra::component(int g) const
{
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
        if (deg[i] == g) out.push_back(i);
    return out;
}

std::vector<int> GradedAlgebra::support() const
{
    std::vector<bool> seen(group.n, false);
    for (int g : deg) seen[g] = true;
    std::vector<int> out;
    for (int g = 0; g < group.n; ++g)
        if (seen[g]) out.push_back(g);
    return out;
}

FqVector GradedAlgebra::basis_product(int i, int j) const
{
    FqVector r(dim);
    for (int k = 0; k < dim; ++k) r(k) = c(i, j, k);
    return r;
}

FqVector GradedAlgebra::mul(const FqVector& a, const FqVector& b) const
{
    FqVector r = zero_vector(dim);
    const FieldSpec& F = field;
    for (int i = 0; i < dim; ++i) {
        if (!a(i).v) continue;
        for (int j = 0; j < dim; ++j) {
            if (!b(j).v) continue;
            Fq s = F.mul(a(i), b(j));
            const Fq* row = &sc[(static_cast<std::size_t>(i) * dim + j) * dim];
            for (int k = 0; k < dim; ++k)
                if (row[k].v) r(k) = F.fma(s, row[k], r(k));
        }
    }
    return r;
}

FqMatrix GradedAlgebra::left_mult(int i) const
{
    FqMatrix M = zeros(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) M(k, j) = c(i, j, k);
    return M;
}

FqMatrix GradedAlgebra::right_mult(int i) const
{
    FqMatrix M = zeros(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) M(k, j) = c(j, i, k);
    return M;
}

FqMatrix GradedAlgebra::left_mult(const FqVector& a) const
{
    FqMatrix M = zeros(dim, dim);
    for (int i = 0; i < dim; ++i)
        if (a(i).v) M = add(field, M, scale(field, a(i), left_mult(i)));
    return M;
}

FqMatrix GradedAlgebra::right_mult(const FqVector& a) const
{
    FqMatrix M = zeros(dim, dim);
    for (int i = 0; i < dim; ++i)
        if (a(i).v) M = add(field, M, scale(field, a(i), right_mult(i)));
    return M;
}

std::vector<int> GradedModule::component(int g) const
{
    std::vector<int> out;
    for (int j = 0; j < dim; ++j)
        if (mdeg[j] == g) out.push_back(j);
    return out;
}

std::vector<int> GradedModule::support() const
{
    std::vector<bool> seen(group().n, false);
    for (int g : mdeg) seen[g] = true;
    std::vector<int> out;
    for (int g = 0; g < group().n; ++g)
        if (seen[g]) out.push_back(g);
    return out;
}

FqMatrix GradedModule::projection(int g) const
{
    FqMatrix P = zeros(dim, dim);
    for (int j = 0; j < dim; ++j)
        if (mdeg[j] == g) P(j, j) = Fq(1u);
    return P;
}

void validate(const GradedAlgebra& A)
{
    const FieldSpec& F = A.field;
    const int d = A.dim;
    if (d < 1) invalid("algebra must have positive dimension");
    if (static_cast<int>(A.deg.size()) != d) invalid("degree list has wrong length");
    if (A.sc.size() != static_cast<std::size_t>(d) * d * d) invalid("structure constant table has wrong size");
    if (A.unit.size() != d) invalid("unit has wrong length");
    for (int g : A.deg)
        if (g < 0 || g >= A.group.n) invalid("degree out of range");
    for (const Fq& x : A.sc) F.check(x);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int g = A.group.mul(A.deg[i], A.deg[j]);
            for (int k = 0; k < d; ++k)
                if (A.c(i, j, k).v && A.deg[k] != g)
                    invalid("product of basis " + std::to_string(i) + " and " + std::to_string(j) +
                            " leaves its degree");
        }
    for (int i = 0; i < d; ++i)
        if (A.unit(i).v && A.deg[i] != A.group.e) invalid("unit is not in the identity component");
    for (int j = 0; j < d; ++j) {
        FqVector ej = unit_vector(d, j);
        if (A.mul(A.unit, ej) != ej || A.mul(ej, A.unit) != ej) invalid("unit fails on basis " + std::to_string(j));
    }
    std::vector<FqMatrix> L(d);
    for (int i = 0; i < d; ++i) L[i] = A.left_mult(i);
    // (e_i e_j) e_l = e_i (e_j e_l) for all l  <=>  L_{e_i e_j} = L_i L_j
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            FqMatrix lhs = mul(F, L[i], L[j]);
            FqMatrix rhs = zeros(d, d);
            for (int k = 0; k < d; ++k)
                if (A.c(i, j, k).v) rhs = add(F, rhs, scale(F, A.c(i, j, k), L[k]));
            if (lhs != rhs)
                invalid("associativity fails for basis " + std::to_string(i) + ", " + std::to_string(j));
        }
}

namespace {

void validate_action(const GradedAlgebra& A, const std::vector<FqMatrix>& act, int m)
{
    const FieldSpec& F = A.field;
    if (static_cast<int>(act.size()) != A.dim) invalid("one action matrix per algebra basis element is required");
    for (const auto& X : act)
        if (X.rows() != m || X.cols() != m) invalid("action matrix has wrong shape");
    FqMatrix U = zeros(m, m);
    for (int i = 0; i < A.dim; ++i)
        if (A.unit(i).v) U = add(F, U, scale(F, A.unit(i), act[i]));
    if (U != identity(m)) invalid("unit does not act as the identity");
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            FqMatrix lhs = mul(F, act[i], act[j]);
            FqMatrix rhs = zeros(m, m);
            for (int k = 0; k < A.dim; ++k)
                if (A.c(i, j, k).v) rhs = add(F, rhs, scale(F, A.c(i, j, k), act[k]));
            if (lhs != rhs) invalid("module law fails for basis " + std::to_string(i) + ", " + std::to_string(j));
        }
}

}  // namespace

void validate(const GradedModule& W)
{
    if (!W.alg) invalid("module without algebra");
    if (static_cast<int>(W.mdeg.size()) != W.dim) invalid("module degree list has wrong length");
    const auto& G = W.group();
    for (int g : W.mdeg)
        if (g < 0 || g >= G.n) invalid("module degree out of range");
    for (int i = 0; i < W.alg->dim; ++i) {
        if (W.act[i].rows() != W.dim || W.act[i].cols() != W.dim) invalid("action matrix has wrong shape");
        for (int c = 0; c < W.dim; ++c)
            for (int r = 0; r < W.dim; ++r)
                if (W.act[i](r, c).v && W.mdeg[r] != G.mul(W.alg->deg[i], W.mdeg[c]))
                    invalid("action of basis " + std::to_string(i) + " leaves its degree");
    }
    validate_action(*W.alg, W.act, W.dim);
}

void validate(const UngradedModule& M)
{
    if (!M.alg) invalid("module without algebra");
    validate_action(*M.alg, M.act, M.dim);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

GradedAlgebra twisted_group_algebra(const Cocycle2& alpha)
{
    const FiniteGroup& G = alpha.group;
    if (!is_normalized(G, alpha.table)) throw Error(Errc::NotNormalized, "twisted group algebra needs a normalized cocycle");
    GradedAlgebra A = empty_algebra(alpha.field, G, G.n);
    for (int g = 0; g < G.n; ++g) {
        A.deg[g] = g;
        for (int h = 0; h < G.n; ++h) A.c(g, h, G.mul(g, h)) = alpha(g, h);
    }
    A.unit(G.e) = Fq(1u);
    return A;
}

GradedAlgebra group_algebra(const FiniteGroup& G, const FieldSpec& F) { return twisted_group_algebra(trivial_cocycle(G, F)); }

GradedAlgebra matrix_twisted_algebra(const FieldSpec& F, const FiniteGroup& G, const std::vector<int>& degrees,
                                     const Cocycle2& omega, const GroupHom& embedding)
{
    const int n = static_cast<int>(degrees.size());
    if (n < 1) throw Error(Errc::InvalidArgument, "matrix size must be positive");
    if (embedding.target != G || embedding.source != omega.group)
        throw Error(Errc::GroupOrFieldMismatch, "embedding does not match the cocycle and the grading group");
    if (!(omega.field == F)) throw Error(Errc::GroupOrFieldMismatch, "cocycle lives over another field");
    for (int g : degrees)
        if (g < 0 || g >= G.n) throw Error(Errc::InvalidArgument, "degree out of range");
    const FiniteGroup& I = omega.group;
    const int s = I.n;
    auto idx = [&](int i, int j, int h) { return (i * n + j) * s + h; };
    GradedAlgebra A = empty_algebra(F, G, n * n * s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int h = 0; h < s; ++h)
                A.deg[idx(i, j, h)] = G.mul(G.mul(degrees[i], embedding(h)), G.inv[degrees[j]]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int h = 0; h < s; ++h)
                for (int l = 0; l < n; ++l)
                    for (int h2 = 0; h2 < s; ++h2) A.c(idx(i, j, h), idx(j, l, h2), idx(i, l, I.mul(h, h2))) = omega(h, h2);
    for (int i = 0; i < n; ++i) A.unit(idx(i, i, I.e)) = Fq(1u);
    return A;
}

GradedAlgebra elementary_matrix_algebra(const FieldSpec& F, const FiniteGroup& G, const std::vector<int>& degrees)
{
    FiniteGroup T = trivial_group();
    GroupHom emb{T, G, {G.e}};
    return matrix_twisted_algebra(F, G, degrees, trivial_cocycle(T, F), emb);
}

GradedAlgebra regrade(const GradedAlgebra& A, const GroupHom& f)
{
    if (f.source != A.group) throw Error(Errc::GroupOrFieldMismatch, "homomorphism does not start at the grading group");
    GradedAlgebra B = A;
    B.group = f.target;
    for (auto& g : B.deg) g = f(g);
    return B;
}

GradedAlgebra quotient_grading(const GradedAlgebra& A, const std::vector<int>& N)
{
    return regrade(A, quotient(A.group, N).projection);
}

GradedAlgebra base_algebra(const GradedAlgebra& A)
{
    auto idx = A.component(A.group.e);
    const int d = static_cast<int>(idx.size());
    GradedAlgebra B = empty_algebra(A.field, trivial_group(), d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k) B.c(a, b, k) = A.c(idx[a], idx[b], idx[k]);
    for (int a = 0; a < d; ++a) B.unit(a) = A.unit(idx[a]);
    return B;
}

std::vector<std::pair<int, int>> product_pairs(const GradedAlgebra& A, const GradedAlgebra& A2)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A2.dim; ++j)
            if (A.deg[i] == A2.deg[j]) out.emplace_back(i, j);
    return out;
}

GradedAlgebra graded_product(const GradedAlgebra& A, const GradedAlgebra& A2)
{
    require_same(A.field, A.group, A2.field, A2.group);
    const FieldSpec& F = A.field;
    auto pairs = product_pairs(A, A2);
    const int d = static_cast<int>(pairs.size());
    std::vector<int> index(static_cast<std::size_t>(A.dim) * A2.dim, -1);
    for (int p = 0; p < d; ++p) index[pairs[p].first * A2.dim + pairs[p].second] = p;
    GradedAlgebra P = empty_algebra(F, A.group, d);
    for (int p = 0; p < d; ++p) P.deg[p] = A.deg[pairs[p].first];
    for (int p = 0; p < d; ++p)
        for (int r = 0; r < d; ++r) {
            auto [i, i2] = pairs[p];
            auto [j, j2] = pairs[r];
            for (int k : A.component(A.group.mul(A.deg[i], A.deg[j]))) {
                Fq a = A.c(i, j, k);
                if (!a.v) continue;
                for (int k2 : A2.component(A.deg[k])) {
                    Fq b = A2.c(i2, j2, k2);
                    if (b.v) P.c(p, r, index[k * A2.dim + k2]) = F.mul(a, b);
                }
            }
        }
    for (int p = 0; p < d; ++p) P.unit(p) = F.mul(A.unit(pairs[p].first), A2.unit(pairs[p].second));
    return P;
}

GradedAlgebra tensor_algebra(const GradedAlgebra& A, const GradedAlgebra& A2)
{
    if (!(A.field == A2.field)) throw Error(Errc::GroupOrFieldMismatch, "operands live over different fields");
    const FieldSpec& F = A.field;
    const int d2 = A2.dim;
    GradedAlgebra T = empty_algebra(F, trivial_group(), A.dim * d2);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k) {
                Fq a = A.c(i, j, k);
                if (!a.v) continue;
                for (int i2 = 0; i2 < d2; ++i2)
                    for (int j2 = 0; j2 < d2; ++j2)
                        for (int k2 = 0; k2 < d2; ++k2) {
                            Fq b = A2.c(i2, j2, k2);
                            if (b.v) T.c(i * d2 + i2, j * d2 + j2, k * d2 + k2) = F.mul(a, b);
                        }
            }
    for (int i = 0; i < A.dim; ++i)
        for (int i2 = 0; i2 < d2; ++i2) T.unit(i * d2 + i2) = F.mul(A.unit(i), A2.unit(i2));
    return T;
}

GradedAlgebra twist_algebra(const Cocycle2& alpha, const GradedAlgebra& A)
{
    require_same(alpha.field, alpha.group, A.field, A.group);
    GradedAlgebra B = A;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Fq s = alpha(A.deg[i], A.deg[j]);
            for (int k = 0; k < A.dim; ++k)
                if (B.c(i, j, k).v) B.c(i, j, k) = A.field.mul(s, B.c(i, j, k));
        }
    return B;
}

std::vector<int> algebra_generators(const GradedAlgebra& A)
{
    SpanBuilder span(A.field, A.dim);
    span.add(A.unit);
    std::vector<FqVector> spanned{A.unit};
    std::vector<int> gens;
    for (int b = 0; b < A.dim && span.dim() < A.dim; ++b) {
        if (span.contains(unit_vector(A.dim, b))) continue;
        gens.push_back(b);
        // left multiplication by the generators closes the span of words
        for (std::size_t t = 0; t < spanned.size(); ++t)
            for (int g : gens) {
                FqVector z = A.mul(unit_vector(A.dim, g), spanned[t]);
                if (span.add(z)) spanned.push_back(z);
            }
    }
    return gens;
}

GradedModule regular_module(const AlgebraPtr& A)
{
    GradedModule W{A, A->dim, A->deg, {}};
    for (int i = 0; i < A->dim; ++i) W.act.push_back(A->left_mult(i));
    return W;
}

std::vector<std::pair<int, int>> module_pairs(const GradedModule& W, const GradedModule& W2)
{
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < W.dim; ++j)
        for (int j2 = 0; j2 < W2.dim; ++j2)
            if (W.mdeg[j] == W2.mdeg[j2]) out.emplace_back(j, j2);
    return out;
}

GradedModule module_product(const GradedModule& W, const GradedModule& W2)
{
    const GradedAlgebra& A = *W.alg;
    const GradedAlgebra& A2 = *W2.alg;
    require_same(A.field, A.group, A2.field, A2.group);
    const FieldSpec& F = A.field;
    auto P = std::make_shared<const GradedAlgebra>(graded_product(A, A2));
    auto apairs = product_pairs(A, A2);
    auto mpairs = module_pairs(W, W2);
    const int m = static_cast<int>(mpairs.size());
    GradedModule out{P, m, {}, {}};
    for (auto [j, j2] : mpairs) out.mdeg.push_back(W.mdeg[j]);
    for (auto [i, i2] : apairs) {
        FqMatrix X = zeros(m, m);
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < m; ++r) {
                Fq a = W.act[i](mpairs[r].first, mpairs[c].first);
                if (!a.v) continue;
                Fq b = W2.act[i2](mpairs[r].second, mpairs[c].second);
                if (b.v) X(r, c) = F.mul(a, b);
            }
        out.act.push_back(X);
    }
    return out;
}

GradedModule twist_module(const Cocycle2& alpha, const GradedModule& W)
{
    const GradedAlgebra& A = *W.alg;
    auto B = std::make_shared<const GradedAlgebra>(twist_algebra(alpha, A));
    GradedModule out{B, W.dim, W.mdeg, W.act};
    for (int i = 0; i < A.dim; ++i)
        for (int c = 0; c < W.dim; ++c) {
            Fq s = alpha(A.deg[i], W.mdeg[c]);
            for (int r = 0; r < W.dim; ++r)
                if (out.act[i](r, c).v) out.act[i](r, c) = A.field.mul(s, out.act[i](r, c));
        }
    return out;
}

GradedModule suspend(const GradedModule& W, int h)
{
    const FiniteGroup& G = W.group();
    if (h < 0 || h >= G.n) throw Error(Errc::InvalidArgument, "suspension element out of range");
    GradedModule out = W;
    for (auto& g : out.mdeg) g = G.mul(g, G.inv[h]);
    return out;
}

UngradedModule forget_grading(const GradedModule& W) { return {W.alg, W.dim, W.act}; }

UngradedModule restrict_to_base(const UngradedModule& M, const AlgebraPtr& base)
{
    const GradedAlgebra& A = *M.alg;
    auto idx = A.component(A.group.e);
    if (static_cast<int>(idx.size()) != base->dim) throw Error(Errc::AlgebraMismatch, "base algebra does not match");
    UngradedModule out{base, M.dim, {}};
    for (int i : idx) out.act.push_back(M.act[i]);
    return out;
}

UngradedModule full_tensor(const UngradedModule& W, const UngradedModule& W2, const AlgebraPtr& tensor)
{
    const FieldSpec& F = W.field();
    UngradedModule out{tensor, W.dim * W2.dim, {}};
    for (int i = 0; i < W.alg->dim; ++i)
        for (int i2 = 0; i2 < W2.alg->dim; ++i2) out.act.push_back(kron(F, W.act[i], W2.act[i2]));
    return out;
}

bool is_unit(const GradedAlgebra& A, const FqVector& a) { return is_invertible(A.field, A.left_mult(a)); }

bool is_strong_component(const GradedAlgebra& A, int g, UnitDecomposition* witness)
{
    const FiniteGroup& G = A.group;
    auto Ag = A.component(g);
    auto Agi = A.component(G.inv[g]);
    const int de = static_cast<int>(A.component(G.e).size());
    SpanBuilder span(A.field, A.dim, witness != nullptr);
    std::vector<std::pair<int, int>> used;
    for (int x : Agi)
        for (int y : Ag)
            if (span.add(A.basis_product(x, y))) used.emplace_back(x, y);
    if (span.dim() != de) return false;
    if (witness) {
        FqVector c = *span.coordinates(A.unit);
        witness->left.clear();
        witness->right.clear();
        for (std::size_t t = 0; t < used.size(); ++t) {
            if (!c(t).v) continue;
            witness->left.push_back(scale(A.field, c(t), unit_vector(A.dim, used[t].first)));
            witness->right.push_back(unit_vector(A.dim, used[t].second));
        }
    }
    return true;
}

namespace {

// u in A_g is a unit iff left multiplication A_{g^{-1}} -> A_e is onto.
bool homogeneous_unit(const GradedAlgebra& A, const FqVector& u, const std::vector<int>& Agi, const std::vector<int>& Ae)
{
    FqMatrix M = zeros(static_cast<Eigen::Index>(Ae.size()), static_cast<Eigen::Index>(Agi.size()));
    for (std::size_t c = 0; c < Agi.size(); ++c) {
        FqVector p = A.mul(u, unit_vector(A.dim, Agi[c]));
        for (std::size_t r = 0; r < Ae.size(); ++r) M(r, c) = p(Ae[r]);
    }
    return rank(A.field, M) == static_cast<int>(Ae.size());
}

}  // namespace

std::optional<FqVector> find_homogeneous_unit(const GradedAlgebra& A, int g, const Caps& caps)
{
    const FiniteGroup& G = A.group;
    const FieldSpec& F = A.field;
    auto Ag = A.component(g);
    auto Agi = A.component(G.inv[g]);
    auto Ae = A.component(G.e);
    if (Ag.empty() || Ag.size() != Ae.size() || Agi.size() != Ae.size()) return std::nullopt;
    if (!is_strong_component(A, g) || !is_strong_component(A, G.inv[g])) return std::nullopt;
    auto embed = [&](const std::vector<std::uint32_t>& coords) {
        FqVector u = zero_vector(A.dim);
        for (std::size_t t = 0; t < Ag.size(); ++t) u(Ag[t]) = Fq(coords[t]);
        return u;
    };
    for (int i : Ag) {
        FqVector u = unit_vector(A.dim, i);
        if (homogeneous_unit(A, u, Agi, Ae)) return u;
    }
    const int k = static_cast<int>(Ag.size());
    long long total = 1;
    for (int i = 0; i < k && total <= caps.exhaustive; ++i) total *= F.q();
    if (total <= caps.exhaustive) {
        // lexicographic in the coefficient tuple, first coordinate most significant
        std::vector<std::uint32_t> c(k, 0);
        for (long long t = 1; t < total; ++t) {
            long long u = t;
            for (int i = k - 1; i >= 0; --i) {
                c[i] = static_cast<std::uint32_t>(u % F.q());
                u /= F.q();
            }
            FqVector v = embed(c);
            if (homogeneous_unit(A, v, Agi, Ae)) return v;
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(caps.seed);
    std::vector<std::uint32_t> c(k);
    for (int t = 0; t < caps.random_trials; ++t) {
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % F.q());
        FqVector v = embed(c);
        if (homogeneous_unit(A, v, Agi, Ae)) return v;
    }
    throw Error(Errc::Undetermined, "unit search in degree " + G.labels[g] + " exceeded the caps");
}

Classification classify(const GradedAlgebra& A, const Caps& caps)
{
    const FiniteGroup& G = A.group;
    Classification out;
    out.support = A.support();
    out.unit_decomposition.resize(G.n);
    out.unit.resize(G.n);
    for (int g = 0; g < G.n; ++g) {
        UnitDecomposition w;
        if (is_strong_component(A, g, &w)) {
            out.strong.push_back(g);
            out.unit_decomposition[g] = w;
        }
        if (auto u = find_homogeneous_unit(A, g, caps)) {
            out.invertible.push_back(g);
            out.unit[g] = *u;
        }
    }
    out.strongly_graded = static_cast<int>(out.strong.size()) == G.n;
    out.crossed_product = static_cast<int>(out.invertible.size()) == G.n;
    bool lines = true;
    for (int g = 0; g < G.n; ++g) lines &= A.component(g).size() == 1;
    out.twisted_group_algebra = out.crossed_product && lines;

    auto Ae = A.component(G.e);
    MatList base;
    for (int i : Ae) {
        FqMatrix L = zeros(static_cast<Eigen::Index>(Ae.size()), static_cast<Eigen::Index>(Ae.size()));
        for (std::size_t c = 0; c < Ae.size(); ++c)
            for (std::size_t r = 0; r < Ae.size(); ++r) L(r, c) = A.c(i, Ae[c], Ae[r]);
        base.push_back(L);
    }
    bool division_base = is_commutative(A.field, base) && is_field(A.field, base);
    out.graded_division = division_base && out.invertible.size() == out.support.size();
    return out;
}

InductionCheck induction_identity(const GradedModule& W, const GradedModule& W2)
{
    const GradedAlgebra& A = *W.alg;
    const GradedAlgebra& A2 = *W2.alg;
    require_same(A.field, A.group, A2.field, A2.group);
    for (const GradedAlgebra* X : {&A, &A2})
        for (int g = 0; g < X->group.n; ++g)
            if (!is_strong_component(*X, g))
                throw Error(Errc::NotStronglyGraded, "induction identity needs strongly graded factors");
    const FieldSpec& F = A.field;
    const FiniteGroup& G = A.group;
    const int n = G.n;
    GradedModule P = module_product(W, W2);
    const GradedAlgebra& B = *P.alg;
    auto bpairs = product_pairs(A, A2);
    auto mpairs = module_pairs(W, W2);
    const int d2 = A2.dim;
    const int m = P.dim;

    // Free space (A (x) A2) (x) P is graded by G x G: (i, i2, p) sits at (deg i * z, deg i2 * z), z = deg p.
    // Balancing relations respect this grading, so each component is reduced on its own.
    auto comp_of = [&](int i, int i2, int p) { return G.mul(A.deg[i], P.mdeg[p]) * n + G.mul(A2.deg[i2], P.mdeg[p]); };
    std::vector<std::vector<int>> members(n * n);  // free basis index i*d2*m + i2*m + p
    std::vector<int> local(static_cast<std::size_t>(A.dim) * d2 * m);
    for (int i = 0; i < A.dim; ++i)
        for (int i2 = 0; i2 < d2; ++i2)
            for (int p = 0; p < m; ++p) {
                int f = (i * d2 + i2) * m + p;
                auto& mem = members[comp_of(i, i2, p)];
                local[f] = static_cast<int>(mem.size());
                mem.push_back(f);
            }
    std::vector<SpanBuilder> rel;
    for (int c = 0; c < n * n; ++c) rel.emplace_back(F, static_cast<int>(members[c].size()));

    // homogeneous algebra generators of the graded product suffice for the relations
    std::vector<int> gens = algebra_generators(B);

    for (int i = 0; i < A.dim; ++i)
        for (int i2 = 0; i2 < d2; ++i2)
            for (int b : gens) {
                auto [j, j2] = bpairs[b];
                for (int p = 0; p < m; ++p) {
                    // (e_i e_j) (x) (e_i2 e_j2) (x) w_p  -  (e_i (x) e_i2) (x) b w_p
                    int target = -1;
                    std::map<int, Fq> row;
                    for (int k = 0; k < A.dim; ++k) {
                        Fq a = A.c(i, j, k);
                        if (!a.v) continue;
                        for (int k2 = 0; k2 < d2; ++k2) {
                            Fq a2 = A2.c(i2, j2, k2);
                            if (!a2.v) continue;
                            int f = (k * d2 + k2) * m + p;
                            row[f] = F.add(row[f], F.mul(a, a2));
                            target = comp_of(k, k2, p);
                        }
                    }
                    for (int r = 0; r < m; ++r) {
                        Fq x = P.act[b](r, p);
                        if (!x.v) continue;
                        int f = (i * d2 + i2) * m + r;
                        row[f] = F.sub(row[f], x);
                        target = comp_of(i, i2, r);
                    }
                    if (target < 0) continue;
                    FqVector v = zero_vector(static_cast<Eigen::Index>(members[target].size()));
                    for (auto [f, x] : row) {
                        if (comp_of(f / (d2 * m), (f / m) % d2, f % m) != target)
                            throw Error(Errc::InvalidStructure, "balancing relation leaves its component");
                        v(local[f]) = x;
                    }
                    rel[target].add(v);
                }
            }

    const int tdim = W.dim * W2.dim;
    InductionCheck out;
    out.tensor_dim = tdim;
    SpanBuilder image(F, tdim);
    for (int c = 0; c < n * n; ++c)
        for (int loc : rel[c].free_columns()) {
            ++out.induced_dim;
            int f = members[c][loc];
            int i = f / (d2 * m), i2 = (f / m) % d2, p = f % m;
            auto [j, j2] = mpairs[p];
            FqVector w = zero_vector(tdim);
            for (int r = 0; r < W.dim; ++r) {
                Fq a = W.act[i](r, j);
                if (!a.v) continue;
                for (int r2 = 0; r2 < W2.dim; ++r2) {
                    Fq b = W2.act[i2](r2, j2);
                    if (b.v) w(r * W2.dim + r2) = F.mul(a, b);
                }
            }
            image.add(w);
        }
    out.map_rank = image.dim();
    return out;
}

PullbackCheck pullback_check(const Cocycle2& c, const GroupHom& pi, const Cocycle2& c2, const GroupHom& pi2)
{
    if (c.group != pi.source || c2.group != pi2.source || c.field != c2.field)
        throw Error(Errc::GroupOrFieldMismatch, "cocycles must live on the sources of the projections");
    Pullback pb = pullback(pi, pi2);
    GradedAlgebra A = regrade(twisted_group_algebra(c), pi);
    GradedAlgebra A2 = regrade(twisted_group_algebra(c2), pi2);
    GradedAlgebra P = graded_product(A, A2);
    GroupHom down{pb.group, pi.target, {}};
    for (int x = 0; x < pb.group.n; ++x) down.map.push_back(pi(pb.pr1(x)));
    GradedAlgebra T = regrade(twisted_group_algebra(pullback_cocycle(c, c2, pb)), down);

    PullbackCheck out;
    out.product_dim = P.dim;
    out.pullback_order = pb.group.n;
    std::map<std::pair<int, int>, int> index;
    for (int x = 0; x < pb.group.n; ++x) index[pb.pairs[x]] = x;
    for (const auto& pr : product_pairs(A, A2)) {
        auto it = index.find(pr);
        out.pairing.push_back(it == index.end() ? -1 : it->second);
    }
    if (out.product_dim != out.pullback_order) return out;
    for (int to : out.pairing)
        if (to < 0) return out;
    out.degrees_match = true;
    for (int i = 0; i < P.dim; ++i) out.degrees_match = out.degrees_match && P.deg[i] == T.deg[out.pairing[i]];
    out.constants_match = true;
    for (int i = 0; i < P.dim && out.constants_match; ++i)
        for (int j = 0; j < P.dim && out.constants_match; ++j)
            for (int k = 0; k < P.dim; ++k)
                if (P.c(i, j, k) != T.c(out.pairing[i], out.pairing[j], out.pairing[k])) {
                    out.constants_match = false;
                    break;
                }
    return out;
}

}  // namespace gradekit
