#include "gradekit/mackey.hpp"

#include <deque>
#include <random>

#include "gradekit/modtools.hpp"

namespace gradekit {

namespace {

FqVector project(const QuotientBasis& Q, const FqVector& v)
{
    FqVector r = Q.span.reduce(v);
    FqVector out(static_cast<Eigen::Index>(Q.free.size()));
    for (std::size_t f = 0; f < Q.free.size(); ++f) out(f) = r(Q.free[f]);
    return out;
}

FqMatrix project(const QuotientBasis& Q, const FqMatrix& X)
{
    FqMatrix out(static_cast<Eigen::Index>(Q.free.size()), X.cols());
    for (Eigen::Index j = 0; j < X.cols(); ++j) out.col(j) = project(Q, FqVector(X.col(j)));
    return out;
}

FqMatrix columns_of(const std::vector<FqVector>& cols, int rows)
{
    FqMatrix U = zeros(rows, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) U.col(j) = cols[j];
    return U;
}

// W / U for a graded submodule U given by columns; iota is carried along.
InducedModule quotient_of(const InducedModule& W, const FqMatrix& U)
{
    const FieldSpec& F = W.module.field();
    auto Q = quotient_basis(F, U, W.module.dim);
    InducedModule out{{W.module.alg, static_cast<int>(Q.free.size()), {}, {}}, {}};
    for (int j : Q.free) out.module.mdeg.push_back(W.module.mdeg[j]);
    for (const auto& a : W.module.act) out.module.act.push_back(quotient_action(F, a, Q));
    out.iota = project(Q, W.iota);
    return out;
}

bool strongly_graded(const GradedAlgebra& A)
{
    for (int g = 0; g < A.group.n; ++g)
        if (!is_strong_component(A, g)) return false;
    return true;
}

FqMatrix combine(const FieldSpec& F, const std::vector<FqMatrix>& mats, const FqVector& c)
{
    FqMatrix X = zeros(mats[0].rows(), mats[0].cols());
    for (Eigen::Index k = 0; k < c.size(); ++k)
        if (c(k).v) X = add(F, X, scale(F, c(k), mats[k]));
    return X;
}

// Cocycle on a subgroup that is all of G, re-read on G itself.
Cocycle2 on_whole_group(const Cocycle2& a, const FiniteGroup& G) { return Cocycle2{G, a.field, a.table}; }

}  // namespace

void check_base_module(const AlgebraPtr& A, const UngradedModule& M)
{
    auto Ae = A->component(A->group.e);
    if (!M.alg || static_cast<int>(M.act.size()) != static_cast<int>(Ae.size()) || !(*M.alg == base_algebra(*A)))
        throw Error(Errc::NotBaseModule, "module is not over the identity component of the algebra");
    try {
        validate(M);
    } catch (const Error& e) {
        throw Error(Errc::NotBaseModule, e.what());
    }
}

InducedModule induced_graded(const AlgebraPtr& A, const UngradedModule& M)
{
    check_base_module(A, M);
    const FieldSpec& F = A->field;
    const int m = M.dim, d = A->dim, n = d * m;
    auto Ae = A->component(A->group.e);
    // balancing relations (a x) (x) m - a (x) (x m) on the free space, basis (i, j) at i*m + j
    std::vector<FqVector> rels;
    for (int i = 0; i < d; ++i)
        for (std::size_t t = 0; t < Ae.size(); ++t)
            for (int j = 0; j < m; ++j) {
                FqVector r = zero_vector(n);
                for (int l = 0; l < d; ++l)
                    if (A->c(i, Ae[t], l).v) r(l * m + j) = F.add(r(l * m + j), A->c(i, Ae[t], l));
                for (int s = 0; s < m; ++s)
                    if (M.act[t](s, j).v) r(i * m + s) = F.sub(r(i * m + s), M.act[t](s, j));
                if (!is_zero(r)) rels.push_back(r);
            }
    auto Q = quotient_basis(F, columns_of(rels, n), n);
    InducedModule out{{A, static_cast<int>(Q.free.size()), {}, {}}, {}};
    for (int f : Q.free) out.module.mdeg.push_back(A->deg[f / m]);
    FqMatrix I = identity(m);
    for (int s = 0; s < d; ++s) out.module.act.push_back(quotient_action(F, kron(F, A->left_mult(s), I), Q));
    FqMatrix one = zeros(n, m);
    for (int i = 0; i < d; ++i)
        if (A->unit(i).v)
            for (int j = 0; j < m; ++j) one(i * m + j, j) = A->unit(i);
    out.iota = project(Q, one);
    return out;
}

GradedSubmodule localizing_radical(const GradedModule& W, int g)
{
    const FieldSpec& F = W.field();
    const FiniteGroup& G = W.group();
    const GradedAlgebra& A = *W.alg;
    auto Wg = W.component(g);
    std::vector<FqVector> cols;
    for (int h = 0; h < G.n; ++h) {
        auto Wh = W.component(h);
        if (Wh.empty()) continue;
        // A_{g h^{-1}} maps W_h into W_g
        auto Ax = A.component(G.mul(g, G.inv[h]));
        const auto rows_per = static_cast<Eigen::Index>(Wg.size());
        FqMatrix S = zeros(rows_per * static_cast<Eigen::Index>(Ax.size()), static_cast<Eigen::Index>(Wh.size()));
        for (std::size_t a = 0; a < Ax.size(); ++a)
            for (std::size_t r = 0; r < Wg.size(); ++r)
                for (std::size_t c = 0; c < Wh.size(); ++c) S(a * rows_per + r, c) = W.act[Ax[a]](Wg[r], Wh[c]);
        FqMatrix K = S.rows() == 0 ? identity(static_cast<Eigen::Index>(Wh.size())) : nullspace(F, S);
        for (Eigen::Index j = 0; j < K.cols(); ++j) {
            FqVector v = zero_vector(W.dim);
            for (std::size_t c = 0; c < Wh.size(); ++c) v(Wh[c]) = K(c, j);
            cols.push_back(v);
        }
    }
    if (cols.empty()) {
        GradedSubmodule z;
        z.module = GradedModule{W.alg, 0, {}, std::vector<FqMatrix>(W.act.size(), FqMatrix(0, 0))};
        z.embedding = zeros(W.dim, 0);
        return z;
    }
    return graded_submodule(W, columns_of(cols, W.dim));
}

InducedModule associated(const AlgebraPtr& A, const UngradedModule& M)
{
    InducedModule I = induced_graded(A, M);
    GradedSubmodule R = localizing_radical(I.module, A->group.e);
    InducedModule out = R.module.dim == 0 ? I : quotient_of(I, R.embedding);
    if (static_cast<int>(out.module.component(A->group.e).size()) != M.dim || rank(A->field, out.iota) != M.dim)
        throw Error(Errc::InvalidStructure, "identity component of the associated module differs from M");
    return out;
}

Subgroup inertia_of_base(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps)
{
    GradedModule W = associated(A, M).module;
    if (W.dim == 0) throw Error(Errc::ZeroModule, "associated module is zero");
    return is_graded_simple(W, caps) ? inertia(W, caps) : inertia_bruteforce(W, caps);
}

bool is_absolutely_simple(const UngradedModule& M, const Caps& caps)
{
    if (M.dim == 0) return false;
    std::mt19937_64 rng(caps.seed);
    if (find_submodule(M.field(), M.act, M.dim, rng, {caps.exhaustive, caps.random_trials})) return false;
    return commutant(M.field(), M.act, M.dim).size() == 1;
}

ObstructionReport obstruction(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps)
{
    check_base_module(A, M);
    if (!is_absolutely_simple(M, caps)) {
        auto endo = commutant(M.field(), M.act, M.dim).size();
        throw Error(Errc::NotAbsolutelySimple,
                    "M is not absolutely simple (End has dimension " + std::to_string(endo) + ")");
    }
    ObstructionReport rep;
    rep.algebra = A;
    rep.base_module = M;
    rep.associated = associated(A, M);
    rep.end_algebra = end_graded(rep.associated.module);
    TwistedCocycle t = extract_twisted_cocycle(rep.end_algebra.alg);
    rep.inertia = t.support;
    rep.omega = t.alpha;
    for (const auto& b : t.basis) rep.v.push_back(combine(A->field, rep.end_algebra.matrices, b));
    CohomologyGroup H = h2(t.support.group, A->field);
    rep.omega_class = class_of(rep.omega, H);
    rep.h2_factors = H.invariant_factors;
    rep.invariant = t.support.group.n == A->group.n;
    rep.strongly_graded = strongly_graded(*A);
    return rep;
}

std::optional<std::vector<FqMatrix>> skew_system_search(const GradedEndAlgebra& E, const Caps& caps)
{
    const GradedAlgebra& D = E.alg;
    const FiniteGroup& G = D.group;
    const FieldSpec& F = D.field;
    const auto m = E.matrices.empty() ? Eigen::Index(0) : E.matrices[0].rows();
    auto gens = generators(G);
    std::vector<std::vector<FqMatrix>> units;
    long long combos = 1;
    for (int s : gens) {
        auto comp = D.component(s);
        if (comp.empty()) return std::nullopt;
        long long total = 1;
        for (std::size_t i = 0; i < comp.size() && total <= caps.exhaustive; ++i) total *= F.q();
        if (total > caps.exhaustive) throw Error(Errc::CapExceededUndetermined, "component too large for the unit scan");
        std::vector<FqMatrix> us;
        for (long long t = 1; t < total; ++t) {
            FqVector c = zero_vector(D.dim);
            long long u = t;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                c(comp[i]) = Fq(static_cast<std::uint32_t>(u % F.q()));
                u /= F.q();
            }
            FqMatrix X = combine(F, E.matrices, c);
            if (is_invertible(F, X)) us.push_back(X);
        }
        if (us.empty()) return std::nullopt;
        combos *= static_cast<long long>(us.size());
        if (combos > caps.exhaustive) throw Error(Errc::CapExceededUndetermined, "skew-system search exceeded the caps");
        units.push_back(std::move(us));
    }
    std::vector<std::size_t> choice(gens.size(), 0);
    for (;;) {
        // phi_{x s} = phi_s phi_x as matrices under right composition
        std::vector<std::optional<FqMatrix>> phi(G.n);
        phi[G.e] = identity(m);
        std::deque<int> todo{G.e};
        bool ok = true;
        while (!todo.empty() && ok) {
            int x = todo.front();
            todo.pop_front();
            for (std::size_t k = 0; k < gens.size() && ok; ++k) {
                int y = G.mul(x, gens[k]);
                FqMatrix P = mul(F, units[k][choice[k]], *phi[x]);
                if (!phi[y]) {
                    phi[y] = P;
                    todo.push_back(y);
                } else if (*phi[y] != P) {
                    ok = false;
                }
            }
        }
        if (ok) {
            std::vector<FqMatrix> out;
            for (auto& p : phi) out.push_back(*p);
            for (int g = 0; g < G.n && ok; ++g)
                for (int h = 0; h < G.n && ok; ++h)
                    if (compose(F, out[g], out[h]) != out[G.mul(g, h)]) ok = false;
            if (ok) return out;
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == units[k].size()) choice[k++] = 0;
        if (k == choice.size()) return std::nullopt;
    }
}

UngradedModule module_from_skew(const AlgebraPtr& A, const UngradedModule& M, const InducedModule& W,
                                const std::vector<FqMatrix>& phi)
{
    const FieldSpec& F = A->field;
    const FiniteGroup& G = A->group;
    auto We = W.module.component(G.e);
    const int m = M.dim;
    FqMatrix iota_e(m, m);
    for (int r = 0; r < m; ++r) iota_e.row(r) = W.iota.row(We[r]);
    auto L = inverse(F, iota_e);
    if (!L) throw Error(Errc::InvalidStructure, "M does not map onto the identity component");
    std::vector<FqMatrix> phi_inv;
    for (const auto& P : phi) {
        auto Pi = inverse(F, P);
        if (!Pi) throw Error(Errc::NotInvertible, "skew system element is not invertible");
        phi_inv.push_back(*Pi);
    }
    UngradedModule out{A, m, {}};
    for (int i = 0; i < A->dim; ++i) {
        FqMatrix X = mul(F, W.module.act[i], mul(F, phi_inv[A->deg[i]], W.iota));
        FqMatrix Xe(m, m);
        for (int r = 0; r < m; ++r) Xe.row(r) = X.row(We[r]);
        out.act.push_back(mul(F, *L, Xe));
    }
    validate(out);
    auto Ae = A->component(G.e);
    for (std::size_t t = 0; t < Ae.size(); ++t)
        if (out.act[Ae[t]] != M.act[t]) throw Error(Errc::InvalidStructure, "extension does not restrict to M");
    return out;
}

ExtendResult extend_by_search(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps)
{
    check_base_module(A, M);
    InducedModule W = associated(A, M);
    ExtendResult r;
    r.method = "skew-search";
    if (W.module.dim == 0) {
        r.reason = "associated module is zero";
        return r;
    }
    GradedEndAlgebra E = end_graded(W.module);
    if (auto phi = skew_system_search(E, caps)) {
        r.status = ExtendStatus::Extended;
        r.module = module_from_skew(A, M, W, *phi);
        r.skew = std::move(*phi);
        return r;
    }
    if (strongly_graded(*A)) {
        // strongly graded: every graded W with W_e = M is induced, so the scan was complete
        r.status = ExtendStatus::Refuted;
        r.reason = "no skew system in the graded endomorphisms of the induced module";
    } else {
        r.reason = "no skew system in the graded endomorphisms of the associated module";
    }
    return r;
}

ExtendResult extend(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps)
{
    check_base_module(A, M);
    const bool strong = strongly_graded(*A);
    if (is_absolutely_simple(M, caps)) {
        ObstructionReport rep = obstruction(A, M, caps);
        ExtendResult r;
        r.method = "cocycle";
        if (rep.invariant) {
            Cocycle2 w = on_whole_group(rep.omega, A->group);
            if (auto lambda = cohomologous(w, trivial_cocycle(A->group, A->field))) {
                std::vector<FqMatrix> phi;
                for (int g = 0; g < A->group.n; ++g) phi.push_back(scale(A->field, (*lambda)[g], rep.v[g]));
                r.status = ExtendStatus::Extended;
                r.module = module_from_skew(A, M, rep.associated, phi);
                r.lambda = std::move(*lambda);
                r.skew = std::move(phi);
                return r;
            }
            if (strong) {
                r.status = ExtendStatus::Refuted;
                r.reason = "obstruction class is nontrivial and the algebra is strongly graded";
                return r;
            }
        } else if (strong) {
            r.status = ExtendStatus::Refuted;
            r.reason = "M is not G-invariant and the algebra is strongly graded";
            return r;
        }
    }
    return extend_by_search(A, M, caps);
}

TheoremATable verify_theorem_A(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps, long long max_classes)
{
    ObstructionReport rep = obstruction(A, M, caps);
    CohomologyGroup H = h2(A->group, A->field);
    if (H.order > max_classes) throw Error(Errc::CapExceeded, "H^2 has more classes than requested");
    TheoremATable table;
    table.h2_factors = H.invariant_factors;
    table.strongly_graded = rep.strongly_graded;
    if (rep.invariant) table.omega_class = class_of(on_whole_group(rep.omega, A->group), H);
    for (const auto& c : all_classes(H)) {
        Cocycle2 alpha = class_representative(H, c);
        auto B = std::make_shared<const GradedAlgebra>(twist_algebra(cocycle_inverse(alpha), *A));
        UngradedModule MB{std::make_shared<const GradedAlgebra>(base_algebra(*B)), M.dim, M.act};
        ExtendResult r = extend(B, MB, caps);
        TheoremARow row;
        row.alpha_class = c;
        row.expected = rep.invariant && c == table.omega_class;
        row.extended = r.status == ExtendStatus::Extended;
        row.consistent = rep.strongly_graded ? row.extended == row.expected : (!row.expected || row.extended);
        table.rows.push_back(row);
    }
    return table;
}

UngradedModule ideal_module(const AlgebraPtr& base, const FqMatrix& ideal)
{
    UngradedModule M{base, static_cast<int>(ideal.cols()), {}};
    for (int k = 0; k < base->dim; ++k) M.act.push_back(restrict_action(base->field, base->left_mult(k), ideal));
    return M;
}

WedderburnReport wedderburn(const AlgebraPtr& A, const Caps& caps)
{
    const FieldSpec& F = A->field;
    const FiniteGroup& G = A->group;
    WedderburnReport rep;
    auto base = std::make_shared<const GradedAlgebra>(base_algebra(*A));
    GradedSubmodule ideal = minimal_graded_ideal(base, caps);
    rep.M_embedding = ideal.embedding;
    rep.M = UngradedModule{base, ideal.module.dim, ideal.module.act};
    auto endo = commutant(F, rep.M.act, rep.M.dim).size();
    if (endo != 1)
        throw Error(Errc::SplittingFails, "End of the minimal ideal of A_e has dimension " + std::to_string(endo) +
                                              " over " + F.name() + "; try a larger field");
    rep.W = associated(A, rep.M);
    const GradedModule& W = rep.W.module;
    rep.D = end_graded(W);
    TwistedCocycle t = extract_twisted_cocycle(rep.D.alg);
    rep.inertia = t.support;
    rep.omega = t.alpha;
    CohomologyGroup H = h2(t.support.group, F);
    rep.omega_class = class_of(rep.omega, H);
    rep.h2_factors = H.invariant_factors;
    const int s = t.support.group.n;
    if (W.dim % s != 0) throw Error(Errc::InvalidStructure, "dim W is not a multiple of |I|");
    rep.n = W.dim / s;
    std::vector<FqMatrix> V;
    for (const auto& b : t.basis) V.push_back(combine(F, rep.D.matrices, b));

    // D-basis of W from homogeneous basis vectors
    SpanBuilder span(F, W.dim);
    std::vector<int> ws;
    for (int j = 0; j < W.dim && static_cast<int>(ws.size()) < rep.n; ++j) {
        FqVector e = unit_vector(W.dim, j);
        if (span.contains(e)) continue;
        for (const auto& X : V) span.add(mul(F, X, e));
        ws.push_back(j);
        rep.degrees.push_back(W.mdeg[j]);
    }
    if (static_cast<int>(ws.size()) != rep.n || span.dim() != W.dim)
        throw Error(Errc::InvalidStructure, "W is not free over its endomorphism algebra");
    const int n = rep.n;
    // F-basis V_h w_k at column k*s + h
    FqMatrix Bm(W.dim, W.dim);
    for (int k = 0; k < n; ++k)
        for (int h = 0; h < s; ++h) Bm.col(k * s + h) = V[h].col(ws[k]);
    auto Binv = inverse(F, Bm);
    if (!Binv) throw Error(Errc::InvalidStructure, "D-basis is not a basis");
    // T_{ij,h}: V_{h'} w_k -> delta_jk V_{h'} V_h w_i
    std::vector<FqMatrix> T;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int h = 0; h < s; ++h) {
                FqMatrix Y = zeros(W.dim, W.dim);
                FqVector vhw = V[h].col(ws[i]);
                for (int h2 = 0; h2 < s; ++h2) Y.col(j * s + h2) = mul(F, V[h2], vhw);
                T.push_back(mul(F, Y, *Binv));
            }

    FqMatrix actspan(static_cast<Eigen::Index>(W.dim) * W.dim, A->dim);
    for (int i = 0; i < A->dim; ++i) actspan.col(i) = vec(W.act[i]);
    const int r = rank(F, actspan);
    const int target = static_cast<int>(commutant(F, V, W.dim).size());
    rep.surjective = r == target;
    rep.kernel_dim = A->dim - r;
    rep.graded_simple = is_graded_simple(*A, caps);

    if (rep.surjective && rep.kernel_dim == 0) {
        GradedAlgebra B = matrix_twisted_algebra(F, G, rep.degrees, rep.omega, t.support.embedding);
        SpanBuilder tspan(F, W.dim * W.dim, true);
        for (const auto& X : T) tspan.add(vec(X));
        FqMatrix C(B.dim, A->dim);
        bool ok = tspan.dim() == B.dim && B.dim == A->dim;
        for (int i = 0; i < A->dim && ok; ++i) {
            auto c = tspan.coordinates(vec(W.act[i]));
            if (!c) {
                ok = false;
                break;
            }
            C.col(i) = *c;
            for (int k = 0; k < B.dim; ++k)
                if (C(k, i).v && B.deg[k] != A->deg[i]) ok = false;
        }
        ok = ok && is_invertible(F, C);
        for (int i = 0; i < A->dim && ok; ++i)
            for (int j = 0; j < A->dim && ok; ++j) {
                FqVector lhs = mul(F, C, A->basis_product(i, j));
                FqVector rhs = B.mul(C.col(i), C.col(j));
                if (lhs != rhs) ok = false;
            }
        ok = ok && mul(F, C, A->unit) == B.unit;
        rep.certificate_verified = ok;
        rep.model = std::move(B);
        rep.iso_certificate = std::move(C);
    }
    return rep;
}

bool lies_above(const UngradedModule& V, const AlgebraPtr& A, const UngradedModule& M)
{
    auto Ae = A->component(A->group.e);
    MatList res;
    for (int k : Ae) res.push_back(V.act[k]);
    return !intertwiners(A->field, M.act, res, M.dim, V.dim).empty();
}

Correspondence correspondence(const AlgebraPtr& A, const UngradedModule& M, const Cocycle2& alpha,
                              const UngradedModule& Mtilde, const Caps& caps)
{
    if (!strongly_graded(*A)) throw Error(Errc::NotStronglyGraded, "correspondence needs a strongly graded algebra");
    const FieldSpec& F = A->field;
    Correspondence out;
    auto T = std::make_shared<const GradedAlgebra>(twisted_group_algebra(alpha));
    out.twisted_simples = simple_modules(T, caps);
    for (auto& S : simple_modules(A, caps))
        if (lies_above(S.module, A, M)) out.simples_above.push_back(std::move(S));
    std::vector<bool> hit(out.simples_above.size(), false);
    bool ok = out.twisted_simples.size() == out.simples_above.size();
    for (std::size_t u = 0; u < out.twisted_simples.size(); ++u) {
        const UngradedModule& U = out.twisted_simples[u].module;
        UngradedModule V{A, U.dim * Mtilde.dim, {}};
        for (int i = 0; i < A->dim; ++i) V.act.push_back(kron(F, U.act[A->deg[i]], Mtilde.act[i]));
        validate(V);
        CorrespondenceRow row;
        row.source = static_cast<int>(u);
        row.dim = V.dim;
        std::mt19937_64 rng(caps.seed);
        row.simple = !find_submodule(F, V.act, V.dim, rng, {caps.exhaustive, caps.random_trials});
        row.lies_above = lies_above(V, A, M);
        for (std::size_t t = 0; t < out.simples_above.size(); ++t) {
            const auto& S = out.simples_above[t].module;
            if (S.dim == V.dim && !intertwiners(F, V.act, S.act, V.dim, S.dim).empty()) {
                row.target = static_cast<int>(t);
                break;
            }
        }
        ok = ok && row.simple && row.lies_above && row.target >= 0 && !hit[row.target];
        if (row.target >= 0) hit[row.target] = true;
        out.rows.push_back(row);
    }
    out.bijective = ok;
    return out;
}

Cocycle2 end_cocycle(const GradedModule& W)
{
    TwistedCocycle t = extract_twisted_cocycle(end_graded(W).alg);
    if (t.support.group.n != W.group().n) throw Error(Errc::InvalidStructure, "endomorphism support is a proper subgroup");
    return on_whole_group(t.alpha, W.group());
}

EndTwistCheck endtwist_check(const GradedModule& W, const Cocycle2& alpha)
{
    const FieldSpec& F = W.field();
    const FiniteGroup& G = W.group();
    GradedEndAlgebra E = end_graded(W);
    GradedModule Tw = twist_module(alpha, W);
    GradedEndAlgebra Et = end_graded(Tw);
    auto twist = [&](const FqMatrix& X, int g) {
        FqMatrix Y = X;
        for (int c = 0; c < W.dim; ++c) {
            Fq s = alpha(W.mdeg[c], g);
            for (int r = 0; r < W.dim; ++r) Y(r, c) = F.mul(s, Y(r, c));
        }
        return Y;
    };
    EndTwistCheck out;
    out.maps_into = true;
    std::vector<FqMatrix> Y;
    FqMatrix C = zeros(Et.alg.dim, E.alg.dim);
    for (int k = 0; k < E.alg.dim; ++k) {
        Y.push_back(twist(E.matrices[k], E.alg.deg[k]));
        for (const auto& a : Tw.act)
            if (mul(F, a, Y[k]) != mul(F, Y[k], a)) out.maps_into = false;
        auto c = end_coordinates(Et, Y[k]);
        if (!c) {
            out.maps_into = false;
            continue;
        }
        C.col(k) = *c;
    }
    out.bijective = out.maps_into && Et.alg.dim == E.alg.dim && rank(F, C) == E.alg.dim;
    GradedAlgebra tE = twist_algebra(alpha, E.alg);
    out.multiplicative = out.maps_into;
    out.scalar_law = true;
    for (int a = 0; a < E.alg.dim; ++a)
        for (int b = 0; b < E.alg.dim; ++b) {
            const int ga = E.alg.deg[a], gb = E.alg.deg[b];
            if (out.multiplicative &&
                mul(F, C, tE.basis_product(a, b)) != Et.alg.mul(FqVector(C.col(a)), FqVector(C.col(b))))
                out.multiplicative = false;
            FqMatrix lhs = compose(F, Y[a], Y[b]);
            FqMatrix rhs = scale(F, alpha(ga, gb), twist(compose(F, E.matrices[a], E.matrices[b]), G.mul(ga, gb)));
            if (lhs != rhs) out.scalar_law = false;
        }
    return out;
}

EndTensorCheck end_tensor_check(const GradedModule& W, const GradedModule& W2)
{
    const FieldSpec& F = W.field();
    GradedEndAlgebra E1 = end_graded(W), E2 = end_graded(W2);
    GradedAlgebra P = graded_product(E1.alg, E2.alg);
    auto apairs = product_pairs(E1.alg, E2.alg);
    GradedModule Wp = module_product(W, W2);
    auto mpairs = module_pairs(W, W2);
    GradedEndAlgebra Ep = end_graded(Wp);
    EndTensorCheck out;
    out.product_dim = P.dim;
    out.end_dim = Ep.alg.dim;
    const int m = Wp.dim;
    FqMatrix C = zeros(Ep.alg.dim, P.dim);
    bool inside = true;
    for (int k = 0; k < P.dim; ++k) {
        const FqMatrix& X1 = E1.matrices[apairs[k].first];
        const FqMatrix& X2 = E2.matrices[apairs[k].second];
        FqMatrix Z = zeros(m, m);
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < m; ++r) {
                Fq a = X1(mpairs[r].first, mpairs[c].first);
                if (a.v) Z(r, c) = F.mul(a, X2(mpairs[r].second, mpairs[c].second));
            }
        auto c = end_coordinates(Ep, Z);
        if (!c) {
            inside = false;
            continue;
        }
        C.col(k) = *c;
    }
    out.rank = rank(F, C);
    out.multiplicative = inside;
    for (int a = 0; a < P.dim && out.multiplicative; ++a)
        for (int b = 0; b < P.dim && out.multiplicative; ++b)
            if (mul(F, C, P.basis_product(a, b)) != Ep.alg.mul(FqVector(C.col(a)), FqVector(C.col(b))))
                out.multiplicative = false;
    return out;
}

}  // namespace gradekit
