#include "gradekit/modtools.hpp"

#include <deque>

namespace gradekit {

namespace {

FqMatrix columns(const std::vector<FqVector>& vs, int m)
{
    FqMatrix U = zeros(m, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) U.col(j) = vs[j];
    return U;
}

MatList transposed(const MatList& gens)
{
    MatList t;
    t.reserve(gens.size());
    for (const auto& g : gens) t.push_back(g.transpose());
    return t;
}

bool is_scalar(const FqMatrix& X)
{
    for (Eigen::Index j = 0; j < X.cols(); ++j)
        for (Eigen::Index i = 0; i < X.rows(); ++i) {
            if (i != j && X(i, j).v) return false;
            if (i == j && X(i, i) != X(0, 0)) return false;
        }
    return true;
}

FqMatrix combine(const FieldSpec& F, const MatList& basis, const FqVector& coeffs)
{
    FqMatrix X = zeros(basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs(i).v) X = add(F, X, scale(F, coeffs(i), basis[i]));
    return X;
}

FqMatrix random_combination(const FieldSpec& F, const MatList& basis, std::mt19937_64& rng)
{
    FqVector c(static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = random_element(F, rng);
    return combine(F, basis, c);
}

// Matrix of x -> x^q on a commutative algebra, in the coordinates of `basis`.
FqMatrix frobenius(const FieldSpec& F, const MatList& basis)
{
    const int n = static_cast<int>(basis.size());
    SpanBuilder span(F, static_cast<int>(basis[0].size()), true);
    for (const auto& b : basis) span.add(vec(b));
    FqMatrix Fr = zeros(n, n);
    for (int i = 0; i < n; ++i) {
        auto c = span.coordinates(vec(mat_pow(F, basis[i], F.q())));
        if (!c) throw Error(Errc::InvalidStructure, "basis is not closed under multiplication");
        Fr.col(i) = *c;
    }
    return Fr;
}

// Powers of x up to the first dependency: a basis of F[x].
MatList power_basis(const FieldSpec& F, const FqMatrix& x)
{
    const Eigen::Index m = x.rows();
    SpanBuilder span(F, static_cast<int>(m * m));
    MatList out;
    FqMatrix p = identity(m);
    while (span.add(vec(p))) {
        out.push_back(p);
        p = mul(F, p, x);
    }
    return out;
}

std::optional<FqMatrix> commutative_zero_divisor(const FieldSpec& F, const MatList& C)
{
    if (C.size() <= 1) return std::nullopt;
    FqMatrix Fr = frobenius(F, C);
    FqMatrix K = nullspace(F, Fr);
    if (K.cols() > 0) return combine(F, C, K.col(0));  // y^q = 0, y != 0
    FqMatrix fixed = nullspace(F, sub(F, Fr, identity(Fr.rows())));
    for (Eigen::Index j = 0; j < fixed.cols(); ++j) {
        FqMatrix y = combine(F, C, fixed.col(j));
        if (is_scalar(y)) continue;
        // y^q = y, so its minimal polynomial splits into distinct linear factors.
        auto r = roots(F, minimal_polynomial(F, y));
        if (r.empty()) continue;
        return sub(F, y, scale(F, r[0], identity(y.rows())));
    }
    return std::nullopt;
}

bool proper(const FqMatrix& U, int m) { return U.cols() > 0 && U.cols() < m; }

}  // namespace

FqMatrix spin(const FieldSpec& F, const MatList& gens, const FqMatrix& seeds)
{
    const int m = static_cast<int>(seeds.rows());
    SpanBuilder span(F, m);
    std::deque<FqVector> todo;
    for (Eigen::Index j = 0; j < seeds.cols(); ++j)
        if (span.add(seeds.col(j))) todo.push_back(seeds.col(j));
    while (!todo.empty() && span.dim() < m) {
        FqVector v = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            FqVector w = mul(F, g, v);
            if (span.add(w)) todo.push_back(w);
        }
    }
    if (span.dim() == m) return identity(m);
    return columns(span.basis(), m);
}

FqMatrix spin(const FieldSpec& F, const MatList& gens, const FqVector& seed)
{
    FqMatrix s = seed;
    return spin(F, gens, s);
}

MatList intertwiners(const FieldSpec& F, const MatList& a, const MatList& b, int ma, int mb)
{
    // X is mb x ma, unknown index r + c*mb (column-major).  Row (r, c) of X a - b X = 0.
    const int n = ma * mb;
    RowSystem sys(F, n);
    for (std::size_t t = 0; t < a.size() && sys.rank() < n; ++t) {
        const FqMatrix& A = a[t];
        const FqMatrix& B = b[t];
        for (int c = 0; c < ma; ++c)
            for (int r = 0; r < mb; ++r) {
                FqVector row = zero_vector(n);
                for (int k = 0; k < ma; ++k)
                    if (A(k, c).v) row(r + k * mb) = F.add(row(r + k * mb), A(k, c));
                for (int k = 0; k < mb; ++k)
                    if (B(r, k).v) row(k + c * mb) = F.sub(row(k + c * mb), B(r, k));
                if (!is_zero(row)) sys.add_row(row);
            }
    }
    FqMatrix N = sys.nullspace();
    MatList out;
    for (Eigen::Index j = 0; j < N.cols(); ++j) out.push_back(unvec(N.col(j), mb, ma));
    return out;
}

MatList commutant(const FieldSpec& F, const MatList& gens, int m) { return intertwiners(F, gens, gens, m, m); }

MatList algebra_span(const FieldSpec& F, const MatList& gens, int m)
{
    SpanBuilder span(F, m * m);
    MatList out;
    std::deque<FqMatrix> todo;
    FqMatrix I = identity(m);
    span.add(vec(I));
    out.push_back(I);
    todo.push_back(I);
    while (!todo.empty() && span.dim() < m * m) {
        FqMatrix Y = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            FqMatrix Z = mul(F, g, Y);
            if (span.add(vec(Z))) {
                out.push_back(Z);
                todo.push_back(Z);
            }
        }
    }
    return out;
}

bool is_commutative(const FieldSpec& F, const MatList& basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (mul(F, basis[i], basis[j]) != mul(F, basis[j], basis[i])) return false;
    return true;
}

bool is_field(const FieldSpec& F, const MatList& basis)
{
    if (basis.empty()) return false;
    if (basis.size() == 1) return true;
    FqMatrix Fr = frobenius(F, basis);
    const int n = static_cast<int>(basis.size());
    if (rank(F, Fr) < n) return false;
    return nullspace(F, sub(F, Fr, identity(n))).cols() == 1;
}

std::optional<FqMatrix> zero_divisor(const FieldSpec& F, const MatList& basis, std::mt19937_64& rng, int trials)
{
    if (is_commutative(F, basis)) return commutative_zero_divisor(F, basis);
    for (int t = 0; t < trials + static_cast<int>(basis.size()); ++t) {
        FqMatrix x = t < static_cast<int>(basis.size()) ? basis[t] : random_combination(F, basis, rng);
        if (is_zero(x)) continue;
        if (!is_invertible(F, x)) return x;
        if (auto z = commutative_zero_divisor(F, power_basis(F, x))) return z;
    }
    return std::nullopt;
}

std::vector<Fq> minimal_polynomial(const FieldSpec& F, const FqMatrix& X)
{
    const Eigen::Index m = X.rows();
    SpanBuilder span(F, static_cast<int>(m * m), true);
    FqMatrix p = identity(m);
    while (span.add(vec(p))) p = mul(F, p, X);
    FqVector c = *span.coordinates(vec(p));
    std::vector<Fq> poly;
    for (Eigen::Index i = 0; i < c.size(); ++i) poly.push_back(F.neg(c(i)));
    poly.push_back(F.one());
    return poly;
}

std::vector<Fq> roots(const FieldSpec& F, const std::vector<Fq>& poly)
{
    std::vector<Fq> out;
    for (std::uint32_t a = 0; a < F.q(); ++a) {
        Fq v(0u);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = F.fma(v, Fq(a), *it);
        if (!v.v) out.push_back(Fq(a));
    }
    return out;
}

FqMatrix restrict_action(const FieldSpec& F, const FqMatrix& g, const FqMatrix& U)
{
    SpanBuilder span(F, static_cast<int>(U.rows()), true);
    for (Eigen::Index j = 0; j < U.cols(); ++j) span.add(U.col(j));
    FqMatrix R = zeros(U.cols(), U.cols());
    for (Eigen::Index j = 0; j < U.cols(); ++j) {
        auto c = span.coordinates(mul(F, g, FqVector(U.col(j))));
        if (!c) throw Error(Errc::InvalidStructure, "subspace is not invariant");
        R.col(j) = *c;
    }
    return R;
}

QuotientBasis quotient_basis(const FieldSpec& F, const FqMatrix& U, int m)
{
    QuotientBasis Q{U, {}, SpanBuilder(F, m)};
    for (Eigen::Index j = 0; j < U.cols(); ++j) Q.span.add(U.col(j));
    Q.free = Q.span.free_columns();
    return Q;
}

FqMatrix quotient_action(const FieldSpec&, const FqMatrix& g, const QuotientBasis& Q)
{
    const auto n = static_cast<Eigen::Index>(Q.free.size());
    FqMatrix R = zeros(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        FqVector v = Q.span.reduce(g.col(Q.free[j]));
        for (Eigen::Index i = 0; i < n; ++i) R(i, j) = v(Q.free[i]);
    }
    return R;
}

FqMatrix annihilator(const FieldSpec& F, const FqMatrix& S, int m)
{
    if (S.cols() == 0) return identity(m);
    return nullspace(F, S.transpose());
}

std::optional<FqMatrix> find_submodule(const FieldSpec& F, const MatList& gens, int m, std::mt19937_64& rng,
                                       const SplitOptions& opt)
{
    if (m <= 1) return std::nullopt;
    for (int j = 0; j < m; ++j) {
        FqMatrix U = spin(F, gens, unit_vector(m, j));
        if (proper(U, m)) return U;
    }

    MatList D = commutant(F, gens, m);
    if (!is_commutative(F, D) || !is_field(F, D)) {
        auto z = zero_divisor(F, D, rng, opt.trials);
        if (!z) throw Error(Errc::SplitBudgetExceeded, "no zero divisor found in the endomorphism algebra");
        return nullspace(F, *z);
    }

    // End is a field.  Norton's criterion on random elements: a root c of x's
    // minimal polynomial with one-dimensional eigenspace decides simplicity
    // once the vector and the dual vector are spun.
    MatList T = transposed(gens);
    MatList words = gens;
    for (int t = 0; t < opt.trials; ++t) {
        FqMatrix x = random_combination(F, words, rng);
        if (words.size() < 64) {
            FqMatrix w = mul(F, words[rng() % words.size()], words[rng() % words.size()]);
            words.push_back(w);
        }
        for (Fq c : roots(F, minimal_polynomial(F, x))) {
            FqMatrix xc = sub(F, x, scale(F, c, identity(m)));
            FqMatrix K = nullspace(F, xc);
            for (Eigen::Index j = 0; j < K.cols(); ++j) {
                FqMatrix U = spin(F, gens, FqVector(K.col(j)));
                if (proper(U, m)) return U;
            }
            FqMatrix KT = nullspace(F, xc.transpose());
            for (Eigen::Index j = 0; j < KT.cols(); ++j) {
                FqMatrix S = spin(F, T, FqVector(KT.col(j)));
                if (proper(S, m)) return annihilator(F, S, m);
            }
            if (K.cols() == 1) return std::nullopt;
        }
    }

    // Density: with End = D a field, F^m is simple iff the generated algebra has dimension m^2 / dim D.
    if (m <= 48) {
        MatList B = algebra_span(F, gens, m);
        if (static_cast<long long>(B.size()) * static_cast<long long>(D.size()) == static_cast<long long>(m) * m)
            return std::nullopt;
    }
    long long total = 1;
    for (int i = 0; i < m && total <= opt.exhaustive; ++i) total *= F.q();
    if (total <= opt.exhaustive) {
        for (long long t = 1; t < total; ++t) {
            FqVector v(m);
            long long u = t;
            for (int i = 0; i < m; ++i) {
                v(i) = Fq(static_cast<std::uint32_t>(u % F.q()));
                u /= F.q();
            }
            FqMatrix U = spin(F, gens, v);
            if (proper(U, m)) return U;
        }
        return std::nullopt;
    }
    throw Error(Errc::SplitBudgetExceeded, "submodule search exhausted its budget");
}

bool isomorphic_simple(const FieldSpec& F, const MatList& a, const MatList& b, int m)
{
    if (!a.empty() && a[0].rows() != b[0].rows()) return false;
    return !intertwiners(F, a, b, m, m).empty();
}

std::vector<SimpleFactor> composition_factors(const FieldSpec& F, const MatList& gens, int m, std::mt19937_64& rng,
                                              const SplitOptions& opt)
{
    std::vector<SimpleFactor> out;
    std::vector<std::pair<MatList, int>> todo{{gens, m}};
    while (!todo.empty()) {
        auto [g, d] = todo.back();
        todo.pop_back();
        if (d == 0) continue;
        auto U = find_submodule(F, g, d, rng, opt);
        if (!U) {
            bool seen = false;
            for (auto& f : out)
                if (f.dim == d && isomorphic_simple(F, g, f.act, d)) {
                    ++f.multiplicity;
                    seen = true;
                    break;
                }
            if (!seen) out.push_back({g, d, static_cast<int>(commutant(F, g, d).size()), 1});
            continue;
        }
        auto Q = quotient_basis(F, *U, d);
        MatList gs, gq;
        for (const auto& x : g) {
            gs.push_back(restrict_action(F, x, *U));
            gq.push_back(quotient_action(F, x, Q));
        }
        // quotient pushed first so the submodule is handled first
        todo.push_back({gq, static_cast<int>(Q.free.size())});
        todo.push_back({gs, static_cast<int>(U->cols())});
    }
    return out;
}

}  // namespace gradekit
