#include "gradekit/linalg.hpp"

namespace gradekit {

FqMatrix identity(Eigen::Index n)
{
    FqMatrix I = zeros(n, n);
    for (Eigen::Index i = 0; i < n; ++i) I(i, i) = Fq(1u);
    return I;
}

bool is_zero(const FqMatrix& A)
{
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (A(i, j).v) return false;
    return true;
}

bool is_zero(const FqVector& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i).v) return false;
    return true;
}

FqMatrix mul(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B)
{
    FqMatrix C = zeros(A.rows(), B.cols());
    for (Eigen::Index j = 0; j < B.cols(); ++j)
        for (Eigen::Index k = 0; k < A.cols(); ++k) {
            Fq b = B(k, j);
            if (!b.v) continue;
            for (Eigen::Index i = 0; i < A.rows(); ++i)
                if (A(i, k).v) C(i, j) = F.fma(A(i, k), b, C(i, j));
        }
    return C;
}

FqVector mul(const FieldSpec& F, const FqMatrix& A, const FqVector& v)
{
    FqVector r = zero_vector(A.rows());
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
        if (!v(k).v) continue;
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (A(i, k).v) r(i) = F.fma(A(i, k), v(k), r(i));
    }
    return r;
}

FqMatrix add(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B)
{
    FqMatrix C(A.rows(), A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) C(i, j) = F.add(A(i, j), B(i, j));
    return C;
}

FqMatrix sub(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B)
{
    FqMatrix C(A.rows(), A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) C(i, j) = F.sub(A(i, j), B(i, j));
    return C;
}

FqMatrix scale(const FieldSpec& F, Fq c, const FqMatrix& A)
{
    FqMatrix C(A.rows(), A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) C(i, j) = F.mul(c, A(i, j));
    return C;
}

FqVector add(const FieldSpec& F, const FqVector& a, const FqVector& b)
{
    FqVector r(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = F.add(a(i), b(i));
    return r;
}

FqVector sub(const FieldSpec& F, const FqVector& a, const FqVector& b)
{
    FqVector r(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) r(i) = F.sub(a(i), b(i));
    return r;
}

FqVector scale(const FieldSpec& F, Fq c, const FqVector& v)
{
    FqVector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = F.mul(c, v(i));
    return r;
}

void axpy(const FieldSpec& F, Fq c, const FqVector& b, FqVector& a)
{
    if (!c.v) return;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (b(i).v) a(i) = F.fma(c, b(i), a(i));
}

FqMatrix kron(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B)
{
    FqMatrix K = zeros(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            Fq a = A(i, j);
            if (!a.v) continue;
            for (Eigen::Index k = 0; k < B.rows(); ++k)
                for (Eigen::Index l = 0; l < B.cols(); ++l)
                    K(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
        }
    return K;
}

FqMatrix mat_pow(const FieldSpec& F, FqMatrix A, unsigned long long e)
{
    FqMatrix R = identity(A.rows());
    while (e) {
        if (e & 1) R = mul(F, R, A);
        e >>= 1;
        if (e) A = mul(F, A, A);
    }
    return R;
}

FqVector vec(const FqMatrix& A)
{
    FqVector v(A.size());
    Eigen::Index t = 0;
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) v(t++) = A(i, j);
    return v;
}

FqMatrix unvec(const FqVector& v, Eigen::Index rows, Eigen::Index cols)
{
    FqMatrix A(rows, cols);
    Eigen::Index t = 0;
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) A(i, j) = v(t++);
    return A;
}

Echelon rref(const FieldSpec& F, FqMatrix A)
{
    Echelon out;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < A.rows(); ++i)
            if (A(i, c).v) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        A.row(r).swap(A.row(piv));
        Fq s = F.inv(A(r, c));
        for (Eigen::Index j = c; j < A.cols(); ++j) A(r, j) = F.mul(s, A(r, j));
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            if (i == r || !A(i, c).v) continue;
            Fq f = F.neg(A(i, c));
            for (Eigen::Index j = c; j < A.cols(); ++j)
                if (A(r, j).v) A(i, j) = F.fma(f, A(r, j), A(i, j));
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.R = A.topRows(r);
    return out;
}

int rank(const FieldSpec& F, const FqMatrix& A) { return static_cast<int>(rref(F, A).pivots.size()); }

FqMatrix nullspace(const FieldSpec& F, const FqMatrix& A)
{
    Echelon e = rref(F, A);
    const Eigen::Index n = A.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    FqMatrix N = zeros(n, static_cast<Eigen::Index>(free.size()));
    for (std::size_t t = 0; t < free.size(); ++t) {
        N(free[t], t) = Fq(1u);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) N(e.pivots[r], t) = F.neg(e.R(r, free[t]));
    }
    return N;
}

std::optional<FqVector> solve(const FieldSpec& F, const FqMatrix& A, const FqVector& b)
{
    FqMatrix aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    Echelon e = rref(F, aug);
    FqVector x = zero_vector(A.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == A.cols()) return std::nullopt;
        x(e.pivots[r]) = e.R(r, A.cols());
    }
    return x;
}

std::optional<FqMatrix> inverse(const FieldSpec& F, const FqMatrix& A)
{
    if (A.rows() != A.cols()) return std::nullopt;
    const Eigen::Index n = A.rows();
    FqMatrix aug(n, 2 * n);
    aug.leftCols(n) = A;
    aug.rightCols(n) = identity(n);
    Echelon e = rref(F, aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
    return FqMatrix(e.R.rightCols(n));
}

bool is_invertible(const FieldSpec& F, const FqMatrix& A)
{
    return A.rows() == A.cols() && rank(F, A) == A.rows();
}

bool SpanBuilder::add(const FqVector& v)
{
    FqVector r = v;
    FqVector combo;
    if (track_) combo = zero_vector(static_cast<Eigen::Index>(originals_.size()) + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Fq c = r(pivots_[i]);
        if (!c.v) continue;
        Fq f = F_.neg(c);
        axpy(F_, f, rows_[i], r);
        if (track_)
            for (Eigen::Index j = 0; j < combos_[i].size(); ++j)
                if (combos_[i](j).v) combo(j) = F_.fma(f, combos_[i](j), combo(j));
    }
    Eigen::Index piv = -1;
    for (Eigen::Index j = 0; j < r.size(); ++j)
        if (r(j).v) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Fq s = F_.inv(r(piv));
    r = scale(F_, s, r);
    if (track_) {
        combo(originals_.size()) = Fq(1u);
        combo = scale(F_, s, combo);
        for (auto& c : combos_) {
            FqVector grown = zero_vector(combo.size());
            grown.head(c.size()) = c;
            c = grown;
        }
        combos_.push_back(combo);
    }
    rows_.push_back(r);
    pivots_.push_back(static_cast<int>(piv));
    originals_.push_back(v);
    return true;
}

FqVector SpanBuilder::reduce(FqVector v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Fq c = v(pivots_[i]);
        if (c.v) axpy(F_, F_.neg(c), rows_[i], v);
    }
    return v;
}

std::optional<FqVector> SpanBuilder::coordinates(const FqVector& v) const
{
    FqVector r = v;
    FqVector coord = zero_vector(static_cast<Eigen::Index>(originals_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Fq c = r(pivots_[i]);
        if (!c.v) continue;
        axpy(F_, F_.neg(c), rows_[i], r);
        axpy(F_, c, combos_[i], coord);
    }
    if (!is_zero(r)) return std::nullopt;
    return coord;
}

std::vector<int> SpanBuilder::free_columns() const
{
    std::vector<bool> used(n_, false);
    for (int p : pivots_) used[p] = true;
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (!used[j]) out.push_back(j);
    return out;
}

FqMatrix RowSystem::nullspace() const
{
    const auto& rows = span_.basis();
    FqMatrix A = zeros(static_cast<Eigen::Index>(rows.size()), n_);
    for (std::size_t i = 0; i < rows.size(); ++i) A.row(i) = rows[i].transpose();
    return gradekit::nullspace(F_, A);
}

}  // namespace gradekit
