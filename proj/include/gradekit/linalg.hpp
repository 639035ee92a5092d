#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gradekit/ffield.hpp"

namespace gradekit {

using FqMatrix = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using FqVector = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;

inline FqMatrix zeros(Eigen::Index r, Eigen::Index c) { return FqMatrix::Constant(r, c, Fq(0u)); }
inline FqVector zero_vector(Eigen::Index n) { return FqVector::Constant(n, Fq(0u)); }
inline FqVector unit_vector(Eigen::Index n, Eigen::Index i)
{
    FqVector v = zero_vector(n);
    v(i) = Fq(1u);
    return v;
}
FqMatrix identity(Eigen::Index n);

bool is_zero(const FqMatrix& A);
bool is_zero(const FqVector& v);

FqMatrix mul(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B);
FqVector mul(const FieldSpec& F, const FqMatrix& A, const FqVector& v);
FqMatrix add(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix sub(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix scale(const FieldSpec& F, Fq c, const FqMatrix& A);
FqVector add(const FieldSpec& F, const FqVector& a, const FqVector& b);
FqVector sub(const FieldSpec& F, const FqVector& a, const FqVector& b);
FqVector scale(const FieldSpec& F, Fq c, const FqVector& v);
// a += c * b
void axpy(const FieldSpec& F, Fq c, const FqVector& b, FqVector& a);
FqMatrix kron(const FieldSpec& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_pow(const FieldSpec& F, FqMatrix A, unsigned long long e);
// Column-major flattening of a matrix.
FqVector vec(const FqMatrix& A);
FqMatrix unvec(const FqVector& v, Eigen::Index rows, Eigen::Index cols);

struct Echelon {
    FqMatrix R;               // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
};
Echelon rref(const FieldSpec& F, FqMatrix A);
int rank(const FieldSpec& F, const FqMatrix& A);
// Columns form a basis of {x : A x = 0}, one column per free variable.
FqMatrix nullspace(const FieldSpec& F, const FqMatrix& A);
std::optional<FqVector> solve(const FieldSpec& F, const FqMatrix& A, const FqVector& b);
std::optional<FqMatrix> inverse(const FieldSpec& F, const FqMatrix& A);
bool is_invertible(const FieldSpec& F, const FqMatrix& A);

// Incrementally built row space.  Stored rows are reduced against earlier
// pivots with pivot entry one, so sequential reduction decides membership.
// Each stored row remembers its expansion in the inserted vectors, which
// yields coordinates relative to the independent inserted vectors.
class SpanBuilder {
public:
    SpanBuilder(const FieldSpec& F, int n, bool track = false) : F_(F), n_(n), track_(track) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // Returns true when v was independent of the current span and got added.
    bool add(const FqVector& v);
    FqVector reduce(FqVector v) const;
    bool contains(const FqVector& v) const { return is_zero(reduce(v)); }
    // Coordinates of v in terms of the accepted (independent) inserted
    // vectors, in insertion order; needs track = true.
    std::optional<FqVector> coordinates(const FqVector& v) const;
    const std::vector<FqVector>& basis() const { return originals_; }
    const std::vector<int>& pivots() const { return pivots_; }
    // Columns of the ambient space not used as pivots, ascending.
    std::vector<int> free_columns() const;

private:
    FieldSpec F_;
    int n_;
    bool track_;
    std::vector<FqVector> rows_;
    std::vector<int> pivots_;
    std::vector<FqVector> combos_;  // rows_[i] = sum combos_[i][j] * originals_[j]
    std::vector<FqVector> originals_;
};

// Basis of the null space of the matrix whose rows are fed to `add_row`;
// rows are reduced on the fly so tall systems never materialize.
class RowSystem {
public:
    RowSystem(const FieldSpec& F, int unknowns) : span_(F, unknowns), F_(F), n_(unknowns) {}
    void add_row(const FqVector& r) { span_.add(r); }
    int rank() const { return span_.dim(); }
    FqMatrix nullspace() const;

private:
    SpanBuilder span_;
    FieldSpec F_;
    int n_;
};

}  // namespace gradekit
