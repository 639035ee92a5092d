#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gradekit/linalg.hpp"

namespace gradekit {

// Tools for a finite family of m x m matrices acting on columns of F^m.
// Nothing here knows about gradings: graded questions pass the component
// projections as extra generators.
using MatList = std::vector<FqMatrix>;

// Basis (as columns) of the smallest subspace containing the columns of
// `seeds` and stable under every generator.
FqMatrix spin(const FieldSpec& F, const MatList& gens, const FqMatrix& seeds);
FqMatrix spin(const FieldSpec& F, const MatList& gens, const FqVector& seed);

// Basis of {X : X g = g X for all g}.
MatList commutant(const FieldSpec& F, const MatList& gens, int m);
// Basis of the unital algebra generated by gens.
MatList algebra_span(const FieldSpec& F, const MatList& gens, int m);
// Basis of {X : X a = b X} for paired families; the intertwiners from (a) to (b).
MatList intertwiners(const FieldSpec& F, const MatList& a, const MatList& b, int ma, int mb);

// For a commutative algebra given by a basis of matrices containing the identity.
bool is_field(const FieldSpec& F, const MatList& basis);
bool is_commutative(const FieldSpec& F, const MatList& basis);
// Nonzero singular element of a finite-dimensional matrix algebra that is not a
// division algebra; nullopt when the budget of random elements runs out.
std::optional<FqMatrix> zero_divisor(const FieldSpec& F, const MatList& basis, std::mt19937_64& rng, int trials);

// Coefficients c_0..c_d (monic) of the minimal polynomial of X.
std::vector<Fq> minimal_polynomial(const FieldSpec& F, const FqMatrix& X);
std::vector<Fq> roots(const FieldSpec& F, const std::vector<Fq>& poly);

// Action on an invariant subspace with basis columns U, and on the quotient by it.
FqMatrix restrict_action(const FieldSpec& F, const FqMatrix& g, const FqMatrix& U);
struct QuotientBasis {
    FqMatrix U;                 // invariant subspace
    std::vector<int> free;      // coordinates kept as quotient basis
    SpanBuilder span;
};
QuotientBasis quotient_basis(const FieldSpec& F, const FqMatrix& U, int m);
FqMatrix quotient_action(const FieldSpec& F, const FqMatrix& g, const QuotientBasis& Q);
// Submodule annihilated by a transposed-invariant subspace S of the dual.
FqMatrix annihilator(const FieldSpec& F, const FqMatrix& S, int m);

struct SplitOptions {
    long long exhaustive = 1LL << 20;
    int trials = 512;
};

// Proper nonzero invariant subspace, or nullopt when F^m is simple under gens.
// Throws SplitBudgetExceeded when neither a certificate nor a witness is found.
std::optional<FqMatrix> find_submodule(const FieldSpec& F, const MatList& gens, int m, std::mt19937_64& rng,
                                       const SplitOptions& opt = {});

struct SimpleFactor {
    MatList act;
    int dim = 0;
    int end_dim = 0;
    int multiplicity = 0;  // number of composition factors isomorphic to this one
};

// Composition factors up to isomorphism, in order of first appearance.
std::vector<SimpleFactor> composition_factors(const FieldSpec& F, const MatList& gens, int m, std::mt19937_64& rng,
                                              const SplitOptions& opt = {});
bool isomorphic_simple(const FieldSpec& F, const MatList& a, const MatList& b, int m);

// Uniform-ish field element from raw engine output (no std distributions, so
// streams agree across standard libraries).
inline Fq random_element(const FieldSpec& F, std::mt19937_64& rng) { return Fq(static_cast<std::uint32_t>(rng() % F.q())); }

}  // namespace gradekit
