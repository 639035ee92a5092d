#pragma once

#include <optional>
#include <vector>

#include "gradekit/algebra.hpp"

namespace gradekit {

// Endomorphisms act on the right: (w)(phi psi) = ((w)phi)psi.  A matrix X
// stores (w)phi as X w, so the product phi psi has matrix Psi * Phi.
inline FqMatrix compose(const FieldSpec& F, const FqMatrix& phi, const FqMatrix& psi) { return mul(F, psi, phi); }

struct GradedEndAlgebra {
    GradedAlgebra alg;              // basis: homogeneous endomorphisms, deg h maps W_g into W_{gh}
    std::vector<FqMatrix> matrices;  // one per basis element
};

// Basis of Hom^{r(h)}_A(W, W2) as W2.dim x W.dim matrices.
std::vector<FqMatrix> hom_graded(const GradedModule& W, const GradedModule& W2, int h);
GradedEndAlgebra end_graded(const GradedModule& W);
// Coordinates of an endomorphism matrix in the basis of E; nullopt when it is not in E.
std::optional<FqVector> end_coordinates(const GradedEndAlgebra& E, const FqMatrix& X);

struct LeftRep {
    std::vector<FqMatrix> matrices;
    FqMatrix kernel;  // columns: coordinates in A of a kernel basis
};
LeftRep left_rep(const GradedModule& W);

struct GradedSubmodule {
    GradedModule module;
    FqMatrix embedding;  // columns: homogeneous basis of the submodule inside the ambient module
};
// U must be stable under the action and the component projections.
GradedSubmodule graded_submodule(const GradedModule& W, const FqMatrix& U);
GradedModule graded_quotient(const GradedModule& W, const FqMatrix& U);

struct GradedSimplicity {
    bool simple = false;
    std::optional<FqMatrix> witness;  // proper nonzero graded submodule
};
GradedSimplicity graded_simplicity(const GradedModule& W, const Caps& caps = {});
bool is_graded_simple(const GradedModule& W, const Caps& caps = {});
bool is_abs_graded_simple(const GradedModule& W, const Caps& caps = {});
// No proper nonzero graded two-sided ideals; the witness is such an ideal.
GradedSimplicity graded_simplicity(const GradedAlgebra& A, const Caps& caps = {});
bool is_graded_simple(const GradedAlgebra& A, const Caps& caps = {});

struct TwistedCocycle {
    Subgroup support;
    Cocycle2 alpha;                 // on support.group
    std::vector<FqVector> basis;    // v_h for each element of support.group, v_e the unit
};
// For an algebra whose nonzero components are lines: v_g v_h = alpha(g,h) v_{gh}.
TwistedCocycle extract_twisted_cocycle(const GradedAlgebra& E);

std::vector<FqVector> detect_crossed_product(const GradedAlgebra& A, const Caps& caps = {});

Subgroup inertia(const GradedModule& W, const Caps& caps = {});
Subgroup inertia_bruteforce(const GradedModule& W, const Caps& caps = {});
// Invertible degree-preserving map W -> W2, searched in the span of hom_graded(W, W2, e).
std::optional<FqMatrix> graded_isomorphism(const GradedModule& W, const GradedModule& W2, const Caps& caps = {});

GradedSubmodule minimal_graded_ideal(const AlgebraPtr& A, const Caps& caps = {});
GradedSubmodule minimal_graded_submodule(const GradedModule& W, const Caps& caps = {});

struct SimpleModule {
    UngradedModule module;
    int end_dim = 1;
    int multiplicity = 1;  // in the regular module
};
std::vector<SimpleModule> simple_modules(const AlgebraPtr& A, const Caps& caps = {});

}  // namespace gradekit
