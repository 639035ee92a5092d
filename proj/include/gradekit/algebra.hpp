#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gradekit/cohomology.hpp"
#include "gradekit/group.hpp"
#include "gradekit/linalg.hpp"

namespace gradekit {

// Limits shared by every search that can blow up.
struct Caps {
    long long exhaustive = 1LL << 20;  // largest vector space scanned element by element
    int random_trials = 512;
    int max_dim = 256;
    std::uint64_t seed = 1;
};

// Finite-dimensional G-graded algebra on a homogeneous basis.
struct GradedAlgebra {
    FieldSpec field;
    FiniteGroup group;
    int dim = 0;
    std::vector<int> deg;
    std::vector<Fq> sc;  // coefficient of e_k in e_i e_j at (i*dim + j)*dim + k
    FqVector unit;

    Fq c(int i, int j, int k) const { return sc[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
    Fq& c(int i, int j, int k) { return sc[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }

    std::vector<int> component(int g) const;
    std::vector<int> support() const;
    FqVector mul(const FqVector& a, const FqVector& b) const;
    FqVector basis_product(int i, int j) const;
    FqMatrix left_mult(const FqVector& a) const;   // x -> a x
    FqMatrix right_mult(const FqVector& a) const;  // x -> x a
    FqMatrix left_mult(int i) const;
    FqMatrix right_mult(int i) const;

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b)
    {
        return a.dim == b.dim && a.field == b.field && a.group == b.group && a.deg == b.deg && a.sc == b.sc &&
               a.unit == b.unit;
    }
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Left module; act[i] is the matrix of basis element i acting on column vectors.
struct GradedModule {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<int> mdeg;
    std::vector<FqMatrix> act;

    const FieldSpec& field() const { return alg->field; }
    const FiniteGroup& group() const { return alg->group; }
    std::vector<int> component(int g) const;
    std::vector<int> support() const;
    FqMatrix projection(int g) const;
};

struct UngradedModule {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<FqMatrix> act;

    const FieldSpec& field() const { return alg->field; }
};

// Validation: grading, associativity, unit.  Throws InvalidStructure naming the first failure.
void validate(const GradedAlgebra& A);
void validate(const GradedModule& W);
void validate(const UngradedModule& M);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

GradedAlgebra group_algebra(const FiniteGroup& G, const FieldSpec& F);
GradedAlgebra twisted_group_algebra(const Cocycle2& alpha);
// M_n(F) (x) F^omega I graded by G: E_ij (x) u_h at index (i*n + j)*|I| + h has degree g_i h g_j^{-1},
// where h is read in G through the embedding.
GradedAlgebra matrix_twisted_algebra(const FieldSpec& F, const FiniteGroup& G, const std::vector<int>& degrees,
                                     const Cocycle2& omega, const GroupHom& embedding);
GradedAlgebra elementary_matrix_algebra(const FieldSpec& F, const FiniteGroup& G, const std::vector<int>& degrees);
// Push the grading forward along a group homomorphism out of A's grading group.
GradedAlgebra regrade(const GradedAlgebra& A, const GroupHom& f);
GradedAlgebra quotient_grading(const GradedAlgebra& A, const std::vector<int>& N);
// The identity component as an algebra graded by the trivial group; basis is A.component(e) in order.
GradedAlgebra base_algebra(const GradedAlgebra& A);
// Basis pairs (i, i') with deg i = deg i', in lexicographic order: the basis of the graded product.
std::vector<std::pair<int, int>> product_pairs(const GradedAlgebra& A, const GradedAlgebra& A2);
GradedAlgebra graded_product(const GradedAlgebra& A, const GradedAlgebra& A2);
// Full tensor product, trivially graded, basis (i, i') at i*dim' + i'.
GradedAlgebra tensor_algebra(const GradedAlgebra& A, const GradedAlgebra& A2);
// graded_product(F^alpha G, A) with v_{deg a} (x) a relabelled as a, so the base algebra is literally A_e.
GradedAlgebra twist_algebra(const Cocycle2& alpha, const GradedAlgebra& A);

// Basis indices generating A as a unital algebra, chosen greedily in index order.
std::vector<int> algebra_generators(const GradedAlgebra& A);

GradedModule regular_module(const AlgebraPtr& A);
std::vector<std::pair<int, int>> module_pairs(const GradedModule& W, const GradedModule& W2);
GradedModule module_product(const GradedModule& W, const GradedModule& W2);
GradedModule twist_module(const Cocycle2& alpha, const GradedModule& W);
GradedModule suspend(const GradedModule& W, int h);
UngradedModule forget_grading(const GradedModule& W);
// Restriction of an A-module to the base algebra A_e.
UngradedModule restrict_to_base(const UngradedModule& M, const AlgebraPtr& base);
UngradedModule full_tensor(const UngradedModule& W, const UngradedModule& W2, const AlgebraPtr& tensor);

struct UnitDecomposition {
    std::vector<FqVector> left, right;  // 1 = sum left[i] * right[i], left in A_{g^{-1}}, right in A_g
};

struct Classification {
    std::vector<int> support;
    std::vector<int> strong;      // G_str
    std::vector<int> invertible;  // G_inv
    std::vector<std::optional<UnitDecomposition>> unit_decomposition;  // per group element
    std::vector<std::optional<FqVector>> unit;                         // per group element
    bool strongly_graded = false;
    bool crossed_product = false;
    bool twisted_group_algebra = false;
    bool graded_division = false;
};

bool is_strong_component(const GradedAlgebra& A, int g, UnitDecomposition* witness = nullptr);
// Homogeneous unit of degree g; Undetermined when the cap stops the search.
std::optional<FqVector> find_homogeneous_unit(const GradedAlgebra& A, int g, const Caps& caps);
Classification classify(const GradedAlgebra& A, const Caps& caps = {});
bool is_unit(const GradedAlgebra& A, const FqVector& a);

// (W (x)^G W2) induced to A (x) A2 compared with W (x) W2 through the canonical map.
struct InductionCheck {
    int induced_dim = 0;
    int tensor_dim = 0;
    int map_rank = 0;
    bool isomorphic() const { return induced_dim == tensor_dim && map_rank == tensor_dim; }
};
InductionCheck induction_identity(const GradedModule& W, const GradedModule& W2);

// graded_product(F^c Gamma, F^c2 Gamma'), graded through pi and pi2, against F^{c x c2} of the pullback
// regraded by Gamma x_G Gamma' -> G, under (v_gamma (x) v_gamma') <-> (gamma, gamma').
struct PullbackCheck {
    int product_dim = 0;
    int pullback_order = 0;
    std::vector<int> pairing;  // product basis index -> pullback element, -1 when outside
    bool degrees_match = false;
    bool constants_match = false;
    bool ok() const { return product_dim == pullback_order && degrees_match && constants_match; }
};
PullbackCheck pullback_check(const Cocycle2& c, const GroupHom& pi, const Cocycle2& c2, const GroupHom& pi2);

}  // namespace gradekit
