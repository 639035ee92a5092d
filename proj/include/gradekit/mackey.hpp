#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradekit/endo.hpp"

namespace gradekit {

// A graded module together with the A_e-map M -> W_e, m -> 1 (x) m.
struct InducedModule {
    GradedModule module;
    FqMatrix iota;  // module.dim x M.dim
};

// M is a module over base_algebra(*A): its k-th matrix is the action of the k-th element of A_e.
void check_base_module(const AlgebraPtr& A, const UngradedModule& M);
InducedModule induced_graded(const AlgebraPtr& A, const UngradedModule& M);
// Largest graded submodule with zero g-component.
GradedSubmodule localizing_radical(const GradedModule& W, int g);
InducedModule associated(const AlgebraPtr& A, const UngradedModule& M);
Subgroup inertia_of_base(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps = {});

// End_{A_e}(M) = F and M simple.
bool is_absolutely_simple(const UngradedModule& M, const Caps& caps = {});

enum class ExtendStatus { Extended, Refuted, NotFound };

struct ExtendResult {
    ExtendStatus status = ExtendStatus::NotFound;
    std::optional<UngradedModule> module;
    std::string method;  // "cocycle", "skew-search" or empty
    std::string reason;
    std::vector<Fq> lambda;        // cocycle path: 1 = omega * d(lambda) on G
    std::vector<FqMatrix> skew;    // phi_g for every g, as matrices on the associated module
};

struct ObstructionReport {
    AlgebraPtr algebra;
    UngradedModule base_module;
    InducedModule associated;
    GradedEndAlgebra end_algebra;
    Subgroup inertia;
    Cocycle2 omega;  // on inertia.group
    std::vector<FqMatrix> v;  // V_h spanning End^h, per element of inertia.group; V_e = identity
    ClassCoords omega_class;
    std::vector<long long> h2_factors;  // of H^2(inertia, F*)
    bool invariant = false;
    bool strongly_graded = false;
};

// Throws NotAbsolutelySimple when End_{A_e}(M) is bigger than F or M is not simple.
ObstructionReport obstruction(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps = {});

// Skew system phi_g in E_g (one per element of G) with phi_g phi_h = phi_gh under
// right composition; exhaustive over the units of E on a generating set of G.
std::optional<std::vector<FqMatrix>> skew_system_search(const GradedEndAlgebra& E, const Caps& caps = {});
// The A-module on M defined by a skew system on the associated module: a_g * m = a_g (m) phi_g^{-1}.
UngradedModule module_from_skew(const AlgebraPtr& A, const UngradedModule& M, const InducedModule& W,
                                const std::vector<FqMatrix>& phi);
ExtendResult extend(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps = {});
// Same decision using only the exhaustive skew-system search.
ExtendResult extend_by_search(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps = {});

struct TheoremARow {
    ClassCoords alpha_class;
    bool expected = false;  // [alpha] = omega_G([M])
    bool extended = false;
    bool consistent = false;
};
struct TheoremATable {
    ClassCoords omega_class;
    std::vector<long long> h2_factors;
    bool strongly_graded = false;
    std::vector<TheoremARow> rows;
    bool all_consistent() const
    {
        for (const auto& r : rows)
            if (!r.consistent) return false;
        return true;
    }
};
// Runs extend on twist_algebra(alpha^{-1}, A) for every class of H^2(G, F*) up to max_classes.
TheoremATable verify_theorem_A(const AlgebraPtr& A, const UngradedModule& M, const Caps& caps = {},
                               long long max_classes = 64);

struct WedderburnReport {
    UngradedModule M;          // minimal left ideal of A_e
    FqMatrix M_embedding;      // columns: M inside A_e (coordinates on A.component(e))
    InducedModule W;
    GradedEndAlgebra D;
    Subgroup inertia;
    Cocycle2 omega;
    ClassCoords omega_class;
    std::vector<long long> h2_factors;
    int n = 0;
    std::vector<int> degrees;  // g_i of the D-basis w_i
    bool surjective = false;
    int kernel_dim = 0;
    bool graded_simple = false;
    // A -> M_n(F) (x) F^omega I; column i holds the image of the i-th basis element.
    std::optional<GradedAlgebra> model;
    std::optional<FqMatrix> iso_certificate;
    bool certificate_verified = false;
};
WedderburnReport wedderburn(const AlgebraPtr& A, const Caps& caps = {});

struct CorrespondenceRow {
    int source = -1;       // index into twisted_simples
    int target = -1;       // index into simples_above, -1 when no match
    int dim = 0;
    bool simple = false;
    bool lies_above = false;
};
struct Correspondence {
    std::vector<SimpleModule> twisted_simples;  // simple F^alpha G-modules
    std::vector<SimpleModule> simples_above;    // simple A-modules lying above M
    std::vector<CorrespondenceRow> rows;
    bool bijective = false;
};
bool lies_above(const UngradedModule& V, const AlgebraPtr& A, const UngradedModule& M);
// Mtilde is an extension of M over twist_algebra(alpha^{-1}, A).
Correspondence correspondence(const AlgebraPtr& A, const UngradedModule& M, const Cocycle2& alpha,
                              const UngradedModule& Mtilde, const Caps& caps = {});

// Class of the cocycle extracted from end_graded of a graded module, as a cocycle on G
// (throws when the support is not all of G).
Cocycle2 end_cocycle(const GradedModule& W);

struct EndTwistCheck {
    bool maps_into = false;     // each alpha(phi) intertwines the twisted action
    bool bijective = false;
    bool multiplicative = false;
    bool scalar_law = false;
    bool ok() const { return maps_into && bijective && multiplicative && scalar_law; }
};
// end_graded(twist_module(alpha, W)) against twist_algebra(alpha, end_graded(W)) through phi -> alpha(phi).
EndTwistCheck endtwist_check(const GradedModule& W, const Cocycle2& alpha);

struct EndTensorCheck {
    int product_dim = 0;  // dim graded_product(End W, End W')
    int end_dim = 0;      // dim End(W (x)^G W')
    int rank = 0;
    bool multiplicative = false;
    bool ok() const { return product_dim == end_dim && rank == end_dim && multiplicative; }
};
EndTensorCheck end_tensor_check(const GradedModule& W, const GradedModule& W2);

// Module of the base algebra given by a basis of a left ideal of A_e (columns in A_e coordinates).
UngradedModule ideal_module(const AlgebraPtr& base, const FqMatrix& ideal);

}  // namespace gradekit
