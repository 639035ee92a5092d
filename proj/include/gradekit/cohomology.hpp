#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gradekit/ffield.hpp"
#include "gradekit/group.hpp"

namespace gradekit {

// Normalized 2-cocycle G x G -> F* with trivial action, stored as a full
// row-major table.
struct Cocycle2 {
    FiniteGroup group;
    FieldSpec field;
    std::vector<Fq> table;

    Fq operator()(int g, int h) const { return table[g * group.n + h]; }
    Fq& at(int g, int h) { return table[g * group.n + h]; }
};

struct CocycleCheck {
    bool ok = true;
    std::array<int, 3> triple{-1, -1, -1};  // first violating (g,h,k)
};

CocycleCheck is_cocycle(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& table);
bool is_normalized(const FiniteGroup& G, const std::vector<Fq>& table);

struct Normalized {
    Cocycle2 cocycle;
    std::vector<Fq> lambda;  // normalized = input * coboundary(lambda), pointwise
};
// Validates the cocycle identity and returns the cohomologous normalized table.
Normalized normalize(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& table);
// Validated, normalized construction: throws NotACocycle / NotNormalized.
Cocycle2 make_cocycle(const FiniteGroup& G, const FieldSpec& F, std::vector<Fq> table);

Cocycle2 trivial_cocycle(const FiniteGroup& G, const FieldSpec& F);
// (g,h) -> lambda(g) lambda(h) lambda(gh)^{-1}
Cocycle2 coboundary(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& lambda);
// Unnormalized variant used for witness checks (lambda(e) may differ from 1).
std::vector<Fq> coboundary_table(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& lambda);
// alpha(a^i b^j, a^k b^l) = (-1)^{jk} on klein4().
Cocycle2 klein4_pauli(const FieldSpec& F);

Cocycle2 cocycle_product(const Cocycle2& a, const Cocycle2& b);
Cocycle2 cocycle_inverse(const Cocycle2& a);
Cocycle2 cocycle_power(const Cocycle2& a, long long k);

struct ClassCoords {
    std::vector<long long> r;
    friend bool operator==(const ClassCoords& a, const ClassCoords& b) { return a.r == b.r; }
    friend bool operator!=(const ClassCoords& a, const ClassCoords& b) { return a.r != b.r; }
    bool is_zero() const
    {
        for (auto x : r)
            if (x) return false;
        return true;
    }
};

struct CohomologyGroup {
    FiniteGroup group;
    FieldSpec field;
    std::vector<long long> invariant_factors;
    std::vector<Cocycle2> generator_cocycles;
    long long order = 1;

    // Solver state shared by class_of: cocycles in dlog coordinates over the
    // normalized entries, the kernel basis of the cocycle condition and the
    // change of basis on the quotient.
    long long modulus = 1;
    std::vector<int> unknown_of;  // pair index g*n+h -> unknown, -1 for identity pairs
    std::vector<Eigen::Matrix<long long, Eigen::Dynamic, 1>> z_generators;
    std::vector<long long> z_orders;
    std::vector<Eigen::Index> z_slots;
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> z_qinv;
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> quotient_p;
    std::vector<Eigen::Index> factor_rows;  // row of quotient_p for each invariant factor
};

CohomologyGroup h2(const FiniteGroup& G, const FieldSpec& F);
ClassCoords class_of(const Cocycle2& a, const CohomologyGroup& H);
// Cocycle with the given class coordinates, built from the generators.
Cocycle2 class_representative(const CohomologyGroup& H, const ClassCoords& c);
// Every class, in lexicographic coordinate order.
std::vector<ClassCoords> all_classes(const CohomologyGroup& H);

// lambda with b = a * coboundary_table(lambda), or nullopt when the classes differ.
std::optional<std::vector<Fq>> cohomologous(const Cocycle2& a, const Cocycle2& b);
std::optional<std::vector<Fq>> cohomologous_tables(const FiniteGroup& G, const FieldSpec& F,
                                                   const std::vector<Fq>& a, const std::vector<Fq>& b);

Cocycle2 inflate(const Cocycle2& a, const GroupHom& pi);
Cocycle2 restrict_cocycle(const Cocycle2& a, const GroupHom& embedding);
Cocycle2 pullback_cocycle(const Cocycle2& c, const Cocycle2& c2, const Pullback& pb);
// Transport along an isomorphism-like relabeling: result(x,y) = a(f(x), f(y)).
Cocycle2 transport(const Cocycle2& a, const FiniteGroup& source, const std::vector<int>& f);

}  // namespace gradekit
