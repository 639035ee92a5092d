#pragma once

#include "gradekit/algebra.hpp"

namespace gradekit {

// FQ8 graded by Q8 / {1, -1} identified with klein4(); the base algebra is F{1, -1}.
struct Q8Instance {
    AlgebraPtr algebra;
    AlgebraPtr base;
    UngradedModule sign;     // -1 acts as -1
    UngradedModule trivial;  // -1 acts as 1
};
Q8Instance q8_instance(const FieldSpec& F);

// Module of base_algebra(A) on F given by one scalar per basis element of A_e.
UngradedModule scalar_module(const AlgebraPtr& base, const std::vector<Fq>& values);
// The same matrices seen as a module over another algebra's base (used after twisting).
UngradedModule rebase(const UngradedModule& M, const AlgebraPtr& A);

}  // namespace gradekit
