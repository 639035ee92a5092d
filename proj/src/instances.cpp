#include "gradekit/instances.hpp"

namespace gradekit {

UngradedModule scalar_module(const AlgebraPtr& base, const std::vector<Fq>& values)
{
    UngradedModule M{base, 1, {}};
    for (Fq v : values) M.act.push_back(FqMatrix::Constant(1, 1, v));
    validate(M);
    return M;
}

UngradedModule rebase(const UngradedModule& M, const AlgebraPtr& A)
{
    return UngradedModule{std::make_shared<const GradedAlgebra>(base_algebra(*A)), M.dim, M.act};
}

Q8Instance q8_instance(const FieldSpec& F)
{
    FiniteGroup Q = quaternion8();
    Q8Instance out;
    out.algebra = std::make_shared<const GradedAlgebra>(regrade(group_algebra(Q, F), quotient_onto(Q, {0, 1}, klein4())));
    out.base = std::make_shared<const GradedAlgebra>(base_algebra(*out.algebra));
    out.sign = scalar_module(out.base, {F.one(), F.neg(F.one())});
    out.trivial = scalar_module(out.base, {F.one(), F.one()});
    return out;
}

}  // namespace gradekit
