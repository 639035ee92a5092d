#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gradekit/error.hpp"

namespace gradekit {

// An element of GF(p^k), stored as the integer sum c_i p^i of its power-basis
// coordinates.  Code 0 is zero and code 1 is one, so Eigen's Zero()/Identity()
// produce the field's zero and identity matrices.
struct Fq {
    std::uint32_t v = 0;
    constexpr Fq() = default;
    constexpr explicit Fq(std::uint32_t code) : v(code) {}
    constexpr explicit Fq(int code) : v(static_cast<std::uint32_t>(code)) {}
    friend constexpr bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend constexpr bool operator!=(Fq a, Fq b) { return a.v != b.v; }
    friend constexpr bool operator<(Fq a, Fq b) { return a.v < b.v; }
    bool is_zero() const { return v == 0; }
};

// Prints the raw code; FieldSpec::format gives the field-aware form.
inline std::ostream& operator<<(std::ostream& os, Fq a) { return os << a.v; }

enum class ArithOp { Add, Sub, Mul, Div, Pow, Inv, Neg };

class FieldSpec {
public:
    FieldSpec() = default;

    int p() const { return t_->p; }
    int k() const { return t_->k; }
    std::uint32_t q() const { return t_->q; }
    // Monic, lowest degree first: c0 + c1 x + ... + x^k.
    const std::vector<int>& modulus() const { return t_->modulus; }

    Fq zero() const { return Fq(0u); }
    Fq one() const { return Fq(1u); }

    Fq add(Fq a, Fq b) const
    {
        if (t_->k == 1) {
            std::uint32_t s = a.v + b.v;
            return Fq(s >= t_->q ? s - t_->q : s);
        }
        if (a.v == 0) return b;
        if (b.v == 0) return a;
        // Zech logarithm: a + b = a (1 + b/a).
        return mul(a, t_->plus_one[div(b, a).v]);
    }
    Fq neg(Fq a) const { return t_->k == 1 ? Fq(a.v == 0 ? 0u : t_->q - a.v) : t_->negt[a.v]; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const
    {
        if (t_->k == 1)
            return Fq(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % t_->q));
        if (a.v == 0 || b.v == 0) return Fq(0u);
        return t_->expt[t_->logt[a.v] + t_->logt[b.v]];
    }
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, long long e) const;
    // a*b + c, the inner-loop shape of elimination.
    Fq fma(Fq a, Fq b, Fq c) const { return add(mul(a, b), c); }

    // Image of an integer under Z -> GF(p).
    Fq from_int(long long x) const;
    std::vector<int> coeffs(Fq a) const;
    Fq from_coeffs(const std::vector<int>& c) const;
    void check(Fq a) const;

    bool has_generator() const { return t_->q > 2; }
    Fq generator() const { return t_->gen; }
    // Discrete logarithm to the base generator(); the unit group of GF(2) is trivial and dlog(1) = 0.
    std::uint32_t dlog(Fq a) const;
    Fq exp(long long e) const;

    std::string format(Fq a) const;
    Fq parse(std::string_view s) const;
    // "GF(5)" or "GF(3^2)".
    std::string name() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b)
    {
        return a.t_ == b.t_ || (a.t_ && b.t_ && a.t_->p == b.t_->p && a.t_->k == b.t_->k &&
                                a.t_->modulus == b.t_->modulus);
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    struct Tables {
        int p = 0, k = 0;
        std::uint32_t q = 0;
        std::vector<int> modulus;
        Fq gen{1u};
        std::vector<Fq> expt;  // length 2(q-1) so exponent sums need no reduction
        std::vector<std::uint32_t> logt;
        std::vector<Fq> invt;
        std::vector<Fq> negt;
        std::vector<Fq> plus_one;
    };
    std::shared_ptr<const Tables> t_;

    friend FieldSpec make_field(int p, int k, std::optional<std::vector<int>> modulus);
};

FieldSpec make_field(int p, int k = 1, std::optional<std::vector<int>> modulus = std::nullopt);

// Parses "GF(5)", "GF(9)", "GF(3^2)".
FieldSpec parse_field(std::string_view s, std::optional<std::vector<int>> modulus = std::nullopt);

bool is_prime(long long n);

Fq arith(const FieldSpec& F, ArithOp op, Fq a, Fq b = Fq(0u));

// Smallest generator of the unit group in code order; throws TrivialUnitGroup for q = 2.
Fq primitive_root(const FieldSpec& F);

std::uint32_t dlog(const FieldSpec& F, Fq x);

}  // namespace gradekit

namespace Eigen {
template <>
struct NumTraits<gradekit::Fq> : GenericNumTraits<gradekit::Fq> {
    typedef gradekit::Fq Real;
    typedef gradekit::Fq NonInteger;
    typedef gradekit::Fq Literal;
    typedef gradekit::Fq Nested;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
};
}  // namespace Eigen
