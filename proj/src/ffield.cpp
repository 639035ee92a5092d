#include "gradekit/ffield.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gradekit {

namespace {

using Poly = std::vector<int>;  // lowest degree first

// Remainder of a by monic b over Z_p.
Poly poly_rem(Poly a, const Poly& b, int p)
{
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 0));
    return a;
}

bool is_irreducible(const Poly& f, int p)
{
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            Poly g(d + 1);
            long long x = t;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(x % p);
                x /= p;
            }
            g[d] = 1;
            Poly r = poly_rem(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::uint32_t encode(const Poly& c, int p)
{
    std::uint32_t v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
    return v;
}

Poly decode(std::uint32_t v, int p, int k)
{
    Poly c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    return c;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, int p)
{
    const int k = static_cast<int>(mod.size()) - 1;
    Poly prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_rem(prod, mod, p);
}

}  // namespace

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec make_field(int p, int k, std::optional<std::vector<int>> modulus)
{
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(Errc::InvalidArgument, "field degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw Error(Errc::FieldTooLarge, "q exceeds 2^16");
    }

    Poly mod;
    if (modulus) {
        mod = *modulus;
        if (static_cast<int>(mod.size()) != k + 1 || mod[k] != 1)
            throw Error(Errc::ReduciblePolynomial, "modulus must be monic of degree k");
        for (int c : mod)
            if (c < 0 || c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible(mod, p)) throw Error(Errc::ReduciblePolynomial, "modulus is reducible");
    } else if (k == 1) {
        mod = {0, 1};
    } else {
        long long count = q;
        for (long long t = 0; t < count; ++t) {
            Poly f = decode(static_cast<std::uint32_t>(t), p, k);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                mod = f;
                break;
            }
        }
    }

    auto t = std::make_shared<FieldSpec::Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = mod;
    const std::uint32_t m = t->q - 1;

    auto mult = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (k == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
        return encode(mulmod(decode(a, p, k), decode(b, p, k), mod, p), p);
    };

    // Smallest generator of the unit group.
    std::uint32_t gen = 1;
    if (q > 2) {
        for (std::uint32_t c = 2; c < q; ++c) {
            std::uint32_t x = c, order = 1;
            while (x != 1) {
                x = mult(x, c);
                ++order;
            }
            if (order == m) {
                gen = c;
                break;
            }
        }
    }
    t->gen = Fq(gen);
    t->expt.assign(2 * m, Fq(1u));
    t->logt.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e < m; ++e) {
        t->expt[e] = Fq(x);
        t->expt[e + m] = Fq(x);
        t->logt[x] = e;
        x = mult(x, gen);
    }
    t->invt.assign(q, Fq(0u));
    for (std::uint32_t a = 1; a < q; ++a) t->invt[a] = t->expt[(m - t->logt[a]) % m];
    t->negt.assign(q, Fq(0u));
    t->plus_one.assign(q, Fq(0u));
    for (std::uint32_t a = 0; a < q; ++a) {
        Poly c = decode(a, p, k);
        Poly n(k), s = c;
        for (int i = 0; i < k; ++i) n[i] = (p - c[i]) % p;
        s[0] = (s[0] + 1) % p;
        t->negt[a] = Fq(encode(n, p));
        t->plus_one[a] = Fq(encode(s, p));
    }

    FieldSpec F;
    F.t_ = std::move(t);
    return F;
}

FieldSpec parse_field(std::string_view s, std::optional<std::vector<int>> modulus)
{
    auto bad = [&] { return Error(Errc::ParseError, "bad field literal '" + std::string(s) + "'"); };
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') throw bad();
    std::string_view body = s.substr(3, s.size() - 4);
    auto caret = body.find('^');
    auto to_int = [&](std::string_view t) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) throw bad();
        return v;
    };
    if (caret != std::string_view::npos)
        return make_field(to_int(body.substr(0, caret)), to_int(body.substr(caret + 1)), modulus);
    int q = to_int(body);
    if (q > 65536) throw Error(Errc::FieldTooLarge, "q exceeds 2^16");
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int k = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) throw Error(Errc::NonPrime, std::to_string(q) + " is not a prime power");
        return make_field(p, k, modulus);
    }
    throw Error(Errc::NonPrime, std::to_string(q) + " is not a prime power");
}

void FieldSpec::check(Fq a) const
{
    if (a.v >= t_->q) throw Error(Errc::FieldMismatch, "element code out of range for " + name());
}

Fq FieldSpec::inv(Fq a) const
{
    if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return t_->invt[a.v];
}

Fq FieldSpec::pow(Fq a, long long e) const
{
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
        return zero();
    }
    const long long m = t_->q - 1;
    long long r = ((e % m) + m) % m;
    return t_->expt[(t_->logt[a.v] * r) % m];
}

Fq FieldSpec::from_int(long long x) const
{
    long long r = ((x % t_->p) + t_->p) % t_->p;
    return Fq(static_cast<std::uint32_t>(r));
}

std::vector<int> FieldSpec::coeffs(Fq a) const { return decode(a.v, t_->p, t_->k); }

Fq FieldSpec::from_coeffs(const std::vector<int>& c) const
{
    if (static_cast<int>(c.size()) != t_->k) throw Error(Errc::FieldMismatch, "coefficient length");
    for (int x : c)
        if (x < 0 || x >= t_->p) throw Error(Errc::FieldMismatch, "coefficient out of range");
    return Fq(encode(c, t_->p));
}

std::uint32_t FieldSpec::dlog(Fq a) const
{
    if (a.v == 0) throw Error(Errc::LogOfZero, "dlog of zero");
    check(a);
    return t_->logt[a.v];
}

Fq FieldSpec::exp(long long e) const
{
    const long long m = t_->q - 1;
    return t_->expt[((e % m) + m) % m];
}

std::string FieldSpec::name() const
{
    if (t_->k == 1) return "GF(" + std::to_string(t_->p) + ")";
    return "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->k) + ")";
}

std::string FieldSpec::format(Fq a) const
{
    if (t_->k == 1) return std::to_string(a.v);
    auto c = coeffs(a);
    std::string out;
    for (int i = t_->k - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Fq FieldSpec::parse(std::string_view s) const
{
    auto bad = [&] { return Error(Errc::ParseError, "bad field element '" + std::string(s) + "'"); };
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw bad();
    std::vector<long long> c(t_->k, 0);
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        long long coef = 1;
        bool has_coef = j > i;
        if (has_coef) coef = std::stoll(t.substr(i, j - i));
        i = j;
        int power = 0;
        if (i < t.size() && t[i] == 'x') {
            ++i;
            power = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                j = i;
                while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
                if (j == i) throw bad();
                power = std::stoi(t.substr(i, j - i));
                i = j;
            }
        } else if (!has_coef) {
            throw bad();
        }
        if (i < t.size() && t[i] != '+' && t[i] != '-') throw bad();
        if (power >= t_->k) throw bad();
        c[power] += sign * coef;
    }
    std::vector<int> r(t_->k);
    for (int d = 0; d < t_->k; ++d) r[d] = static_cast<int>(((c[d] % t_->p) + t_->p) % t_->p);
    return from_coeffs(r);
}

Fq arith(const FieldSpec& F, ArithOp op, Fq a, Fq b)
{
    F.check(a);
    F.check(b);
    switch (op) {
    case ArithOp::Add: return F.add(a, b);
    case ArithOp::Sub: return F.sub(a, b);
    case ArithOp::Mul: return F.mul(a, b);
    case ArithOp::Div: return F.div(a, b);
    case ArithOp::Pow: return F.pow(a, b.v);
    case ArithOp::Inv: return F.inv(a);
    case ArithOp::Neg: return F.neg(a);
    }
    return a;
}

Fq primitive_root(const FieldSpec& F)
{
    if (!F.has_generator()) throw Error(Errc::TrivialUnitGroup, "GF(2) has no generator");
    return F.generator();
}

std::uint32_t dlog(const FieldSpec& F, Fq x) { return F.dlog(x); }

}  // namespace gradekit
