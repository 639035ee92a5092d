#include "gradekit/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "gradekit/smith.hpp"

namespace gradekit {

using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

namespace {

void require_same(const Cocycle2& a, const Cocycle2& b)
{
    if (a.group != b.group || a.field != b.field)
        throw Error(Errc::GroupOrFieldMismatch, "cocycles live on different groups or fields");
}

}  // namespace

CocycleCheck is_cocycle(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& t)
{
    const int n = G.n;
    if (static_cast<int>(t.size()) != n * n) throw Error(Errc::InvalidArgument, "cocycle table has wrong size");
    for (Fq x : t) {
        F.check(x);
        if (x.is_zero()) throw Error(Errc::ZeroEntry, "cocycle entries must be units");
    }
    CocycleCheck out;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                Fq lhs = F.mul(t[g * n + h], t[G.mul(g, h) * n + k]);
                Fq rhs = F.mul(t[h * n + k], t[g * n + G.mul(h, k)]);
                if (lhs != rhs) {
                    out.ok = false;
                    out.triple = {g, h, k};
                    return out;
                }
            }
    return out;
}

bool is_normalized(const FiniteGroup& G, const std::vector<Fq>& t)
{
    for (int g = 0; g < G.n; ++g)
        if (t[G.e * G.n + g] != Fq(1u) || t[g * G.n + G.e] != Fq(1u)) return false;
    return true;
}

Normalized normalize(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& table)
{
    auto chk = is_cocycle(G, F, table);
    if (!chk.ok)
        throw Error(Errc::NotACocycle, "cocycle identity fails at (" + G.labels[chk.triple[0]] + "," +
                                           G.labels[chk.triple[1]] + "," + G.labels[chk.triple[2]] + ")");
    // alpha(e,h) = alpha(g,e) = alpha(e,e) for any cocycle, so a constant lambda suffices.
    Fq c = F.inv(table[G.e * G.n + G.e]);
    Normalized out;
    out.lambda.assign(G.n, c);
    out.cocycle.group = G;
    out.cocycle.field = F;
    out.cocycle.table.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) out.cocycle.table[i] = F.mul(table[i], c);
    return out;
}

Cocycle2 make_cocycle(const FiniteGroup& G, const FieldSpec& F, std::vector<Fq> table)
{
    auto chk = is_cocycle(G, F, table);
    if (!chk.ok) throw Error(Errc::NotACocycle, "cocycle identity fails");
    if (!is_normalized(G, table)) throw Error(Errc::NotNormalized, "cocycle is not normalized");
    return Cocycle2{G, F, std::move(table)};
}

Cocycle2 trivial_cocycle(const FiniteGroup& G, const FieldSpec& F)
{
    return Cocycle2{G, F, std::vector<Fq>(G.n * G.n, Fq(1u))};
}

std::vector<Fq> coboundary_table(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& lambda)
{
    if (static_cast<int>(lambda.size()) != G.n) throw Error(Errc::InvalidArgument, "lambda has wrong length");
    for (Fq x : lambda)
        if (x.is_zero()) throw Error(Errc::ZeroValue, "lambda must take unit values");
    std::vector<Fq> t(G.n * G.n);
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) t[g * G.n + h] = F.div(F.mul(lambda[g], lambda[h]), lambda[G.mul(g, h)]);
    return t;
}

Cocycle2 coboundary(const FiniteGroup& G, const FieldSpec& F, const std::vector<Fq>& lambda)
{
    if (static_cast<int>(lambda.size()) == G.n && lambda[G.e] != Fq(1u))
        throw Error(Errc::InvalidArgument, "coboundary needs lambda(e) = 1");
    return Cocycle2{G, F, coboundary_table(G, F, lambda)};
}

Cocycle2 klein4_pauli(const FieldSpec& F)
{
    FiniteGroup G = klein4();
    std::vector<Fq> t(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) t[x * 4 + y] = ((x >> 1) & (y & 1)) ? F.neg(F.one()) : F.one();
    return make_cocycle(G, F, t);
}

Cocycle2 cocycle_product(const Cocycle2& a, const Cocycle2& b)
{
    require_same(a, b);
    Cocycle2 c = a;
    for (std::size_t i = 0; i < c.table.size(); ++i) c.table[i] = a.field.mul(a.table[i], b.table[i]);
    return c;
}

Cocycle2 cocycle_inverse(const Cocycle2& a)
{
    Cocycle2 c = a;
    for (auto& x : c.table) x = a.field.inv(x);
    return c;
}

Cocycle2 cocycle_power(const Cocycle2& a, long long k)
{
    Cocycle2 c = a;
    for (auto& x : c.table) x = a.field.pow(x, k);
    return c;
}

CohomologyGroup h2(const FiniteGroup& G, const FieldSpec& F)
{
    CohomologyGroup H;
    H.group = G;
    H.field = F;
    const int n = G.n;
    const long long m = static_cast<long long>(F.q()) - 1;
    H.modulus = m;
    H.unknown_of.assign(n * n, -1);
    int U = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (g != G.e && h != G.e) H.unknown_of[g * n + h] = U++;
    if (m == 1 || U == 0) return H;

    // Linearized cocycle condition over Z/m.
    ModEchelon<long long> ech(U, m);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                std::vector<long long> row(U, 0);
                auto put = [&](int a, int b, long long s) {
                    int u = H.unknown_of[a * n + b];
                    if (u >= 0) row[u] += s;
                };
                put(g, h, 1);
                put(G.mul(g, h), k, 1);
                put(h, k, -1);
                put(g, G.mul(h, k), -1);
                ech.add(std::move(row));
            }
    IMat R = ech.matrix();
    ModKernel<long long> Z = kernel_mod<long long>(R, m);
    H.z_generators = Z.generators;
    H.z_orders = Z.orders;
    H.z_slots = Z.slots;
    H.z_qinv = Z.Qinv;
    const int r = static_cast<int>(Z.generators.size());
    if (r == 0) return H;

    // Z^2 = (+) Z/o_i; quotient by the coboundaries of the delta functions.
    long long M = 1;
    for (long long o : Z.orders) M = std::lcm(M, o);
    IMat rel = IMat::Zero(r, r + n - 1);
    for (int i = 0; i < r; ++i) rel(i, i) = Z.orders[i];
    int col = r;
    for (int x = 0; x < n; ++x) {
        if (x == G.e) continue;
        IVec d = IVec::Zero(U);
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                int u = H.unknown_of[g * n + h];
                if (u < 0) continue;
                d(u) = mod_reduce<long long>((g == x) + (h == x) - (G.mul(g, h) == x), m);
            }
        auto c = Z.coordinates(d);
        for (int i = 0; i < r; ++i) rel(i, col) = c[i];
        ++col;
    }
    SmithForm<long long> S = smith_normal_form<long long>(rel, M, SmithOptions{true, false});
    H.quotient_p = S.P;
    for (int j = 0; j < r; ++j) {
        long long d = S.D(j, j);
        long long f = d == 0 ? M : std::gcd(d, M);
        if (f == 1) continue;
        H.invariant_factors.push_back(f);
        H.factor_rows.push_back(j);
        H.order *= f;
        IVec x = IVec::Zero(U);
        for (int i = 0; i < r; ++i) {
            long long ci = mod_reduce(S.Pinv(i, j), Z.orders[i]);
            for (int u = 0; u < U; ++u) x(u) = mod_reduce(x(u) + ci * Z.generators[i](u), m);
        }
        std::vector<Fq> t(n * n, Fq(1u));
        for (int p = 0; p < n * n; ++p)
            if (H.unknown_of[p] >= 0) t[p] = F.exp(x(H.unknown_of[p]));
        H.generator_cocycles.push_back(make_cocycle(G, F, t));
    }
    return H;
}

ClassCoords class_of(const Cocycle2& a, const CohomologyGroup& H)
{
    if (a.group != H.group || a.field != H.field)
        throw Error(Errc::GroupOrFieldMismatch, "cocycle and cohomology group differ");
    Normalized nz = normalize(a.group, a.field, a.table);
    ClassCoords out;
    if (H.invariant_factors.empty()) return out;
    const int n = a.group.n;
    const int U = static_cast<int>(H.z_qinv.rows());
    IVec x(U);
    for (int p = 0; p < n * n; ++p)
        if (H.unknown_of[p] >= 0) x(H.unknown_of[p]) = a.field.dlog(nz.cocycle.table[p]);
    const long long m = H.modulus;
    std::vector<long long> c;
    for (std::size_t g = 0; g < H.z_generators.size(); ++g) {
        long long y = 0;
        for (int k = 0; k < U; ++k) y = mod_reduce(y + H.z_qinv(H.z_slots[g], k) * x(k), m);
        const long long step = m / H.z_orders[g];
        if (y % step != 0) throw Error(Errc::NotACocycle, "table is not in the cocycle lattice");
        c.push_back((y / step) % H.z_orders[g]);
    }
    for (std::size_t j = 0; j < H.factor_rows.size(); ++j) {
        long long u = 0;
        const long long f = H.invariant_factors[j];
        for (std::size_t i = 0; i < c.size(); ++i) u = mod_reduce(u + H.quotient_p(H.factor_rows[j], i) * c[i], f);
        out.r.push_back(u);
    }
    return out;
}

Cocycle2 class_representative(const CohomologyGroup& H, const ClassCoords& c)
{
    Cocycle2 a = trivial_cocycle(H.group, H.field);
    for (std::size_t i = 0; i < H.generator_cocycles.size(); ++i)
        a = cocycle_product(a, cocycle_power(H.generator_cocycles[i], i < c.r.size() ? c.r[i] : 0));
    return a;
}

std::vector<ClassCoords> all_classes(const CohomologyGroup& H)
{
    std::vector<ClassCoords> out{ClassCoords{std::vector<long long>(H.invariant_factors.size(), 0)}};
    for (std::size_t i = H.invariant_factors.size(); i-- > 0;) {
        std::vector<ClassCoords> next;
        for (const auto& c : out)
            for (long long v = 0; v < H.invariant_factors[i]; ++v) {
                ClassCoords d = c;
                d.r[i] = v;
                next.push_back(d);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const ClassCoords& a, const ClassCoords& b) { return a.r < b.r; });
    return out;
}

std::optional<std::vector<Fq>> cohomologous_tables(const FiniteGroup& G, const FieldSpec& F,
                                                   const std::vector<Fq>& a, const std::vector<Fq>& b)
{
    const int n = G.n;
    const long long m = static_cast<long long>(F.q()) - 1;
    for (Fq x : a)
        if (x.is_zero()) throw Error(Errc::ZeroEntry, "cocycle entries must be units");
    for (Fq x : b)
        if (x.is_zero()) throw Error(Errc::ZeroEntry, "cocycle entries must be units");
    if (m == 1) return std::vector<Fq>(n, Fq(1u));
    ModEchelon<long long> ech(n, m);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            std::vector<long long> row(n, 0);
            row[g] += 1;
            row[h] += 1;
            row[G.mul(g, h)] -= 1;
            long long rhs = static_cast<long long>(F.dlog(b[g * n + h])) - F.dlog(a[g * n + h]);
            ech.add(std::move(row), rhs);
        }
    if (ech.inconsistent()) return std::nullopt;
    auto x = solve_mod<long long>(ech.matrix(), ech.rhs(), m);
    if (!x) return std::nullopt;
    std::vector<Fq> lambda(n);
    for (int g = 0; g < n; ++g) lambda[g] = F.exp((*x)(g));
    // certify
    auto d = coboundary_table(G, F, lambda);
    for (int p = 0; p < n * n; ++p)
        if (F.mul(a[p], d[p]) != b[p]) throw Error(Errc::InvalidStructure, "witness check failed");
    return lambda;
}

std::optional<std::vector<Fq>> cohomologous(const Cocycle2& a, const Cocycle2& b)
{
    require_same(a, b);
    return cohomologous_tables(a.group, a.field, a.table, b.table);
}

Cocycle2 inflate(const Cocycle2& a, const GroupHom& pi)
{
    if (pi.target != a.group) throw Error(Errc::GroupOrFieldMismatch, "inflation target differs from cocycle group");
    if (!is_surjective(pi)) throw Error(Errc::NotSurjective, "inflation needs a surjection");
    const FiniteGroup& S = pi.source;
    Cocycle2 c{S, a.field, std::vector<Fq>(S.n * S.n)};
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) c.at(x, y) = a(pi.map[x], pi.map[y]);
    return c;
}

Cocycle2 restrict_cocycle(const Cocycle2& a, const GroupHom& emb)
{
    if (emb.target != a.group) throw Error(Errc::GroupOrFieldMismatch, "embedding target differs from cocycle group");
    return transport(a, emb.source, emb.map);
}

Cocycle2 transport(const Cocycle2& a, const FiniteGroup& S, const std::vector<int>& f)
{
    Cocycle2 c{S, a.field, std::vector<Fq>(S.n * S.n)};
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) c.at(x, y) = a(f[x], f[y]);
    return c;
}

Cocycle2 pullback_cocycle(const Cocycle2& c, const Cocycle2& c2, const Pullback& pb)
{
    if (pb.pr1.target != c.group || pb.pr2.target != c2.group || c.field != c2.field)
        throw Error(Errc::IncompatiblePullback, "cocycles do not match the pullback data");
    const FiniteGroup& P = pb.group;
    Cocycle2 out{P, c.field, std::vector<Fq>(P.n * P.n)};
    for (int x = 0; x < P.n; ++x)
        for (int y = 0; y < P.n; ++y)
            out.at(x, y) = c.field.mul(c(pb.pairs[x].first, pb.pairs[y].first), c2(pb.pairs[x].second, pb.pairs[y].second));
    return out;
}

}  // namespace gradekit
