#pragma once

// Brute-force oracles shared by the unit tests and the acceptance binary.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gradekit/cohomology.hpp"

namespace gradekit::oracle {

using Table = std::vector<std::uint32_t>;

// Every normalized cocycle table, by backtracking over the non-identity pairs
// in row-major order.  A triple is checked as soon as its four entries exist.
inline std::vector<Table> enumerate_cocycles(const FiniteGroup& G, const FieldSpec& F)
{
    const int n = G.n;
    std::vector<int> pairs;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (g != G.e && h != G.e) pairs.push_back(g * n + h);
    std::vector<int> pos(n * n, -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) pos[pairs[i]] = static_cast<int>(i);
    // triples whose last assigned entry is pair i
    std::vector<std::vector<std::array<int, 3>>> due(pairs.size());
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                int last = -1;
                for (int p : {g * n + h, G.mul(g, h) * n + k, h * n + k, g * n + G.mul(h, k)})
                    last = std::max(last, pos[p]);
                if (last >= 0) due[last].push_back({g, h, k});
            }
    Table t(n * n, 1);
    std::vector<Table> out;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pairs.size()) {
            out.push_back(t);
            return;
        }
        for (std::uint32_t v = 1; v < F.q(); ++v) {
            t[pairs[i]] = v;
            bool ok = true;
            for (auto [g, h, k] : due[i]) {
                Fq l = F.mul(Fq(t[g * n + h]), Fq(t[G.mul(g, h) * n + k]));
                Fq r = F.mul(Fq(t[h * n + k]), Fq(t[g * n + G.mul(h, k)]));
                if (l != r) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(i + 1);
        }
        t[pairs[i]] = 1;
    };
    rec(0);
    return out;
}

inline std::set<Table> enumerate_coboundaries(const FiniteGroup& G, const FieldSpec& F)
{
    const int n = G.n;
    std::set<Table> out;
    std::vector<std::uint32_t> lam(n, 1);
    std::function<void(int)> rec = [&](int g) {
        if (g == n) {
            Table t(n * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    t[a * n + b] = F.div(F.mul(Fq(lam[a]), Fq(lam[b])), Fq(lam[G.mul(a, b)])).v;
            out.insert(t);
            return;
        }
        if (g == G.e) return rec(g + 1);
        for (std::uint32_t v = 1; v < F.q(); ++v) {
            lam[g] = v;
            rec(g + 1);
        }
        lam[g] = 1;
    };
    rec(0);
    return out;
}

struct OracleResult {
    long long order;
    std::map<long long, long long> census;  // class order -> number of classes
};

inline OracleResult oracle_h2(const FiniteGroup& G, const FieldSpec& F)
{
    auto Z = enumerate_cocycles(G, F);
    auto B = enumerate_coboundaries(G, F);
    OracleResult r{static_cast<long long>(Z.size() / B.size()), {}};
    for (const auto& a : Z) {
        Table p = a;
        long long k = 1;
        while (!B.count(p)) {
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = F.mul(Fq(p[i]), Fq(a[i])).v;
            ++k;
        }
        ++r.census[k];
    }
    for (auto& [k, c] : r.census) c /= static_cast<long long>(B.size());
    return r;
}

inline std::map<long long, long long> census_of(const std::vector<long long>& factors)
{
    std::map<long long, long long> c;
    std::vector<long long> x(factors.size(), 0);
    while (true) {
        long long o = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            long long oi = factors[i] / std::gcd(x[i], factors[i]);
            o = std::lcm(o, oi);
        }
        ++c[o];
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == factors[i]) x[i++] = 0;
        if (i == x.size()) break;
    }
    return c;
}

// Number of maps rho: Q8 -> F* with rho(x) rho(y) = c(pi x, pi y) rho(xy) and rho(-1) = -1,
// that is, one-dimensional extensions of the sign module of the center.
inline int one_dim_extensions(const FieldSpec& F, const Cocycle2& c, const GroupHom& pi)
{
    FiniteGroup Q = quaternion8();
    std::vector<Fq> units;
    for (std::uint32_t a = 1; a < F.q(); ++a) units.push_back(Fq(a));
    const int u = static_cast<int>(units.size());
    long long total = 1;
    for (int i = 0; i < 8; ++i) total *= u;
    int count = 0;
    std::vector<Fq> rho(8);
    for (long long t = 0; t < total; ++t) {
        long long x = t;
        for (int i = 0; i < 8; ++i) {
            rho[i] = units[x % u];
            x /= u;
        }
        if (rho[0] != F.one() || rho[1] != F.neg(F.one())) continue;
        bool ok = true;
        for (int a = 0; a < 8 && ok; ++a)
            for (int b = 0; b < 8 && ok; ++b)
                ok = F.mul(rho[a], rho[b]) == F.mul(c(pi(a), pi(b)), rho[Q.mul(a, b)]);
        if (ok) ++count;
    }
    return count;
}

}  // namespace gradekit::oracle
