#include "gradekit/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gradekit {

int FiniteGroup::element_order(int g) const
{
    int x = g, k = 1;
    while (x != e) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

int FiniteGroup::index_of(const std::string& label) const
{
    for (int i = 0; i < n; ++i)
        if (labels[i] == label) return i;
    return -1;
}

FiniteGroup group_from_table(std::vector<std::string> labels, const std::vector<std::vector<int>>& table)
{
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(Errc::InvalidArgument, "empty group table");
    if (n > kMaxGroupOrder) throw Error(Errc::OrderTooLarge, "group order exceeds 64");
    if (static_cast<int>(labels.size()) != n) throw Error(Errc::InvalidArgument, "label count does not match table");
    FiniteGroup G;
    G.n = n;
    G.labels = std::move(labels);
    G.table.assign(n * n, 0);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) throw Error(Errc::NotLatinSquare, "row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n) throw Error(Errc::NotLatinSquare, "entry out of range at row " + std::to_string(a) + ", col " + std::to_string(b));
            G.table[a * n + b] = v;
        }
    }
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[G.mul(a, b)]) throw Error(Errc::NotLatinSquare, "repeat in row " + std::to_string(a));
            if (col[G.mul(b, a)]) throw Error(Errc::NotLatinSquare, "repeat in column " + std::to_string(a));
            row[G.mul(a, b)] = col[G.mul(b, a)] = true;
        }
    }
    G.e = -1;
    for (int a = 0; a < n && G.e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = G.mul(a, b) == b && G.mul(b, a) == b;
        if (ok) G.e = a;
    }
    if (G.e < 0) throw Error(Errc::NoIdentity, "no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                    throw Error(Errc::NotAssociative, "triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    G.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (G.mul(a, b) == G.e) G.inv[a] = b;
    return G;
}

namespace {

FiniteGroup from_rule(std::vector<std::string> labels, const std::function<int(int, int)>& rule)
{
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = rule(a, b);
    return group_from_table(std::move(labels), t);
}

std::string power_label(const std::string& x, int i)
{
    if (i == 0) return "";
    if (i == 1) return x;
    return x + "^" + std::to_string(i);
}

}  // namespace

FiniteGroup trivial_group() { return FiniteGroup{}; }

FiniteGroup cyclic(int n)
{
    if (n < 1) throw Error(Errc::InvalidArgument, "cyclic order must be positive");
    if (n > kMaxGroupOrder) throw Error(Errc::OrderTooLarge, "group order exceeds 64");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : power_label("a", i));
    return from_rule(labels, [n](int a, int b) { return (a + b) % n; });
}

FiniteGroup klein4()
{
    return from_rule({"e", "a", "b", "ab"}, [](int x, int y) { return x ^ y; });
}

FiniteGroup dihedral(int n)
{
    if (n < 1) throw Error(Errc::InvalidArgument, "dihedral parameter must be positive");
    if (2 * n > kMaxGroupOrder) throw Error(Errc::OrderTooLarge, "group order exceeds 64");
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string l = power_label("r", i) + (j ? "s" : "");
            labels.push_back(l.empty() ? "e" : l);
        }
    return from_rule(labels, [n](int x, int y) {
        int i = x % n, j = x / n, k = y % n, l = y / n;
        int r = ((i + (j ? -k : k)) % n + n) % n;
        return r + n * ((j + l) % 2);
    });
}

FiniteGroup quaternion8()
{
    // unit u in {1,i,j,k} as 0..3, index 2u + (negative ? 1 : 0)
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return from_rule({"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, [](int x, int y) {
        int u = x / 2, v = y / 2;
        int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[u][v];
        return 2 * prod[u][v] + (s < 0 ? 1 : 0);
    });
}

FiniteGroup symmetric3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> labels;
    for (auto& q : perms) labels.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
    return from_rule(labels, [&](int a, int b) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        return static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    });
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H)
{
    if (G.n * H.n > kMaxGroupOrder) throw Error(Errc::OrderTooLarge, "group order exceeds 64");
    std::vector<std::string> labels;
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < H.n; ++h) labels.push_back("(" + G.labels[g] + "," + H.labels[h] + ")");
    return from_rule(labels, [&](int x, int y) {
        return G.mul(x / H.n, y / H.n) * H.n + H.mul(x % H.n, y % H.n);
    });
}

GroupHom identity_hom(const FiniteGroup& G)
{
    GroupHom f{G, G, std::vector<int>(G.n)};
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

bool is_hom(const GroupHom& f)
{
    for (int a = 0; a < f.source.n; ++a)
        for (int b = 0; b < f.source.n; ++b)
            if (f.map[f.source.mul(a, b)] != f.target.mul(f.map[a], f.map[b])) return false;
    return true;
}

bool is_surjective(const GroupHom& f)
{
    std::vector<bool> hit(f.target.n, false);
    for (int x : f.map) hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens)
{
    std::vector<bool> in(G.n, false);
    std::vector<int> out{G.e};
    in[G.e] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            int y = G.mul(out[i], s);
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elements)
{
    if (elements.empty()) return false;
    std::vector<bool> in(G.n, false);
    for (int x : elements) in[x] = true;
    if (!in[G.e]) return false;
    for (int a : elements)
        for (int b : elements)
            if (!in[G.mul(a, G.inv[b])]) return false;
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& elements)
{
    if (!is_subgroup(G, elements)) return false;
    std::vector<bool> in(G.n, false);
    for (int x : elements) in[x] = true;
    for (int g = 0; g < G.n; ++g)
        for (int x : elements)
            if (!in[G.mul(G.mul(g, x), G.inv[g])]) return false;
    return true;
}

std::vector<int> center(const FiniteGroup& G)
{
    std::vector<int> z;
    for (int a = 0; a < G.n; ++a) {
        bool ok = true;
        for (int b = 0; b < G.n && ok; ++b) ok = G.mul(a, b) == G.mul(b, a);
        if (ok) z.push_back(a);
    }
    return z;
}

Subgroup subgroup(const FiniteGroup& G, const std::vector<int>& gens)
{
    for (int g : gens)
        if (g < 0 || g >= G.n) throw Error(Errc::InvalidArgument, "generator index out of range");
    std::vector<int> els = closure(G, gens);
    const int m = static_cast<int>(els.size());
    std::vector<int> pos(G.n, -1);
    for (int i = 0; i < m; ++i) pos[els[i]] = i;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        labels.push_back(G.labels[els[i]]);
        for (int j = 0; j < m; ++j) t[i][j] = pos[G.mul(els[i], els[j])];
    }
    FiniteGroup H = group_from_table(labels, t);
    return Subgroup{H, GroupHom{H, G, els}};
}

Quotient quotient(const FiniteGroup& G, const std::vector<int>& N)
{
    std::vector<int> els = closure(G, N);
    if (!is_normal(G, els)) throw Error(Errc::NotNormal, "subgroup is not normal");
    // coset representative = smallest index
    std::vector<int> rep(G.n, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (rep[g] >= 0) continue;
        for (int x : els) rep[G.mul(g, x)] = static_cast<int>(reps.size());
        reps.push_back(g);
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::string> labels;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        labels.push_back(G.labels[reps[i]]);
        for (int j = 0; j < m; ++j) t[i][j] = rep[G.mul(reps[i], reps[j])];
    }
    FiniteGroup Q = group_from_table(labels, t);
    return Quotient{Q, GroupHom{G, Q, rep}};
}

Pullback pullback(const GroupHom& pi, const GroupHom& pi2)
{
    if (pi.target != pi2.target) throw Error(Errc::TargetMismatch, "projections have different targets");
    if (!is_surjective(pi) || !is_surjective(pi2)) throw Error(Errc::NotSurjective, "pullback needs surjections");
    const FiniteGroup& A = pi.source;
    const FiniteGroup& B = pi2.source;
    Pullback out;
    for (int a = 0; a < A.n; ++a)
        for (int b = 0; b < B.n; ++b)
            if (pi.map[a] == pi2.map[b]) out.pairs.emplace_back(a, b);
    const int m = static_cast<int>(out.pairs.size());
    if (m > kMaxGroupOrder) throw Error(Errc::OrderTooLarge, "pullback order exceeds 64");
    std::map<std::pair<int, int>, int> pos;
    for (int i = 0; i < m; ++i) pos[out.pairs[i]] = i;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        auto [a, b] = out.pairs[i];
        labels.push_back("(" + A.labels[a] + "," + B.labels[b] + ")");
        for (int j = 0; j < m; ++j) {
            auto [c, d] = out.pairs[j];
            t[i][j] = pos.at({A.mul(a, c), B.mul(b, d)});
        }
    }
    out.group = group_from_table(labels, t);
    std::vector<int> m1(m), m2(m);
    for (int i = 0; i < m; ++i) {
        m1[i] = out.pairs[i].first;
        m2[i] = out.pairs[i].second;
    }
    out.pr1 = GroupHom{out.group, A, m1};
    out.pr2 = GroupHom{out.group, B, m2};
    return out;
}

std::vector<int> inner_aut(const FiniteGroup& G, int g)
{
    std::vector<int> p(G.n);
    for (int x = 0; x < G.n; ++x) p[x] = G.mul(G.mul(g, x), G.inv[g]);
    return p;
}

std::vector<int> generators(const FiniteGroup& G)
{
    std::vector<int> gens;
    std::vector<int> span = closure(G, gens);
    for (int g = 0; g < G.n && static_cast<int>(span.size()) < G.n; ++g) {
        if (std::binary_search(span.begin(), span.end(), g)) continue;
        gens.push_back(g);
        span = closure(G, gens);
    }
    return gens;
}

std::optional<std::vector<int>> iso_search(const FiniteGroup& G, const FiniteGroup& H)
{
    if (G.n > 16 || H.n > 16) throw Error(Errc::OrderTooLargeForIsoSearch, "iso search limited to order 16");
    if (G.n != H.n) return std::nullopt;
    std::multiset<int> og, oh;
    for (int g = 0; g < G.n; ++g) og.insert(G.element_order(g));
    for (int h = 0; h < H.n; ++h) oh.insert(H.element_order(h));
    if (og != oh) return std::nullopt;

    const std::vector<int> gens = generators(G);
    std::vector<int> images(gens.size());
    std::function<std::optional<std::vector<int>>(std::size_t)> rec = [&](std::size_t k) -> std::optional<std::vector<int>> {
        if (k == gens.size()) {
            // extend along words in the generators
            std::vector<int> f(G.n, -1);
            f[G.e] = H.e;
            std::vector<int> queue{G.e};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (std::size_t s = 0; s < gens.size(); ++s) {
                    int x = G.mul(queue[i], gens[s]);
                    int y = H.mul(f[queue[i]], images[s]);
                    if (f[x] < 0) {
                        f[x] = y;
                        queue.push_back(x);
                    } else if (f[x] != y) {
                        return std::nullopt;
                    }
                }
            std::vector<bool> hit(H.n, false);
            for (int y : f) {
                if (hit[y]) return std::nullopt;
                hit[y] = true;
            }
            for (int a = 0; a < G.n; ++a)
                for (int b = 0; b < G.n; ++b)
                    if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return std::nullopt;
            return f;
        }
        for (int h = 0; h < H.n; ++h) {
            if (H.element_order(h) != G.element_order(gens[k])) continue;
            images[k] = h;
            if (auto r = rec(k + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(0);
}

GroupHom quotient_onto(const FiniteGroup& G, const std::vector<int>& N, const FiniteGroup& target)
{
    Quotient Q = quotient(G, N);
    auto iso = iso_search(Q.group, target);
    if (!iso) throw Error(Errc::TargetMismatch, "quotient is not isomorphic to the target group");
    GroupHom f{G, target, {}};
    for (int g = 0; g < G.n; ++g) f.map.push_back((*iso)[Q.projection(g)]);
    return f;
}

}  // namespace gradekit
