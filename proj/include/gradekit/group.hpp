#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradekit/error.hpp"

namespace gradekit {

struct FiniteGroup {
    int n = 1;
    std::vector<std::string> labels{"e"};
    std::vector<int> table{0};  // row-major n x n
    int e = 0;
    std::vector<int> inv{0};

    int mul(int a, int b) const { return table[a * n + b]; }
    int order() const { return n; }
    int element_order(int g) const;
    std::string label(int g) const { return labels[g]; }
    int index_of(const std::string& label) const;  // -1 if absent

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.n == b.n && a.table == b.table && a.labels == b.labels;
    }
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }
};

struct GroupHom {
    FiniteGroup source, target;
    std::vector<int> map;
    int operator()(int g) const { return map[g]; }
};

constexpr int kMaxGroupOrder = 64;

FiniteGroup group_from_table(std::vector<std::string> labels, const std::vector<std::vector<int>>& table);

// Builtins.  Element orderings:
//   cyclic(n):       a^i at index i, labels e, a, a^2, ...
//   klein4():        a^i b^j at index i + 2j, labels e, a, b, ab
//   dihedral(n):     r^i s^j at index i + n j (order 2n)
//   quaternion8():   1, -1, i, -i, j, -j, k, -k
//   symmetric3():    permutations of {1,2,3} in lexicographic one-line order,
//                    composition (st)(x) = s(t(x))
//   direct_product:  (g, h) at index g |H| + h
FiniteGroup trivial_group();
FiniteGroup cyclic(int n);
FiniteGroup klein4();
FiniteGroup dihedral(int n);
FiniteGroup quaternion8();
FiniteGroup symmetric3();
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

GroupHom identity_hom(const FiniteGroup& G);
bool is_hom(const GroupHom& f);
bool is_surjective(const GroupHom& f);

// Sorted element list of the subgroup generated by gens.
std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elements);
bool is_normal(const FiniteGroup& G, const std::vector<int>& elements);
std::vector<int> center(const FiniteGroup& G);

struct Subgroup {
    FiniteGroup group;
    GroupHom embedding;
    std::vector<int> elements() const { return embedding.map; }
};
Subgroup subgroup(const FiniteGroup& G, const std::vector<int>& gens);

struct Quotient {
    FiniteGroup group;
    GroupHom projection;
};
// N given as its element list (or any generating set).
Quotient quotient(const FiniteGroup& G, const std::vector<int>& N);
// G -> G/N followed by an isomorphism G/N -> target; TargetMismatch when none exists.
GroupHom quotient_onto(const FiniteGroup& G, const std::vector<int>& N, const FiniteGroup& target);

struct Pullback {
    FiniteGroup group;
    GroupHom pr1, pr2;
    std::vector<std::pair<int, int>> pairs;  // element index -> (gamma, gamma')
};
Pullback pullback(const GroupHom& pi, const GroupHom& pi2);

std::vector<int> inner_aut(const FiniteGroup& G, int g);
// Greedy generating set in index order.
std::vector<int> generators(const FiniteGroup& G);
std::optional<std::vector<int>> iso_search(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace gradekit
