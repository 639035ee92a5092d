#include "document.hpp"

#include <charconv>
#include <sstream>

#include "gradekit/instances.hpp"
#include "gradekit/mackey.hpp"

namespace gradekit::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg)
{
    throw Error(Errc::ParseError, where + ": " + msg);
}

const ojson& need(const ojson& s, const char* key, const std::string& where)
{
    if (!s.is_object() || !s.contains(key)) fail(where, std::string("missing '") + key + "'");
    return s.at(key);
}

long long as_int(const ojson& v, const std::string& where)
{
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<long long>();
}

std::string kind_of(const ojson& s, const std::string& where)
{
    const ojson& k = need(s, "kind", where);
    if (!k.is_string()) fail(where + ".kind", "expected a string");
    return k.get<std::string>();
}

// "cyclic(4)" -> ("cyclic", 4); "klein4" -> ("klein4", -1)
std::pair<std::string, int> split_call(const std::string& s)
{
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') return {s, -1};
    int n = -1;
    auto body = std::string_view(s).substr(open + 1, s.size() - open - 2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size()) return {s, -1};
    return {s.substr(0, open), n};
}

std::optional<FiniteGroup> builtin_group(const std::string& name, int n)
{
    if (name == "trivial") return trivial_group();
    if (name == "klein4") return klein4();
    if (name == "quaternion8") return quaternion8();
    if (name == "symmetric3") return symmetric3();
    if (name == "cyclic" && n >= 1) return cyclic(n);
    if (name == "dihedral" && n >= 1) return dihedral(n);
    return std::nullopt;
}

void check_hom(const GroupHom& f, const std::string& where)
{
    if (!is_hom(f)) fail(where, "map is not a group homomorphism");
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Caps parse_caps(const std::string& text, Caps caps)
{
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(Errc::ParseError, "caps: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        long long v = 0;
        auto val = std::string_view(item).substr(eq + 1);
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || ptr != val.data() + val.size() || v < 0)
            throw Error(Errc::ParseError, "caps: bad value for '" + key + "'");
        if (key == "exhaustive")
            caps.exhaustive = v;
        else if (key == "random_trials")
            caps.random_trials = static_cast<int>(v);
        else if (key == "max_dim")
            caps.max_dim = static_cast<int>(v);
        else
            throw Error(Errc::ParseError, "caps: unknown key '" + key + "'");
    }
    return caps;
}

int Document::element(const FiniteGroup& G, const ojson& v, const std::string& where) const
{
    if (v.is_number_integer()) {
        long long i = v.get<long long>();
        if (i < 0 || i >= G.n) fail(where, "element index " + std::to_string(i) + " out of range");
        return static_cast<int>(i);
    }
    if (v.is_string()) {
        int i = G.index_of(v.get<std::string>());
        if (i < 0) fail(where, "unknown element '" + v.get<std::string>() + "'");
        return i;
    }
    fail(where, "expected an element label or index");
}

std::vector<int> Document::elements(const FiniteGroup& G, const ojson& v, const std::string& where) const
{
    if (!v.is_array()) fail(where, "expected a list of elements");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(element(G, v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Fq Document::scalar(const ojson& v, const std::string& where) const
{
    if (v.is_number_integer()) return field.from_int(v.get<long long>());
    if (v.is_string()) {
        try {
            return field.parse(v.get<std::string>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected a field element");
}

FqMatrix Document::matrix(const ojson& v, int rows, int cols, const std::string& where) const
{
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        fail(where, "expected " + std::to_string(rows) + " rows");
    FqMatrix M = zeros(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const ojson& row = v[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(where, "row " + std::to_string(r + 1) + ": expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            M(r, c) = scalar(row[c], where + " row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1));
    }
    return M;
}

ojson Document::arg(const std::string& key, const std::string& section) const
{
    if (args.contains(key)) return args.at(key);
    const ojson* sec = raw.contains(section) ? &raw.at(section) : nullptr;
    if (sec && sec->is_object() && sec->size() == 1) return sec->begin().key();
    fail("args", "missing '" + key + "' (and no single entry in '" + section + "' to default to)");
}

// --- groups ------------------------------------------------------------------

FiniteGroup Document::group(const ojson& ref, const std::string& where) const
{
    if (ref.is_string()) {
        auto name = ref.get<std::string>();
        if (auto it = groups_.find(name); it != groups_.end()) return it->second;
        auto [base, n] = split_call(name);
        if (auto g = builtin_group(base, n)) return *g;
        fail(where, "unknown group '" + name + "'");
    }
    return build_group(ref, where);
}

FiniteGroup Document::build_group(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    if (kind == "table") {
        const ojson& lab = need(s, "labels", where);
        const ojson& tab = need(s, "table", where);
        if (!lab.is_array()) fail(where + ".labels", "expected a list");
        std::vector<std::string> labels;
        for (auto& l : lab) {
            if (!l.is_string()) fail(where + ".labels", "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        const int n = static_cast<int>(labels.size());
        if (!tab.is_array() || static_cast<int>(tab.size()) != n)
            fail(where + ".table", "expected " + std::to_string(n) + " rows");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r) {
            if (!tab[r].is_array() || static_cast<int>(tab[r].size()) != n)
                fail(where + ".table", "row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
            for (int c = 0; c < n; ++c) {
                const ojson& x = tab[r][c];
                std::string at = where + ".table row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1);
                int v = -1;
                if (x.is_string()) {
                    for (int i = 0; i < n; ++i)
                        if (labels[i] == x.get<std::string>()) v = i;
                } else if (x.is_number_integer()) {
                    v = static_cast<int>(x.get<long long>());
                }
                if (v < 0 || v >= n) fail(at, "entry is not an element");
                t[r][c] = v;
            }
        }
        try {
            return group_from_table(labels, t);
        } catch (const Error& e) {
            fail(where + ".table", e.what());
        }
    }
    if (kind == "direct_product") {
        const ojson& f = need(s, "factors", where);
        if (!f.is_array() || f.size() != 2) fail(where + ".factors", "expected two groups");
        return direct_product(group(f[0], where + ".factors[0]"), group(f[1], where + ".factors[1]"));
    }
    int n = s.contains("n") ? static_cast<int>(as_int(s.at("n"), where + ".n")) : -1;
    if (auto g = builtin_group(kind, n)) return *g;
    fail(where, "unknown group kind '" + kind + "'");
}

// --- homomorphisms -----------------------------------------------------------

GroupHom Document::hom(const ojson& ref, const std::string& where) const
{
    if (ref.is_string()) {
        auto it = homs_.find(ref.get<std::string>());
        if (it == homs_.end()) fail(where, "unknown homomorphism '" + ref.get<std::string>() + "'");
        return it->second;
    }
    return build_hom(ref, where);
}

GroupHom Document::build_hom(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    if (kind == "identity") return identity_hom(group(need(s, "group", where), where + ".group"));
    if (kind == "map") {
        FiniteGroup G = group(need(s, "from", where), where + ".from");
        FiniteGroup H = group(need(s, "to", where), where + ".to");
        std::vector<int> m = elements(H, need(s, "map", where), where + ".map");
        if (static_cast<int>(m.size()) != G.n) fail(where + ".map", "expected one image per element of the source");
        GroupHom f{G, H, m};
        check_hom(f, where);
        return f;
    }
    if (kind == "quotient") {
        FiniteGroup G = group(need(s, "from", where), where + ".from");
        std::vector<int> N = elements(G, need(s, "kernel", where), where + ".kernel");
        if (s.contains("to")) return quotient_onto(G, N, group(s.at("to"), where + ".to"));
        return quotient(G, N).projection;
    }
    fail(where, "unknown homomorphism kind '" + kind + "'");
}

// --- cocycles ----------------------------------------------------------------

Cocycle2 Document::raw_cocycle(const ojson& ref, const std::string& where) const
{
    if (ref.is_string()) {
        auto it = cocycles_.find(ref.get<std::string>());
        if (it == cocycles_.end()) fail(where, "unknown cocycle '" + ref.get<std::string>() + "'");
        return it->second;
    }
    return build_cocycle(ref, where);
}

Cocycle2 Document::cocycle(const ojson& ref, const std::string& where) const
{
    Cocycle2 c = raw_cocycle(ref, where);
    CocycleCheck chk = is_cocycle(c.group, c.field, c.table);
    if (!chk.ok) {
        auto [g, h, k] = chk.triple;
        throw Error(Errc::NotACocycle, where + ": identity fails at (" + c.group.label(g) + ", " + c.group.label(h) +
                                           ", " + c.group.label(k) + ")");
    }
    return normalize(c.group, c.field, c.table).cocycle;
}

Cocycle2 Document::build_cocycle(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    auto grp = [&] { return group(need(s, "group", where), where + ".group"); };
    if (kind == "table") {
        FiniteGroup G = grp();
        FqMatrix T = matrix(need(s, "table", where), G.n, G.n, where + ".table");
        Cocycle2 c{G, field, std::vector<Fq>(G.n * G.n)};
        for (int r = 0; r < G.n; ++r)
            for (int col = 0; col < G.n; ++col) {
                if (T(r, col).is_zero())
                    fail(where + ".table row " + std::to_string(r + 1) + ", col " + std::to_string(col + 1),
                         "cocycle values must be nonzero");
                c.at(r, col) = T(r, col);
            }
        return c;
    }
    if (kind == "pauli") {
        if (s.contains("group") && grp() != klein4()) fail(where, "pauli is defined on klein4");
        return klein4_pauli(field);
    }
    if (kind == "trivial") return trivial_cocycle(grp(), field);
    if (kind == "class") {
        FiniteGroup G = grp();
        CohomologyGroup H = h2(G, field);
        const ojson& v = need(s, "coords", where);
        if (!v.is_array() || v.size() != H.invariant_factors.size())
            fail(where + ".coords", "expected " + std::to_string(H.invariant_factors.size()) + " coordinates");
        ClassCoords c;
        for (std::size_t i = 0; i < v.size(); ++i) {
            long long x = as_int(v[i], where + ".coords");
            long long m = H.invariant_factors[i];
            c.r.push_back(((x % m) + m) % m);
        }
        return class_representative(H, c);
    }
    if (kind == "coboundary") {
        FiniteGroup G = grp();
        const ojson& v = need(s, "lambda", where);
        if (!v.is_array() || static_cast<int>(v.size()) != G.n) fail(where + ".lambda", "expected one value per element");
        std::vector<Fq> lambda;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Fq x = scalar(v[i], where + ".lambda[" + std::to_string(i) + "]");
            if (x.is_zero()) fail(where + ".lambda[" + std::to_string(i) + "]", "values must be nonzero");
            lambda.push_back(x);
        }
        return Cocycle2{G, field, coboundary_table(G, field, lambda)};
    }
    if (kind == "inverse") return cocycle_inverse(cocycle(need(s, "cocycle", where), where + ".cocycle"));
    if (kind == "power")
        return cocycle_power(cocycle(need(s, "cocycle", where), where + ".cocycle"), as_int(need(s, "k", where), where + ".k"));
    if (kind == "product") {
        const ojson& f = need(s, "factors", where);
        if (!f.is_array() || f.empty()) fail(where + ".factors", "expected a nonempty list");
        Cocycle2 c = cocycle(f[0], where + ".factors[0]");
        for (std::size_t i = 1; i < f.size(); ++i) {
            Cocycle2 d = cocycle(f[i], where + ".factors[" + std::to_string(i) + "]");
            if (d.group != c.group) fail(where + ".factors", "factors live on different groups");
            c = cocycle_product(c, d);
        }
        return c;
    }
    if (kind == "inflate") {
        GroupHom f = hom(need(s, "hom", where), where + ".hom");
        Cocycle2 c = cocycle(need(s, "cocycle", where), where + ".cocycle");
        if (c.group != f.target) fail(where, "cocycle must live on the target of the homomorphism");
        return inflate(c, f);
    }
    if (kind == "restrict") {
        GroupHom f = hom(need(s, "hom", where), where + ".hom");
        Cocycle2 c = cocycle(need(s, "cocycle", where), where + ".cocycle");
        if (c.group != f.target) fail(where, "cocycle must live on the target of the embedding");
        return restrict_cocycle(c, f);
    }
    fail(where, "unknown cocycle kind '" + kind + "'");
}

// --- algebras ----------------------------------------------------------------

AlgebraPtr Document::algebra(const ojson& ref, const std::string& where) const
{
    if (ref.is_string()) {
        auto it = algebras_.find(ref.get<std::string>());
        if (it == algebras_.end()) fail(where, "unknown algebra '" + ref.get<std::string>() + "'");
        return it->second;
    }
    return build_algebra(ref, where);
}

AlgebraPtr Document::build_algebra(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    auto grp = [&] { return group(need(s, "group", where), where + ".group"); };
    auto sub = [&](const char* key) { return algebra(need(s, key, where), where + "." + key); };
    auto coc = [&] { return cocycle(need(s, "cocycle", where), where + ".cocycle"); };
    GradedAlgebra A;
    if (kind == "group_algebra") {
        A = group_algebra(grp(), field);
    } else if (kind == "twisted_group_algebra") {
        A = twisted_group_algebra(coc());
    } else if (kind == "elementary_matrix") {
        FiniteGroup G = grp();
        A = elementary_matrix_algebra(field, G, elements(G, need(s, "degrees", where), where + ".degrees"));
    } else if (kind == "matrix_twisted") {
        FiniteGroup G = grp();
        Cocycle2 w = coc();
        GroupHom emb = s.contains("embedding") ? hom(s.at("embedding"), where + ".embedding") : identity_hom(w.group);
        if (emb.source != w.group || emb.target != G) fail(where + ".embedding", "must map the cocycle's group into the grading group");
        A = matrix_twisted_algebra(field, G, elements(G, need(s, "degrees", where), where + ".degrees"), w, emb);
    } else if (kind == "regrade") {
        AlgebraPtr B = sub("algebra");
        GroupHom f = hom(need(s, "hom", where), where + ".hom");
        if (f.source != B->group) fail(where + ".hom", "source must be the grading group of the algebra");
        A = regrade(*B, f);
    } else if (kind == "quotient_grading") {
        AlgebraPtr B = sub("algebra");
        std::vector<int> N = elements(B->group, need(s, "kernel", where), where + ".kernel");
        if (s.contains("to"))
            A = regrade(*B, quotient_onto(B->group, N, group(s.at("to"), where + ".to")));
        else
            A = quotient_grading(*B, N);
    } else if (kind == "graded_product") {
        A = graded_product(*sub("left"), *sub("right"));
    } else if (kind == "twist") {
        AlgebraPtr B = sub("algebra");
        A = twist_algebra(coc(), *B);
    } else if (kind == "explicit") {
        FiniteGroup G = grp();
        std::vector<int> deg = elements(G, need(s, "degrees", where), where + ".degrees");
        const int d = static_cast<int>(deg.size());
        A.field = field;
        A.group = G;
        A.dim = d;
        A.deg = deg;
        A.sc.assign(static_cast<std::size_t>(d) * d * d, Fq(0u));
        const ojson& sc = need(s, "constants", where);
        if (!sc.is_array()) fail(where + ".constants", "expected a list of [i, j, k, c]");
        for (std::size_t t = 0; t < sc.size(); ++t) {
            std::string at = where + ".constants[" + std::to_string(t) + "]";
            const ojson& e = sc[t];
            if (!e.is_array() || e.size() != 4) fail(at, "expected [i, j, k, c]");
            int ijk[3];
            for (int u = 0; u < 3; ++u) {
                long long x = as_int(e[u], at);
                if (x < 0 || x >= d) fail(at, "basis index out of range");
                ijk[u] = static_cast<int>(x);
            }
            A.c(ijk[0], ijk[1], ijk[2]) = scalar(e[3], at);
        }
        const ojson& u = need(s, "unit", where);
        FqMatrix U = matrix(ojson::array({u}), 1, d, where + ".unit");
        A.unit = U.row(0).transpose();
    } else {
        fail(where, "unknown algebra kind '" + kind + "'");
    }
    if (A.field != field) fail(where, "algebra is over a different field");
    validate(A);
    return std::make_shared<const GradedAlgebra>(std::move(A));
}

AlgebraPtr Document::base_of(const AlgebraPtr& A) const { return std::make_shared<const GradedAlgebra>(base_algebra(*A)); }

// --- modules -----------------------------------------------------------------

UngradedModule Document::module(const ojson& ref, const std::string& where, AlgebraPtr* owner) const
{
    std::pair<UngradedModule, AlgebraPtr> m;
    if (ref.is_string()) {
        auto it = modules_.find(ref.get<std::string>());
        if (it == modules_.end()) fail(where, "unknown module '" + ref.get<std::string>() + "'");
        m = it->second;
    } else {
        m = build_module(ref, where);
    }
    if (owner) *owner = m.second;
    return m.first;
}

std::pair<UngradedModule, AlgebraPtr> Document::build_module(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    if (kind == "rebase") {
        AlgebraPtr A = algebra(need(s, "algebra", where), where + ".algebra");
        UngradedModule M = module(need(s, "module", where), where + ".module");
        UngradedModule out = rebase(M, A);
        check_base_module(A, out);
        return {out, A};
    }
    AlgebraPtr A = algebra(need(s, "algebra", where), where + ".algebra");
    AlgebraPtr base = base_of(A);
    const int de = base->dim;
    UngradedModule M{base, 0, {}};
    if (kind == "scalar") {
        const ojson& v = need(s, "values", where);
        if (!v.is_array() || static_cast<int>(v.size()) != de)
            fail(where + ".values", "expected one value per basis element of the identity component (" + std::to_string(de) + ")");
        std::vector<Fq> vals;
        for (std::size_t i = 0; i < v.size(); ++i) vals.push_back(scalar(v[i], where + ".values[" + std::to_string(i) + "]"));
        M.dim = 1;
        for (Fq x : vals) M.act.push_back(FqMatrix::Constant(1, 1, x));
    } else if (kind == "matrices") {
        M.dim = static_cast<int>(as_int(need(s, "dim", where), where + ".dim"));
        if (M.dim < 1) fail(where + ".dim", "must be positive");
        const ojson& act = need(s, "act", where);
        if (!act.is_array() || static_cast<int>(act.size()) != de)
            fail(where + ".act", "expected one matrix per basis element of the identity component (" + std::to_string(de) + ")");
        for (int i = 0; i < de; ++i) M.act.push_back(matrix(act[i], M.dim, M.dim, where + ".act[" + std::to_string(i) + "]"));
    } else {
        fail(where, "unknown module kind '" + kind + "'");
    }
    check_base_module(A, M);
    return {M, A};
}

GradedModule Document::graded_module(const ojson& ref, const std::string& where) const
{
    if (ref.is_string()) {
        auto it = graded_.find(ref.get<std::string>());
        if (it == graded_.end()) fail(where, "unknown graded module '" + ref.get<std::string>() + "'");
        return it->second;
    }
    return build_graded(ref, where);
}

GradedModule Document::build_graded(const ojson& s, const std::string& where) const
{
    std::string kind = kind_of(s, where);
    GradedModule W;
    if (kind == "regular") {
        W = regular_module(algebra(need(s, "algebra", where), where + ".algebra"));
    } else if (kind == "associated") {
        AlgebraPtr owner;
        UngradedModule M = module(need(s, "module", where), where + ".module", &owner);
        AlgebraPtr A = s.contains("algebra") ? algebra(s.at("algebra"), where + ".algebra") : owner;
        W = associated(A, rebase(M, A)).module;
    } else if (kind == "suspend") {
        GradedModule V = graded_module(need(s, "module", where), where + ".module");
        W = suspend(V, element(V.group(), need(s, "by", where), where + ".by"));
    } else if (kind == "twist") {
        GradedModule V = graded_module(need(s, "module", where), where + ".module");
        W = twist_module(cocycle(need(s, "cocycle", where), where + ".cocycle"), V);
    } else if (kind == "product") {
        W = module_product(graded_module(need(s, "left", where), where + ".left"),
                           graded_module(need(s, "right", where), where + ".right"));
    } else if (kind == "explicit") {
        AlgebraPtr A = algebra(need(s, "algebra", where), where + ".algebra");
        W.alg = A;
        W.mdeg = elements(A->group, need(s, "degrees", where), where + ".degrees");
        W.dim = static_cast<int>(W.mdeg.size());
        const ojson& act = need(s, "act", where);
        if (!act.is_array() || static_cast<int>(act.size()) != A->dim)
            fail(where + ".act", "expected one matrix per basis element (" + std::to_string(A->dim) + ")");
        for (int i = 0; i < A->dim; ++i) W.act.push_back(matrix(act[i], W.dim, W.dim, where + ".act[" + std::to_string(i) + "]"));
    } else {
        fail(where, "unknown graded module kind '" + kind + "'");
    }
    validate(W);
    return W;
}

// --- document ----------------------------------------------------------------

Document parse_document(const std::string& text)
{
    Document d;
    try {
        d.raw = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte is 1-based and points just past the offending character
        std::size_t upto = e.byte ? e.byte - 1 : 0;
        int row = 1, col = 1;
        for (std::size_t i = 0; i < upto && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++row;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
        throw Error(Errc::ParseError, "row " + std::to_string(row) + ", col " + std::to_string(col) + ": " + msg);
    }
    const ojson& r = d.raw;
    if (!r.is_object()) fail("document", "expected an object");
    if (!r.contains("schema") || r.at("schema") != kSchema) fail("schema", std::string("expected \"") + kSchema + "\"");

    const ojson& f = need(r, "field", "document");
    std::string fw = "field";
    if (f.is_string()) {
        d.field = parse_field(f.get<std::string>());
    } else {
        int p = static_cast<int>(as_int(need(f, "p", fw), fw + ".p"));
        int k = f.contains("k") ? static_cast<int>(as_int(f.at("k"), fw + ".k")) : 1;
        std::optional<std::vector<int>> modulus;
        if (f.contains("modulus")) {
            modulus.emplace();
            for (auto& c : f.at("modulus")) modulus->push_back(static_cast<int>(as_int(c, fw + ".modulus")));
        }
        d.field = make_field(p, k, modulus);
    }

    auto section = [&](const char* name, auto&& build) {
        if (!r.contains(name)) return;
        const ojson& sec = r.at(name);
        if (!sec.is_object()) fail(name, "expected an object of named entries");
        for (auto it = sec.begin(); it != sec.end(); ++it) build(it.key(), it.value(), std::string(name) + "." + it.key());
    };
    section("groups", [&](const std::string& k, const ojson& v, const std::string& w) { d.groups_[k] = d.group(v, w); });
    section("homs", [&](const std::string& k, const ojson& v, const std::string& w) { d.homs_[k] = d.hom(v, w); });
    section("cocycles", [&](const std::string& k, const ojson& v, const std::string& w) { d.cocycles_[k] = d.raw_cocycle(v, w); });
    section("algebras", [&](const std::string& k, const ojson& v, const std::string& w) { d.algebras_[k] = d.algebra(v, w); });
    section("modules", [&](const std::string& k, const ojson& v, const std::string& w) {
        AlgebraPtr owner;
        UngradedModule M = d.module(v, w, &owner);
        d.modules_[k] = {M, owner};
    });
    section("graded_modules", [&](const std::string& k, const ojson& v, const std::string& w) { d.graded_[k] = d.graded_module(v, w); });

    if (r.contains("command")) {
        if (!r.at("command").is_string()) fail("command", "expected a string");
        d.command = r.at("command").get<std::string>();
    }
    if (r.contains("op")) {
        if (!r.at("op").is_string()) fail("op", "expected a string");
        d.op = r.at("op").get<std::string>();
    }
    if (r.contains("args")) {
        if (!r.at("args").is_object()) fail("args", "expected an object");
        d.args = r.at("args");
    }
    if (r.contains("seed")) {
        long long s = as_int(r.at("seed"), "seed");
        if (s < 0) fail("seed", "must be nonnegative");
        d.seed = static_cast<std::uint64_t>(s);
    }
    if (r.contains("caps")) {
        const ojson& c = r.at("caps");
        if (!c.is_object()) fail("caps", "expected an object");
        for (auto it = c.begin(); it != c.end(); ++it) {
            long long v = as_int(it.value(), "caps." + it.key());
            d.caps = parse_caps(it.key() + "=" + std::to_string(v), d.caps);
        }
    }
    return d;
}

}  // namespace gradekit::cli
