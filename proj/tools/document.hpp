#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "gradekit/algebra.hpp"

namespace gradekit::cli {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gradekit/1";

// A problem document after name resolution.  Sections are read in the order
// field, groups, homs, cocycles, algebras, modules, graded_modules; an entry may
// refer to anything defined before it.  Wherever a name is expected an inline
// spec is accepted as well.
class Document {
public:
    ojson raw;
    FieldSpec field;
    ojson args = ojson::object();
    std::string command, op;
    std::optional<std::uint64_t> seed;
    Caps caps;

    FiniteGroup group(const ojson& ref, const std::string& where) const;
    GroupHom hom(const ojson& ref, const std::string& where) const;
    // As written; entries are nonzero but the cocycle identity is not checked.
    Cocycle2 raw_cocycle(const ojson& ref, const std::string& where) const;
    // Checked and normalized.
    Cocycle2 cocycle(const ojson& ref, const std::string& where) const;
    AlgebraPtr algebra(const ojson& ref, const std::string& where) const;
    // Module over the identity component; `owner` receives the graded algebra it was declared for.
    UngradedModule module(const ojson& ref, const std::string& where, AlgebraPtr* owner = nullptr) const;
    GradedModule graded_module(const ojson& ref, const std::string& where) const;

    int element(const FiniteGroup& G, const ojson& v, const std::string& where) const;
    std::vector<int> elements(const FiniteGroup& G, const ojson& v, const std::string& where) const;
    Fq scalar(const ojson& v, const std::string& where) const;
    FqMatrix matrix(const ojson& v, int rows, int cols, const std::string& where) const;

    // args[key], or the only entry of `section` when the key is absent.
    ojson arg(const std::string& key, const std::string& section) const;
    bool has_arg(const std::string& key) const { return args.contains(key); }

    friend Document parse_document(const std::string& text);

private:
    std::map<std::string, FiniteGroup> groups_;
    std::map<std::string, GroupHom> homs_;
    std::map<std::string, Cocycle2> cocycles_;
    std::map<std::string, AlgebraPtr> algebras_;
    std::map<std::string, std::pair<UngradedModule, AlgebraPtr>> modules_;
    std::map<std::string, GradedModule> graded_;

    FiniteGroup build_group(const ojson& s, const std::string& where) const;
    GroupHom build_hom(const ojson& s, const std::string& where) const;
    Cocycle2 build_cocycle(const ojson& s, const std::string& where) const;
    AlgebraPtr build_algebra(const ojson& s, const std::string& where) const;
    std::pair<UngradedModule, AlgebraPtr> build_module(const ojson& s, const std::string& where) const;
    GradedModule build_graded(const ojson& s, const std::string& where) const;
    AlgebraPtr base_of(const AlgebraPtr& A) const;
};

// Throws Error(ParseError) with the row and column of JSON syntax errors, and
// the path (plus table row/col where relevant) of semantic ones.
Document parse_document(const std::string& text);

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

Caps parse_caps(const std::string& text, Caps base);

}  // namespace gradekit::cli
