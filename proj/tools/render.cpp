#include <sstream>

#include "report.hpp"

namespace gradekit::cli {

namespace {

bool is_empty(const json& v) { return v.is_null() || ((v.is_array() || v.is_object()) && v.empty()); }

bool is_scalar_list(const json& v)
{
    if (!v.is_array()) return false;
    for (auto& x : v)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

bool is_matrix(const json& v)
{
    if (!v.is_array() || v.empty()) return false;
    for (auto& r : v)
        if (!is_scalar_list(r) || r.empty()) return false;
    return true;
}

std::string atom(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

std::string inline_list(const json& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + atom(v[i]);
    return s + "]";
}

void emit(std::ostringstream& os, const json& v, int indent)
{
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            const json& x = it.value();
            os << pad << it.key() << ":";
            if (is_empty(x)) {
                os << " none\n";
            } else if (is_scalar_list(x)) {
                os << ' ' << inline_list(x) << '\n';
            } else if (x.is_array() || x.is_object()) {
                os << '\n';
                emit(os, x, indent + 2);
            } else {
                os << ' ' << atom(x) << '\n';
            }
        }
        return;
    }
    if (is_matrix(v)) {
        for (auto& r : v) os << pad << inline_list(r) << '\n';
        return;
    }
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const json& x = v[i];
            if (is_empty(x)) {
                os << pad << "- none\n";
            } else if (is_scalar_list(x)) {
                os << pad << "- " << inline_list(x) << '\n';
            } else if (x.is_array() || x.is_object()) {
                os << pad << "- [" << i << "]\n";
                emit(os, x, indent + 2);
            } else {
                os << pad << "- " << atom(x) << '\n';
            }
        }
        return;
    }
    os << pad << atom(v) << '\n';
}

}  // namespace

json to_structured(const Report& rep)
{
    json out;
    out["schema"] = kSchema;
    out["command"] = {{"name", rep.command}, {"op", rep.op.empty() ? json() : json(rep.op)}, {"args", rep.args}};
    out["inputs_digest"] = rep.digest;
    out["seed"] = rep.seed;
    out["results"] = rep.results;
    out["certificates"] = rep.certificates;
    return out;
}

std::string render(const Report& rep, const std::string& format)
{
    if (format == "structured") return to_structured(rep).dump(2) + "\n";
    std::ostringstream os;
    os << kSchema << ' ' << rep.command << (rep.op.empty() ? "" : " " + rep.op) << '\n';
    os << "inputs " << rep.digest << '\n';
    os << "seed " << rep.seed << '\n';
    for (const auto& h : rep.headline) os << h << '\n';
    os << "results:";
    if (is_empty(rep.results)) {
        os << " none\n";
    } else {
        os << '\n';
        emit(os, rep.results, 2);
    }
    os << "certificates:";
    if (is_empty(rep.certificates)) {
        os << " none\n";
    } else {
        os << '\n';
        emit(os, rep.certificates, 2);
    }
    return os.str();
}

std::string render_error(const std::string& code, const std::string& message, const std::string& format)
{
    if (format == "structured") {
        json out;
        out["schema"] = kSchema;
        out["error"] = {{"code", code}, {"message", message}};
        return out.dump(2) + "\n";
    }
    return "error: " + code + ": " + message + "\n";
}

}  // namespace gradekit::cli
