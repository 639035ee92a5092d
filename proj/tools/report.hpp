#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "document.hpp"

namespace gradekit::cli {

using json = nlohmann::json;  // sorted keys, so structured output is stable-ordered

struct Report {
    std::string command;
    std::string op;
    json args = json::object();
    std::string digest;
    std::uint64_t seed = 1;
    json results = json::object();
    json certificates = json::object();
    std::vector<std::string> headline;  // human format only
    int exit_code = 0;
};

// Fills results, certificates, headline and exit_code.  Throws gradekit::Error.
void run(const Document& doc, Report& rep);
void run_selftest(Report& rep, const Caps& caps);

json to_structured(const Report& rep);
std::string render(const Report& rep, const std::string& format);
std::string render_error(const std::string& code, const std::string& message, const std::string& format);

}  // namespace gradekit::cli
