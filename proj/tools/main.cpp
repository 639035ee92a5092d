#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "report.hpp"

using namespace gradekit;
using namespace gradekit::cli;

namespace {

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::uint64_t> env_seed()
{
    const char* s = std::getenv("GRADEKIT_SEED");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end) throw Error(Errc::ParseError, "GRADEKIT_SEED is not a nonnegative integer");
    return v;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gradekit: graded algebras, twisted group algebras and Clifford theory over finite fields"};
    std::string command, op, in, format = "human", caps_text;
    std::optional<std::uint64_t> seed_flag;
    app.add_option("command", command,
                   "h2 | cocycle | algebra | module | obstruction | extend | theorem-a | wedderburn | correspond | selftest")
        ->required();
    app.add_option("op", op, "operation for cocycle, algebra and module");
    app.add_option("--in", in, "problem document (JSON, schema gradekit/1)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "structured"}));
    app.add_option("--seed", seed_flag, "random seed; overrides GRADEKIT_SEED and the document");
    app.add_option("--caps", caps_text, "search limits, e.g. exhaustive=1048576,random_trials=512,max_dim=256");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Report rep;
        rep.command = command;
        std::string text;
        if (!in.empty()) {
            std::ifstream f(in, std::ios::binary);
            if (!f) throw Error(Errc::InvalidArgument, "cannot read '" + in + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        rep.digest = "fnv1a64:" + hex64(fnv1a(text));

        if (command == "selftest") {
            Caps caps = parse_caps(caps_text, Caps{});
            if (auto s = env_seed()) caps.seed = *s;
            if (seed_flag) caps.seed = *seed_flag;
            rep.seed = caps.seed;
            run_selftest(rep, caps);
            std::cout << render(rep, format);
            return rep.exit_code;
        }
        if (in.empty()) throw Error(Errc::InvalidArgument, "--in <file> is required for '" + command + "'");

        Document doc = parse_document(text);
        if (!doc.command.empty() && doc.command != command)
            throw Error(Errc::InvalidArgument, "document is for '" + doc.command + "', not '" + command + "'");
        rep.op = op.empty() ? doc.op : op;
        std::uint64_t seed = doc.seed.value_or(1);
        if (auto s = env_seed()) seed = *s;
        if (seed_flag) seed = *seed_flag;
        doc.caps = parse_caps(caps_text, doc.caps);
        doc.caps.seed = seed;
        rep.seed = seed;
        rep.args = json::parse(doc.args.dump());

        run(doc, rep);
        std::cout << render(rep, format);
        return rep.exit_code;
    } catch (const Error& e) {
        std::string code = errc_name(e.code());
        std::string msg = e.what();
        if (msg.rfind(code + ": ", 0) == 0) msg = msg.substr(code.size() + 2);
        if (format == "structured") std::cout << render_error(code, msg, format);
        std::cerr << render_error(code, msg, "human");
        return 1;
    } catch (const std::exception& e) {
        if (format == "structured") std::cout << render_error("Internal", e.what(), format);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
