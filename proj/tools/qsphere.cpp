// Command-line front end: runs named verification suites and emits a text
// table or a JSON report. Exit codes: 0 all checks pass, 1 any check
// failed, 2 configuration error.
#include "qsphere/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace qsphere;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

int run(const std::string& suite, const SuiteConfig& cfg, bool as_json) {
    Suite checks = run_suite(suite, cfg);
    size_t pass = 0, fail = 0;
    for (const CheckResult& r : checks) (r.ok() ? pass : fail)++;

    if (as_json) {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = {{"suite", suite},
                         {"q0", rational_str(cfg.q0)},
                         {"cutoff", cfg.cutoff},
                         {"degree_bound", cfg.degree_bound},
                         {"step_limit", cfg.step_limit}};
        doc["checks"] = json::array();
        for (const CheckResult& r : checks)
            doc["checks"].push_back({{"id", r.id},
                                     {"paper_anchor", r.anchor},
                                     {"status", r.status},
                                     {"expected", r.expected},
                                     {"actual", r.actual},
                                     {"elapsed_ms", r.elapsed_ms}});
        doc["summary"] = {{"pass", pass}, {"fail", fail}};
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        for (const CheckResult& r : checks)
            std::printf("%-7s %-22s %-24s expected: %s | actual: %s (%.0f ms)\n",
                        r.status.c_str(), r.id.c_str(), r.anchor.c_str(), r.expected.c_str(),
                        r.actual.c_str(), r.elapsed_ms);
        std::printf("summary: %zu pass, %zu fail\n", pass, fail);
    }
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the q-deformed 4-sphere"};
    app.set_version_flag("--version", kVersion);

    std::string suite = "all";
    std::string q0_text = "1/2";
    SuiteConfig cfg;
    bool as_json = false;

    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    app.add_option("suite", suite, "Suite to run")
        ->check(CLI::IsMember(allowed))
        ->default_val("all");
    app.add_option("--q", q0_text, "Specialization point as a rational p/r (floats rejected)");
    app.add_option("--cutoff", cfg.cutoff, "Fock truncation N");
    app.add_option("--degree", cfg.degree_bound, "Word-degree bound");
    app.add_option("--step-limit", cfg.step_limit, "Rewrite-step guard per normal form");
    app.add_flag("--json", as_json, "Emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("QSPHERE_STEP_LIMIT");
        env != nullptr && !app.count("--step-limit")) {
        try {
            cfg.step_limit = std::stol(env);
        } catch (const std::exception&) {
            std::fprintf(stderr, "error: bad QSPHERE_STEP_LIMIT: %s\n", env);
            return 2;
        }
    }

    try {
        if (q0_text.find_first_of(".eE") != std::string::npos)
            throw ConfigError("q0 must be an exact rational p/r, not a float");
        cfg.q0 = parse_rational(q0_text);
        cfg.validate();
        return run(suite, cfg, as_json);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
