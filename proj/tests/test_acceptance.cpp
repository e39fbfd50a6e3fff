// Acceptance gate: runs every suite with the default configuration and
// prints one pass/fail line per acceptance criterion. Exit code 0 iff all
// nine criteria pass.
#include "qsphere/report.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace qsphere;

namespace {

struct Criterion {
    int number;
    std::string title;
    // suite name -> check ids that must pass
    std::vector<std::pair<std::string, std::string>> checks;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c = {
        {1,
         "completion is confluent and the degree-4 basis has k1*k2 = 0",
         {{"presentations", "completion-uq4"},
          {"presentations", "completion-s7q"},
          {"presentations", "completion-sigma4q"},
          {"presentations", "completion-sigma4q-loc"},
          {"presentations", "sigma4q-basis"}}},
        {2,
         "four-sphere relations vanish under the seven-sphere embedding",
         {{"presentations", "embedding-relations"}}},
        {3,
         "quotient: r(D_q) = 1, coideal absorption, degree-2 coinvariants",
         {{"quotient", "r-detq"},
          {"quotient", "coideal-absorption"},
          {"quotient", "coinvariant-slice-2"}}},
        {4,
         "projector matches the closed form, G^2 = G = G^+, Tr G",
         {{"bundle", "eq8-entries"}, {"bundle", "projector"}, {"bundle", "trace-G"}}},
        {5,
         "classical q = 1 cross-checks",
         {{"bundle", "classical-crosscheck"}}},
        {6,
         "Poisson: coisotropy table, bracket table, Jacobi, global sign",
         {{"poisson", "cocycle"},
          {"poisson", "coisotropy-diag"},
          {"poisson", "coisotropy-conjugated"},
          {"poisson", "u3-poisson-lie"},
          {"poisson", "bracket-table"},
          {"poisson", "stereographic"},
          {"poisson", "jacobi"},
          {"poisson", "semiclassical-sign"}}},
        {7,
         "representation: relations on the interior, exact vs numeric traces, trace class",
         {{"fock", "relations-interior"},
          {"fock", "exact-traces"},
          {"fock", "truncated-vs-exact"},
          {"fock", "trace-class"},
          {"fock", "zeta-relations"}}},
        {8,
         "Chern: ch_0 closed form, pairing -1, cyclic cycles, trace property x100",
         {{"chern", "chern0-closed-form"},
          {"chern", "pairing-ch0"},
          {"chern", "cycle-check"},
          {"chern", "trace-property-100"}}},
        {9,
         "property suites: beta^2, cyclicity, star, nf idempotency, coalgebra axioms",
         {{"presentations", "star-involution"},
          {"presentations", "nf-idempotent"},
          {"presentations", "coassociativity"},
          {"presentations", "counit"},
          {"chern", "beta-squared"},
          {"chern", "t-cyclic"},
          {"chern", "s-operator"}}},
    };
    return c;
}

}  // namespace

int main() {
    SuiteConfig cfg;
    std::map<std::string, std::map<std::string, CheckResult>> results;
    for (const std::string& name : suite_names()) {
        Suite s = run_suite(name, cfg);
        for (const CheckResult& r : s) results[name][r.id] = r;
    }

    bool all_ok = true;
    for (const Criterion& c : criteria()) {
        bool ok = true;
        std::string first_failure;
        for (const auto& [suite, id] : c.checks) {
            auto sit = results.find(suite);
            const CheckResult* r = nullptr;
            if (sit != results.end()) {
                auto cit = sit->second.find(id);
                if (cit != sit->second.end()) r = &cit->second;
            }
            if (r == nullptr || !r->ok()) {
                ok = false;
                if (first_failure.empty())
                    first_failure = suite + "/" + id + (r ? ": " + r->actual : ": missing");
            }
        }
        all_ok = all_ok && ok;
        std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), ok ? "" : "  [", ok ? "" : (first_failure + "]").c_str());
    }
    return all_ok ? 0 : 1;
}
