#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>

#include "wbinom/registry.hpp"

using namespace wbinom;

namespace {

bool pass_all(std::initializer_list<const char*> names) {
    for (const char* name : names) {
        const IdentityCheck* c = find_identity(name);
        if (c == nullptr) return false;
        CheckConfig cfg; // registry defaults are the acceptance sizes/tolerances
        if (!c->run(cfg).pass) return false;
    }
    return true;
}

struct Criterion {
    const char* label;
    std::function<bool()> run;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"binomial theorem, generic weights, n <= 8, exact",
         [] { return pass_all({"binomial-theorem"}); }},
        {"binomial theorem, double weights, n <= 7, exact",
         [] { return pass_all({"binomial-theorem-vw"}); }},
        {"recursion tables equal path generating functions, n <= 8, exact",
         [] { return pass_all({"path-oracle"}); }},
        {"commutation lemma k,l <= 6 and rewriter cross-check, exact",
         [] { return pass_all({"lemma-commutation", "normalizer-rewriter"}); }},
        {"three convolutions (n+m <= 7) and three path decompositions (8x8), exact",
         [] {
             return pass_all({"convolution-diagonal", "convolution-vertical",
                              "convolution-horizontal", "path-decomposition-diagonal",
                              "path-decomposition-vertical", "path-decomposition-horizontal"});
         }},
        {"elliptic coefficient: closed form vs recursion, borders, nome shifts (1e-9)",
         [] { return pass_all({"elliptic-binomial"}); }},
        {"terminating very-well-poised summation (1e-8) and its p=0 branch (1e-10)",
         [] { return pass_all({"v109", "jackson-8phi7"}); }},
        {"elliptic convolutions in closed form, n,m <= 5 (1e-8)",
         [] { return pass_all({"v109-diagonal", "v109-vertical", "v109-horizontal"}); }},
        {"theta kernel identities (1e-11) and exact zero-nome branch",
         [] {
             return pass_all({"theta-inversion", "theta-quasiperiodicity", "theta-addition",
                              "qp-factorial-shift", "theta-nome-zero"});
         }},
        {"symmetric-function identities n,m <= 6 and closed columns n <= 8, exact",
         [] {
             return pass_all(
                 {"h1", "h2", "schur-h", "schur-e", "e1", "e2", "sym-binomial-h",
                  "sym-binomial-e"});
         }},
        {"p=0 families: closed forms n <= 10 (1e-9) and q-binomial limits (1e-12)",
         [] {
             return pass_all({"balanced-vwp-binomial", "balanced-binomial", "vwp-binomial",
                              "balanced-q-limit", "vwp-q-limit"});
         }},
        {"Stirling specializations vs brute-force counts, n <= 8, exact",
         [] { return pass_all({"stirling-second", "stirling-first"}); }},
        {"two reports at seed 42 are byte-identical",
         [] {
             auto first = run_report(42, false);
             auto second = run_report(42, false);
             return first.second && second.second && first.first == second.first;
         }},
    };

    bool all = true;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = c.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        all = all && ok;
        std::printf("%s  criterion %2d: %s  (%lldms)\n", ok ? "PASS" : "FAIL", id, c.label,
                    static_cast<long long>(ms));
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all 13 criteria passed"
                            : "ACCEPTANCE: at least one criterion failed");
    return all ? 0 : 1;
}
