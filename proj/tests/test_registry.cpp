#include <doctest.h>

#include <algorithm>

#include "wbinom/registry.hpp"

using namespace wbinom;

TEST_CASE("registry is sorted and addresses every advertised identity") {
    const auto& reg = identity_registry();
    CHECK(std::is_sorted(reg.begin(), reg.end(), [](const auto& a, const auto& b) {
        return a.name < b.name;
    }));
    for (const char* name :
         {"binomial-theorem", "binomial-theorem-vw", "path-oracle", "lemma-commutation",
          "normalizer-rewriter", "convolution-diagonal", "convolution-vertical",
          "convolution-horizontal", "path-decomposition-diagonal", "path-decomposition-vertical",
          "path-decomposition-horizontal", "elliptic-binomial", "v109", "jackson-8phi7",
          "v109-diagonal", "v109-vertical", "v109-horizontal", "theta-inversion",
          "theta-quasiperiodicity", "theta-addition", "theta-nome-zero", "qp-factorial-shift",
          "sym-binomial-h", "sym-binomial-e", "h1", "h2", "schur-h", "schur-e", "e1", "e2",
          "balanced-vwp-binomial", "balanced-binomial", "vwp-binomial", "balanced-q-limit",
          "vwp-q-limit", "stirling-second", "stirling-first", "q-stirling-second",
          "q-stirling-first"}) {
        const IdentityCheck* c = find_identity(name);
        REQUIRE_MESSAGE(c != nullptr, name);
        CHECK_FALSE(c->summary.empty());
    }
    CHECK(find_identity("no-such-identity") == nullptr);
}

TEST_CASE("pinned configurations run fast and pass") {
    CheckConfig small;
    small.k = 2;
    small.l = 2;
    CheckResult lemma = find_identity("lemma-commutation")->run(small);
    CHECK(lemma.pass);
    CHECK(lemma.identity == "lemma-commutation");
    CHECK_FALSE(lemma.max_residual.has_value()); // exact check

    CheckConfig tiny;
    tiny.trials = 5;
    CheckResult nz = find_identity("theta-nome-zero")->run(tiny);
    CHECK(nz.pass);
    CHECK(nz.trials == 5);
    REQUIRE(nz.max_residual.has_value());
    CHECK(*nz.max_residual == 0.0);

    CheckConfig empty_sum;
    empty_sum.n = 0;
    empty_sum.trials = 1;
    CHECK(find_identity("v109")->run(empty_sum).pass);
}

TEST_CASE("result json follows the report schema") {
    CheckConfig small;
    small.k = 1;
    small.l = 1;
    CheckResult r = find_identity("lemma-commutation")->run(small);
    nlohmann::json j = check_result_json(r, false);
    CHECK(j.contains("identity"));
    CHECK(j.contains("params"));
    CHECK(j.contains("trials"));
    CHECK(j["max_residual"] == "exact-zero");
    CHECK(j["pass"] == true);
    CHECK_FALSE(j.contains("millis"));
    nlohmann::json jt = check_result_json(r, true);
    CHECK(jt.contains("millis"));
}
