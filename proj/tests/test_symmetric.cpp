#include <doctest.h>

#include <cmath>

#include "wbinom/rng.hpp"
#include "wbinom/symmetric.hpp"

using namespace wbinom;

namespace {

// Brute-force h_k / e_k: sum over weakly (resp. strictly) increasing index
// tuples, assembled monomial by monomial.
SymPoly brute_sym(int k, SymVarSet vars, bool strict) {
    SymPoly out;
    if (k == 0) return SymPoly(1);
    std::vector<int> idx;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(idx.size()) == k) {
            Monomial m;
            for (int i : idx) m = m * Monomial::var(Indeterminate::sym_a(i));
            out += SymPoly::monomial(m, Rational(1));
            return;
        }
        for (int i = next; i <= vars.hi; ++i) {
            idx.push_back(i);
            self(self, strict ? i + 1 : i);
            idx.pop_back();
        }
    };
    rec(rec, vars.lo);
    return out;
}

Assignment random_assignment(Rng& rng, int hi) {
    Assignment asn;
    for (int i = 0; i <= hi; ++i) {
        asn.set(Indeterminate::sym_a(i),
                std::polar(rng.log_uniform(0.5, 1.5), rng.uniform(0.0, 6.28)));
    }
    return asn;
}

} // namespace

TEST_CASE("recursive h and e match brute-force tuple sums") {
    for (int lo = 0; lo <= 2; ++lo) {
        for (int hi = lo - 1; hi <= lo + 3; ++hi) {
            SymVarSet vars{lo, hi};
            for (int k = 0; k <= 4; ++k) {
                CHECK(complete_h(k, vars) == brute_sym(k, vars, false));
                CHECK(elementary_e(k, vars) == brute_sym(k, vars, true));
            }
        }
    }
}

TEST_CASE("empty-set and overflow conventions") {
    SymVarSet empty{3, 2};
    CHECK(empty.size() == 0);
    CHECK(complete_h(0, empty) == SymPoly(1));
    CHECK(complete_h(2, empty) == SymPoly());
    CHECK(elementary_e(0, empty) == SymPoly(1));
    SymVarSet two{1, 2};
    CHECK(elementary_e(3, two) == SymPoly());
    CHECK(elementary_e(2, two) ==
          SymPoly::var(Indeterminate::sym_a(1)) * SymPoly::var(Indeterminate::sym_a(2)));
}

TEST_CASE("symmetry under permutations of the evaluated variables") {
    Rng rng(31);
    SymVarSet vars{0, 4};
    SymPoly h3 = complete_h(3, vars), e3 = elementary_e(3, vars);
    Assignment asn = random_assignment(rng, 4);
    // Swap two values: a symmetric polynomial cannot notice.
    Assignment swapped = asn;
    swapped.set(Indeterminate::sym_a(1), asn.get(Indeterminate::sym_a(3)));
    swapped.set(Indeterminate::sym_a(3), asn.get(Indeterminate::sym_a(1)));
    CHECK(std::abs(h3.substitute(asn) - h3.substitute(swapped)) <=
          1e-12 * std::max(1.0, std::abs(h3.substitute(asn))));
    CHECK(std::abs(e3.substitute(asn) - e3.substitute(swapped)) <=
          1e-12 * std::max(1.0, std::abs(e3.substitute(asn))));
}

TEST_CASE("table columns have symmetric-function closed forms") {
    for (int n = 0; n <= 5; ++n) {
        CHECK(sym_binom_check('h', n).is_zero());
        CHECK(sym_binom_check('e', n).is_zero());
    }
}

TEST_CASE("convolution identities at spot sizes") {
    CHECK(sym_identity_check(SymIdentity::H1, 3, 2, 4).is_zero());
    CHECK(sym_identity_check(SymIdentity::H2, 3, 2, 2).is_zero());
    CHECK(sym_identity_check(SymIdentity::SchurH, 3, 2, 1).is_zero());
    CHECK(sym_identity_check(SymIdentity::SchurE, 2, 3, 2).is_zero());
    CHECK(sym_identity_check(SymIdentity::E1, 3, 2, 1).is_zero());
    CHECK(sym_identity_check(SymIdentity::E2, 2, 3, 2).is_zero());
    CHECK_THROWS_AS(sym_identity_check(SymIdentity::H2, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(sym_identity_check(SymIdentity::SchurH, 2, 2, 0), std::invalid_argument);
}
