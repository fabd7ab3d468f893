#include <doctest.h>

#include <cmath>

#include "wbinom/binomial.hpp"
#include "wbinom/elliptic.hpp"

using namespace wbinom;

namespace {
const Cplx kA{0.37, 0.21}, kB{1.23, -0.35}, kQ{0.81, 0.29}, kP{0.23, 0.11};
}

TEST_CASE("first rows of the generic table") {
    WeightSpec g = WeightSpec::generic();
    BinomTable<SymPoly> t(g);
    SymPoly w11 = SymPoly::var(Indeterminate::small_w(1, 1));
    CHECK(t.coeff(0, 0) == SymPoly(1));
    CHECK(t.coeff(1, 0) == SymPoly(1));
    CHECK(t.coeff(1, 1) == SymPoly(1));
    CHECK(t.coeff(2, 1) == SymPoly(1) + w11);
    // Unlike the classical triangle there is no k <-> n-k symmetry.
    CHECK(t.coeff(3, 1) != t.coeff(3, 2));
}

TEST_CASE("borders and degenerate queries") {
    WeightSpec g = WeightSpec::generic();
    BinomTable<SymPoly> t(g);
    CHECK(t.coeff(4, -1) == SymPoly());
    CHECK(t.coeff(4, 5) == SymPoly());
    CHECK(t.coeff(6, 0) == SymPoly(1));
    CHECK_THROWS_AS(t.coeff(-1, 0), std::invalid_argument);
}

TEST_CASE("q-commuting weights give the q-binomial coefficients") {
    WeightSpec qs = WeightSpec::q_commuting();
    SymPoly q = SymPoly::var(Indeterminate::sym_q());
    CHECK(wbinom<SymPoly>(qs, 2, 1) == SymPoly(1) + q);
    SymPoly q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
    CHECK(wbinom<SymPoly>(qs, 4, 2) == SymPoly(1) + q + SymPoly(2) * q2 + q3 + q4);
}

TEST_CASE("one-shot helpers agree with the lazy table") {
    WeightSpec g = WeightSpec::generic();
    BinomTable<SymPoly> t(g);
    CHECK(wbinom<SymPoly>(g, 5, 2) == t.coeff(5, 2));
    WeightSpec gv = WeightSpec::generic_vw();
    BinomTable<SymPoly> tv(gv, true);
    CHECK(vwbinom<SymPoly>(gv, 4, 2) == tv.coeff(4, 2));
    // The double-weight table differs from the single-weight one as soon as a
    // vertical weight enters.
    CHECK(vwbinom<SymPoly>(gv, 2, 1) != wbinom<SymPoly>(g, 2, 1));
}

TEST_CASE("numeric elliptic table approximates the closed form") {
    WeightSpec ell = WeightSpec::elliptic(kA, kB, kQ, kP);
    REQUIRE(elliptic_binom_degeneracy_floor(kA, kB, kQ, kP, 6) > 1e-6);
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            Cplx got = wbinom<Cplx>(ell, n, k);
            Cplx want = elliptic_binom_closed(kA, kB, kQ, kP, n, k);
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("closed elliptic borders are exact") {
    CHECK(elliptic_binom_closed(kA, kB, kQ, kP, 5, -1) == Cplx{0.0, 0.0});
    CHECK(elliptic_binom_closed(kA, kB, kQ, kP, 5, 6) == Cplx{0.0, 0.0});
    CHECK(elliptic_binom_closed(kA, kB, kQ, kP, 7, 7) == Cplx{1.0, 0.0});
    CHECK(elliptic_binom_closed(kA, kB, kQ, kP, 6, 0) == Cplx{1.0, 0.0});
    CHECK(elliptic_binom_closed(kA, kB, kQ, kP, 0, 0) == Cplx{1.0, 0.0});
}

TEST_CASE("convolution ranges are validated") {
    WeightSpec g = WeightSpec::generic();
    CHECK_THROWS_AS(convolution_check<SymPoly>(Cut::Diagonal, g, 2, 2, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_check<SymPoly>(Cut::Vertical, g, 0, 3, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(convolution_check<SymPoly>(Cut::Horizontal, g, 3, 0, 1),
                    std::invalid_argument);
    CHECK(convolution_check<SymPoly>(Cut::Diagonal, g, 2, 2, 2).is_zero());
    CHECK(convolution_check<SymPoly>(Cut::Vertical, g, 3, 2, 2).is_zero());
    CHECK(convolution_check<SymPoly>(Cut::Horizontal, g, 2, 3, 2).is_zero());
}

TEST_CASE("basic-family closed forms at small sizes") {
    // Balanced family, n = 2: direct recursion from the defining quotient.
    Cplx w11 = (1.0 - kB * kQ) / (1.0 - kB * cpow(kQ, 3)) * kQ;
    Cplx got = basic_binom_closed(WeightFamily::Balanced, Cplx{0.0, 0.0}, kB, kQ, 2, 1);
    Cplx want = 1.0 + w11; // [2,1] = 1 + W(1,1) and W(1,1) = w(1,1)
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    CHECK(basic_binom_closed(WeightFamily::VWP, kA, Cplx{0.0, 0.0}, kQ, 3, 3) ==
          Cplx{1.0, 0.0});
}
