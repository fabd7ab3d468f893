#include <doctest.h>

#include <cmath>

#include "wbinom/elliptic.hpp"
#include "wbinom/rng.hpp"

using namespace wbinom;

namespace {

const Cplx kA{0.37, 0.21}, kB{1.23, -0.35}, kC{0.64, -0.18}, kD{0.52, 0.33};
const Cplx kQ{0.81, 0.29}, kP{0.23, 0.11};

EllipticParams balanced_params(int n) {
    EllipticParams P;
    P.a = kA;
    P.b = kB;
    P.c = kC;
    P.d = kD;
    P.q = kQ;
    P.p = kP;
    P.n = n;
    P.e = balancing_e(P.a, P.b, P.c, P.d, P.q, n);
    return P;
}

double rel(Cplx got, Cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace

TEST_CASE("balancing determines e and is checked") {
    EllipticParams P = balanced_params(3);
    CHECK_NOTHROW(check_balancing(P));
    P.e *= 1.001;
    CHECK_THROWS_AS(check_balancing(P), BalancingViolation);
    CHECK_THROWS_AS(balancing_e(kA, Cplx{0.0, 0.0}, kC, kD, kQ, 2), DegenerateParameter);
}

TEST_CASE("terminating summation holds at fixed parameters") {
    for (int n = 0; n <= 5; ++n) {
        EllipticParams P = balanced_params(n);
        REQUIRE(v109_degeneracy_floor(P) > 1e-7);
        auto [lhs, rhs] = v109_sides(P);
        CHECK(rel(lhs, rhs) <= 1e-9);
    }
    // n = 0 is the empty case: both sides are exactly one.
    auto [l0, r0] = v109_sides(balanced_params(0));
    CHECK(l0 == Cplx{1.0, 0.0});
    CHECK(r0 == Cplx{1.0, 0.0});
}

TEST_CASE("the p = 0 specialization holds as well") {
    for (int n = 1; n <= 5; ++n) {
        EllipticParams P = balanced_params(n);
        P.p = Cplx{0.0, 0.0};
        P.e = balancing_e(P.a, P.b, P.c, P.d, P.q, n);
        REQUIRE(v109_degeneracy_floor(P) > 1e-7);
        auto [lhs, rhs] = v109_sides(P);
        CHECK(rel(lhs, rhs) <= 1e-11);
    }
}

TEST_CASE("closed-form convolutions vanish at fixed parameters") {
    REQUIRE(elliptic_binom_degeneracy_floor(kA, kB, kQ, kP, 6) > 1e-7);
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (int k = 0; k <= n + m; ++k) {
                Cplx delta = v109_convolution_delta(Cut::Diagonal, kA, kB, kQ, kP, n, m, k);
                Cplx ref = elliptic_binom_closed(kA, kB, kQ, kP, n + m, k);
                CHECK(std::abs(delta) <= 1e-9 * std::max(1.0, std::abs(ref)));
            }
            for (int l = 1; l <= n; ++l) {
                Cplx delta = v109_convolution_delta(Cut::Vertical, kA, kB, kQ, kP, n, m, l);
                Cplx ref = elliptic_binom_closed(kA, kB, kQ, kP, n + m, n);
                CHECK(std::abs(delta) <= 1e-9 * std::max(1.0, std::abs(ref)));
            }
            for (int k = 1; k <= m; ++k) {
                Cplx delta = v109_convolution_delta(Cut::Horizontal, kA, kB, kQ, kP, n, m, k);
                Cplx ref = elliptic_binom_closed(kA, kB, kQ, kP, n + m, n);
                CHECK(std::abs(delta) <= 1e-9 * std::max(1.0, std::abs(ref)));
            }
        }
    }
}

TEST_CASE("the diagonal convolution is a disguised summation instance") {
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            for (int k = 0; k <= n + m; ++k) {
                EllipticParams P = v109_from_diagonal(kA, kB, kQ, kP, n, m, k);
                CHECK_NOTHROW(check_balancing(P));
                if (v109_degeneracy_floor(P) > 1e-7) {
                    auto [lhs, rhs] = v109_sides(P);
                    CHECK(rel(lhs, rhs) <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("degeneracy floors are positive away from poles") {
    CHECK(elliptic_binom_degeneracy_floor(kA, kB, kQ, kP, 8) > 0.0);
    CHECK(elliptic_table_degeneracy_floor(kA, kB, kQ, kP, 5, 5) > 0.0);
    CHECK(v109_degeneracy_floor(balanced_params(4)) > 0.0);
}
