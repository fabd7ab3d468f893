#include <doctest.h>

#include <cmath>

#include "wbinom/rng.hpp"
#include "wbinom/theta.hpp"

using namespace wbinom;

TEST_CASE("truncation rule is converged: doubling the terms changes nothing") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        Cplx x = rng.param(), p = rng.nome();
        int terms = theta_truncation_terms(std::abs(p));
        Cplx more = theta_truncated(x, p, 2 * terms);
        CHECK(std::abs(theta_truncated(x, p, terms) - more) <=
              1e-12 * std::max(1.0, std::abs(more)));
        CHECK(std::abs(theta(x, p) - more) <= 1e-12 * std::max(1.0, std::abs(more)));
    }
    CHECK(theta_truncation_terms(0.5) >= 40);
    CHECK(theta_truncation_terms(0.05) <= theta_truncation_terms(0.5));
}

TEST_CASE("zero nome branch is the exact linear factor") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        Cplx x = rng.param();
        CHECK(theta(x, Cplx{0.0, 0.0}) == 1.0 - x);
    }
}

TEST_CASE("degenerate theta inputs throw") {
    CHECK_THROWS_AS(theta(Cplx{0.0, 0.0}, Cplx{0.0, 0.0}), ZeroArgument);
    CHECK_THROWS_AS(theta(Cplx{0.0, 0.0}, Cplx{0.3, 0.0}), ZeroArgument);
    CHECK_THROWS_AS(theta(Cplx{1.0, 0.0}, Cplx{1.2, 0.0}), DegenerateParameter);
    CHECK_THROWS_AS(qp_factorial(Cplx{0.5, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, 3),
                    DegenerateParameter);
}

TEST_CASE("theta ratio interleaves factor-wise") {
    Rng rng(23);
    Cplx p = rng.nome();
    Cplx x = rng.param(), y = rng.param();
    std::vector<Cplx> num{x, y}, den{x, y};
    CHECK(theta_ratio(num, den, p) == Cplx{1.0, 0.0});
    // theta vanishes identically at argument 1, so it is a degenerate
    // denominator.
    std::vector<Cplx> num1{x}, den1{Cplx{1.0, 0.0}};
    CHECK_THROWS_AS(theta_ratio(num1, den1, p), EllipticDegenerate);
}

TEST_CASE("product shorthand multiplies") {
    Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        Cplx x = rng.param(), y = rng.param(), p = rng.nome();
        Cplx both = theta({x, y}, p);
        Cplx sep = theta(x, p) * theta(y, p);
        CHECK(std::abs(both - sep) <= 1e-12 * std::max(1.0, std::abs(sep)));
        Cplx f2 = qp_factorial({x, y}, Cplx{0.7, 0.1}, p, 3);
        Cplx f2sep = qp_factorial(x, Cplx{0.7, 0.1}, p, 3) *
                     qp_factorial(y, Cplx{0.7, 0.1}, p, 3);
        CHECK(std::abs(f2 - f2sep) <= 1e-12 * std::max(1.0, std::abs(f2sep)));
    }
}

TEST_CASE("negatively indexed factorial inverts the shifted positive one") {
    Rng rng(25);
    for (int t = 0; t < 30; ++t) {
        Cplx a = rng.param(), q = rng.param(), p = rng.nome();
        int n = rng.uniform_int(1, 6);
        Cplx neg = qp_factorial(a, q, p, -n);
        Cplx pos = qp_factorial(a * cpow(q, -n), q, p, n);
        CHECK(std::abs(neg * pos - 1.0) <= 1e-10 * std::max(1.0, std::abs(neg * pos)));
    }
    CHECK(qp_factorial(Cplx{0.4, 0.1}, Cplx{0.8, 0.0}, Cplx{0.2, 0.0}, 0) == Cplx{1.0, 0.0});
}

TEST_CASE("factorial at p = 0 accepts a zero base") {
    // (0; q, 0)_n = 1 for every n >= 0.
    CHECK(qp_factorial(Cplx{0.0, 0.0}, Cplx{0.5, 0.0}, Cplx{0.0, 0.0}, 4) == Cplx{1.0, 0.0});
    std::vector<Cplx> num{Cplx{0.0, 0.0}};
    std::vector<Cplx> den{Cplx{0.25, 0.0}};
    Cplx r = qp_factorial_ratio(num, den, Cplx{0.5, 0.0}, Cplx{0.0, 0.0}, 2);
    // (0;q)_2 / (1/4;q)_2 with q = 1/2: 1 / ((3/4)(7/8)) = 32/21.
    CHECK(std::abs(r - Cplx{32.0 / 21.0, 0.0}) <= 1e-14);
}

TEST_CASE("addition rule residual is tiny on random draws") {
    Rng rng(26);
    for (int t = 0; t < 30; ++t) {
        CHECK(theta_addition_residual(rng.param(), rng.param(), rng.param(), rng.param(),
                                      rng.nome()) <= 1e-11);
    }
}
