#include <doctest.h>

#include <cmath>

#include "wbinom/poly.hpp"
#include "wbinom/rng.hpp"

using namespace wbinom;

namespace {

Indeterminate random_var(Rng& rng) {
    switch (rng.uniform_int(0, 3)) {
        case 0: return Indeterminate::small_w(rng.uniform_int(1, 3), rng.uniform_int(1, 3));
        case 1: return Indeterminate::small_v(rng.uniform_int(0, 2), rng.uniform_int(1, 3));
        case 2: return Indeterminate::sym_a(rng.uniform_int(0, 4));
        default: return Indeterminate::sym_q();
    }
}

SymPoly random_poly(Rng& rng) {
    SymPoly p;
    int nterms = rng.uniform_int(0, 4);
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        int nfac = rng.uniform_int(0, 3);
        for (int j = 0; j < nfac; ++j) {
            int e = (rng.uniform_int(0, 1) == 0 ? 1 : -1) * rng.uniform_int(1, 2);
            m = m * Monomial::var(random_var(rng), e);
        }
        p.add_term(m, Rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 5)));
    }
    return p;
}

Assignment full_assignment(Rng& rng) {
    Assignment asn;
    for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
            asn.set(Indeterminate::small_w(s, t),
                    std::polar(rng.log_uniform(0.5, 1.5), rng.uniform(0.0, 6.28)));
        }
    }
    for (int s = 0; s <= 2; ++s) {
        for (int t = 1; t <= 3; ++t) {
            asn.set(Indeterminate::small_v(s, t),
                    std::polar(rng.log_uniform(0.5, 1.5), rng.uniform(0.0, 6.28)));
        }
    }
    for (int i = 0; i <= 4; ++i) {
        asn.set(Indeterminate::sym_a(i),
                std::polar(rng.log_uniform(0.5, 1.5), rng.uniform(0.0, 6.28)));
    }
    asn.set(Indeterminate::sym_q(), std::polar(rng.log_uniform(0.5, 1.5), rng.uniform(0.0, 6.28)));
    return asn;
}

} // namespace

TEST_CASE("polynomial ring axioms on random elements") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        SymPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == SymPoly());
        CHECK(a * SymPoly(1) == a);
        CHECK(a * SymPoly() == SymPoly());
        CHECK(a - a == SymPoly());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        SymPoly a = random_poly(rng), b = random_poly(rng);
        Assignment asn = full_assignment(rng);
        Cplx pa = a.substitute(asn), pb = b.substitute(asn);
        Cplx sum = (a + b).substitute(asn);
        Cplx prod = (a * b).substitute(asn);
        CHECK(std::abs(sum - (pa + pb)) <= 1e-12 * std::max(1.0, std::abs(pa) + std::abs(pb)));
        CHECK(std::abs(prod - pa * pb) <= 1e-12 * std::max(1.0, std::abs(pa) * std::abs(pb)));
    }
}

TEST_CASE("substitution requires every variable") {
    SymPoly p = SymPoly::var(Indeterminate::small_w(1, 1));
    Assignment empty;
    CHECK_THROWS_AS(p.substitute(empty), MissingAssignment);
}

TEST_CASE("json round-trip") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        SymPoly p = random_poly(rng);
        CHECK(SymPoly::from_json(p.to_json()) == p);
    }
    CHECK(SymPoly::from_json(SymPoly().to_json()) == SymPoly());
}

TEST_CASE("index shifts act on variable positions") {
    SymPoly p = SymPoly::var(Indeterminate::small_w(1, 2)) *
                SymPoly::var(Indeterminate::small_v(0, 1)) *
                SymPoly::var(Indeterminate::sym_a(3)) * SymPoly::var(Indeterminate::sym_q());
    SymPoly shifted = p.shifted_indices(2, 3, 1);
    SymPoly expect = SymPoly::var(Indeterminate::small_w(3, 5)) *
                     SymPoly::var(Indeterminate::small_v(2, 4)) *
                     SymPoly::var(Indeterminate::sym_a(4)) * SymPoly::var(Indeterminate::sym_q());
    CHECK(shifted == expect);
    // Shifting out of a variable's legal range is an error.
    SymPoly v0 = SymPoly::var(Indeterminate::small_v(0, 1));
    CHECK_THROWS_AS(v0.shifted_indices(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("powers, including Laurent inverses of monomials") {
    SymPoly q = SymPoly::var(Indeterminate::sym_q());
    SymPoly one_plus_q = SymPoly(1) + q;
    SymPoly cube = one_plus_q.pow(3);
    SymPoly expect = SymPoly(1) + SymPoly(3) * q + SymPoly(3) * q * q + q * q * q;
    CHECK(cube == expect);
    CHECK(one_plus_q.pow(0) == SymPoly(1));

    SymPoly half_q = SymPoly::monomial(Monomial::var(Indeterminate::sym_q()), Rational(1, 2));
    CHECK(half_q.pow(-1) == SymPoly::monomial(Monomial::var(Indeterminate::sym_q(), -1),
                                              Rational(2)));
    CHECK(half_q.pow(-1) * half_q == SymPoly(1));
    CHECK_THROWS_AS(one_plus_q.pow(-1), std::invalid_argument);
}

TEST_CASE("constants and coefficient lookup") {
    SymPoly c(7);
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(7));
    CHECK(SymPoly().is_constant());
    CHECK(SymPoly().constant_value() == Rational(0));
    SymPoly q = SymPoly::var(Indeterminate::sym_q());
    CHECK_FALSE((c + q).is_constant());
    CHECK((c + q).coeff(Monomial::var(Indeterminate::sym_q())) == Rational(1));
    CHECK((c + q).coeff(Monomial::var(Indeterminate::sym_q(), 2)) == Rational(0));
}
