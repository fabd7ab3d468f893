#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "wbinom/errors.hpp"
#include "wbinom/monomial.hpp"
#include "wbinom/types.hpp"

namespace wbinom {

// Values for a numeric substitution, keyed by indeterminate.
class Assignment {
public:
    void set(const Indeterminate& x, Cplx value) { values_[x] = value; }

    Cplx get(const Indeterminate& x) const {
        auto it = values_.find(x);
        if (it == values_.end()) throw MissingAssignment(x.str());
        return it->second;
    }

    bool contains(const Indeterminate& x) const { return values_.count(x) != 0; }

private:
    std::map<Indeterminate, Cplx> values_;
};

// Multivariate Laurent polynomial with exact rational coefficients; terms
// are kept sorted by monomial and never carry a zero coefficient.
class SymPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    SymPoly() = default; // zero
    SymPoly(int c) { add_term(Monomial{}, Rational(c)); }
    SymPoly(const Rational& c) { add_term(Monomial{}, c); }

    static SymPoly var(const Indeterminate& x, int exp = 1) {
        SymPoly p;
        p.add_term(Monomial::var(x, exp), Rational(1));
        return p;
    }
    static SymPoly monomial(const Monomial& m, const Rational& c) {
        SymPoly p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); zero for the empty polynomial.
    Rational constant_value() const;
    // Nonzero coefficient lookup (zero if the monomial is absent).
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const SymPoly& rhs) { *this = *this * rhs; return *this; }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { a += b; return a; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { a -= b; return a; }
    SymPoly operator-() const;
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    // Nonnegative exponents always work; a negative exponent requires a
    // single-term polynomial (invertible monomial).
    SymPoly pow(int e) const;

    // Index translation of every variable: W/V by (ds,dt), A by da, q fixed.
    SymPoly shifted_indices(int ds, int dt, int da) const;

    // Ring homomorphism into the complex numbers.
    Cplx substitute(const Assignment& values) const;

    // Variable-wise substitution by polynomials (used to specialize weight
    // symbols through a family map); variables the map leaves untouched stay.
    template <class Fn> // Fn: const Indeterminate& -> SymPoly
    SymPoly map_vars(Fn&& fn) const {
        SymPoly out;
        for (const auto& [m, c] : terms_) {
            SymPoly term(c);
            for (const auto& [x, e] : m.factors()) term *= fn(x).pow(e);
            out += term;
        }
        return out;
    }

    std::string str() const;
    nlohmann::json to_json() const;
    static SymPoly from_json(const nlohmann::json& j);

private:
    TermMap terms_;
};

std::string rational_str(const Rational& r);

} // namespace wbinom
