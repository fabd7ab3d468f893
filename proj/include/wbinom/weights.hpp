#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <json.hpp>

#include "wbinom/poly.hpp"
#include "wbinom/theta.hpp"

namespace wbinom {

// Weight families. The first group is symbolic (exact SymPoly coefficients),
// the second numeric (complex double coefficients).
enum class WeightFamily {
    GenericSymbolic,      // w(s,t) stays a free symbol
    GenericDoubleSymbolic,// free symbols w(s,t) and v(s,t)
    Q,                    // w(s,t) = q (symbolic q)
    CompleteSym,          // w(s,t) = a_t / a_{t-1}
    ElementarySym,        // w(s,t) = a_{s+t} / a_{s+t-1}
    StirlingSecond,       // w = 1, v(s,t) = s
    StirlingFirst,        // w = 1, v(s,t) = 1 - s - t
    QStirlingSecond,      // w = 1, v(s,t) = (1 - q^s)/(1 - q)
    QStirlingFirst,       // w = 1, v(s,t) = (q^{s+t-1} - 1)/(1 - q)
    Elliptic,             // theta-quotient weights with parameters a, b, q, p
    BalancedVWP,          // the elliptic weights at p = 0
    Balanced,             // p = 0, a = 0 specialization
    VWP,                  // p = 0, b = 0 specialization
    CustomTable,          // caller-supplied numeric tables
};

std::string family_name(WeightFamily f);
std::optional<WeightFamily> family_from_name(std::string_view name);

struct WeightSpec {
    WeightFamily family = WeightFamily::GenericSymbolic;
    Cplx a{0.0, 0.0}, b{0.0, 0.0}, q{0.0, 0.0}, p{0.0, 0.0};
    int shift_s = 0, shift_t = 0; // observer shift: table entry (s,t) reads (s+shift_s, t+shift_t)
    std::function<Cplx(int, int)> custom_w;
    std::function<Cplx(int, int)> custom_v; // empty => single-weight custom table

    bool symbolic() const;
    bool double_weight() const;
    void validate() const; // throws std::invalid_argument / DegenerateParameter

    nlohmann::json to_json() const;
    static WeightSpec from_json(const nlohmann::json& j);

    static WeightSpec generic();
    static WeightSpec generic_vw();
    static WeightSpec q_commuting();
    static WeightSpec complete_sym();
    static WeightSpec elementary_sym();
    static WeightSpec stirling_second();
    static WeightSpec stirling_first();
    static WeightSpec q_stirling_second();
    static WeightSpec q_stirling_first();
    static WeightSpec elliptic(Cplx a, Cplx b, Cplx q, Cplx p);
    static WeightSpec balanced_vwp(Cplx a, Cplx b, Cplx q);
    static WeightSpec balanced(Cplx b, Cplx q);
    static WeightSpec vwp(Cplx a, Cplx q);
    static WeightSpec custom(std::function<Cplx(int, int)> w,
                             std::function<Cplx(int, int)> v = {});
};

// Composition of observer shifts: shift_spec(shift_spec(s, d1), d2) acts like
// shift_spec(s, d1 + d2).
WeightSpec shift_spec(WeightSpec spec, int ds, int dt);

// Weight accessors at grid position (s,t) of the (shifted) table:
//   small_weight    w(s,t)              s >= 1, t >= 1
//   small_weight_v  v(s,t)              s >= 0, t >= 1 (1 for single-weight families)
//   big_weight      W(s,t) = prod_{j=1}^{t} w(s,j)      s >= 1, t >= 0
SymPoly small_weight_sym(const WeightSpec&, int s, int t);
SymPoly small_weight_v_sym(const WeightSpec&, int s, int t);
SymPoly big_weight_sym(const WeightSpec&, int s, int t);
Cplx small_weight_num(const WeightSpec&, int s, int t);
Cplx small_weight_v_num(const WeightSpec&, int s, int t);
Cplx big_weight_num(const WeightSpec&, int s, int t);

template <class R> R small_weight(const WeightSpec& spec, int s, int t) {
    if constexpr (std::is_same_v<R, SymPoly>) return small_weight_sym(spec, s, t);
    else return small_weight_num(spec, s, t);
}
template <class R> R small_weight_v(const WeightSpec& spec, int s, int t) {
    if constexpr (std::is_same_v<R, SymPoly>) return small_weight_v_sym(spec, s, t);
    else return small_weight_v_num(spec, s, t);
}
template <class R> R big_weight(const WeightSpec& spec, int s, int t) {
    if constexpr (std::is_same_v<R, SymPoly>) return big_weight_sym(spec, s, t);
    else return big_weight_num(spec, s, t);
}

// How far kind-A variable indices move when a coefficient is transported
// across x^ds y^dt (ratio telescoping differs between the two families).
int a_index_shift(WeightFamily f, int ds, int dt);

// Transport a coefficient across x^ds y^dt. On symbols this is the index
// translation (s,t) -> (s+ds, t+dt); complex coefficients are scalars and
// pass through unchanged (callers must keep numeric right factors constant).
SymPoly shift_coeff(const SymPoly& c, int ds, int dt, const WeightSpec& spec);
inline Cplx shift_coeff(Cplx c, int, int, const WeightSpec&) { return c; }

// Substitute every kind-V symbol by the family's vertical weight at the
// symbol's own (absolute) indices; identity for the generic double family.
SymPoly eval_v_symbols(const SymPoly& c, const WeightSpec& spec);

// Closed elliptic weight formulas at explicit parameters (no observer shift).
Cplx elliptic_small_weight(Cplx a, Cplx b, Cplx q, Cplx p, int s, int t);
Cplx elliptic_big_weight_closed(Cplx a, Cplx b, Cplx q, Cplx p, int s, int t);
// p = 0 closed forms for the three specialized families.
Cplx basic_small_weight(WeightFamily f, Cplx a, Cplx b, Cplx q, int s, int t);
Cplx basic_big_weight_closed(WeightFamily f, Cplx a, Cplx b, Cplx q, int s, int t);

} // namespace wbinom
