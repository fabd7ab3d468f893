#include "wbinom/weights.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace wbinom {

namespace {

struct FamilyName {
    WeightFamily family;
    const char* name;
};

constexpr std::array<FamilyName, 14> kFamilyNames{{
    {WeightFamily::GenericSymbolic, "generic"},
    {WeightFamily::GenericDoubleSymbolic, "generic-vw"},
    {WeightFamily::Q, "q"},
    {WeightFamily::CompleteSym, "complete-sym"},
    {WeightFamily::ElementarySym, "elementary-sym"},
    {WeightFamily::StirlingSecond, "stirling-second"},
    {WeightFamily::StirlingFirst, "stirling-first"},
    {WeightFamily::QStirlingSecond, "q-stirling-second"},
    {WeightFamily::QStirlingFirst, "q-stirling-first"},
    {WeightFamily::Elliptic, "elliptic"},
    {WeightFamily::BalancedVWP, "balanced-vwp"},
    {WeightFamily::Balanced, "balanced"},
    {WeightFamily::VWP, "vwp"},
    {WeightFamily::CustomTable, "custom-table"},
}};

// Sum 1 + q + ... + q^{n-1} as an exact polynomial in the symbol q.
SymPoly q_integer(int n) {
    SymPoly out;
    Indeterminate q = Indeterminate::sym_q();
    for (int i = 0; i < n; ++i) {
        out += (i == 0) ? SymPoly(1) : SymPoly::var(q, i);
    }
    return out;
}

Cplx checked_num_ratio(Cplx num, Cplx den, const char* what) {
    if (std::abs(den) < kThetaDegeneracyEps) {
        throw EllipticDegenerate(std::string("vanishing denominator in ") + what);
    }
    return num / den;
}

void require_indices(int s, int t, int min_s) {
    if (s < min_s || t < 1) {
        throw std::invalid_argument("weight index out of range: (" + std::to_string(s) + "," +
                                    std::to_string(t) + ")");
    }
}

} // namespace

std::string family_name(WeightFamily f) {
    for (const auto& fn : kFamilyNames) {
        if (fn.family == f) return fn.name;
    }
    return "?";
}

std::optional<WeightFamily> family_from_name(std::string_view name) {
    for (const auto& fn : kFamilyNames) {
        if (name == fn.name) return fn.family;
    }
    return std::nullopt;
}

bool WeightSpec::symbolic() const {
    switch (family) {
        case WeightFamily::GenericSymbolic:
        case WeightFamily::GenericDoubleSymbolic:
        case WeightFamily::Q:
        case WeightFamily::CompleteSym:
        case WeightFamily::ElementarySym:
        case WeightFamily::StirlingSecond:
        case WeightFamily::StirlingFirst:
        case WeightFamily::QStirlingSecond:
        case WeightFamily::QStirlingFirst:
            return true;
        default:
            return false;
    }
}

bool WeightSpec::double_weight() const {
    switch (family) {
        case WeightFamily::GenericDoubleSymbolic:
        case WeightFamily::StirlingSecond:
        case WeightFamily::StirlingFirst:
        case WeightFamily::QStirlingSecond:
        case WeightFamily::QStirlingFirst:
            return true;
        case WeightFamily::CustomTable:
            return static_cast<bool>(custom_v);
        default:
            return false;
    }
}

void WeightSpec::validate() const {
    if (shift_s < 0 || shift_t < 0) throw std::invalid_argument("weight shift must be nonnegative");
    switch (family) {
        case WeightFamily::Elliptic:
            if (std::abs(p) >= 1.0) throw DegenerateParameter("elliptic nome requires |p| < 1");
            [[fallthrough]];
        case WeightFamily::BalancedVWP:
            if (a == Cplx{} || b == Cplx{}) {
                throw DegenerateParameter(family_name(family) +
                                          " weights require nonzero parameters a and b");
            }
            if (q == Cplx{}) throw DegenerateParameter("weights require nonzero q");
            break;
        case WeightFamily::Balanced:
        case WeightFamily::VWP:
            if (q == Cplx{}) throw DegenerateParameter("weights require nonzero q");
            break;
        case WeightFamily::CustomTable:
            if (!custom_w) throw std::invalid_argument("custom table requires a horizontal weight");
            break;
        default:
            break;
    }
}

nlohmann::json WeightSpec::to_json() const {
    if (family == WeightFamily::CustomTable) {
        throw DomainMismatch("custom weight tables have no JSON form");
    }
    nlohmann::json params = nlohmann::json::object();
    auto put = [&params](const char* key, Cplx z) {
        params[key] = nlohmann::json::array({z.real(), z.imag()});
    };
    switch (family) {
        case WeightFamily::Elliptic:
            put("a", a); put("b", b); put("q", q); put("p", p);
            break;
        case WeightFamily::BalancedVWP:
            put("a", a); put("b", b); put("q", q);
            break;
        case WeightFamily::Balanced:
            put("b", b); put("q", q);
            break;
        case WeightFamily::VWP:
            put("a", a); put("q", q);
            break;
        default:
            break;
    }
    return {{"family", family_name(family)},
            {"params", std::move(params)},
            {"shift", nlohmann::json::array({shift_s, shift_t})}};
}

WeightSpec WeightSpec::from_json(const nlohmann::json& j) {
    WeightSpec spec;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown weight family '" +
                                          j.at("family").get<std::string>() + "'");
    spec.family = *fam;
    if (j.contains("params")) {
        const auto& params = j.at("params");
        auto read = [&params](const char* key, Cplx& out) {
            if (params.contains(key)) {
                const auto& v = params.at(key);
                out = Cplx{v.at(0).get<double>(), v.at(1).get<double>()};
            }
        };
        read("a", spec.a);
        read("b", spec.b);
        read("q", spec.q);
        read("p", spec.p);
    }
    if (j.contains("shift")) {
        spec.shift_s = j.at("shift").at(0).get<int>();
        spec.shift_t = j.at("shift").at(1).get<int>();
    }
    spec.validate();
    return spec;
}

WeightSpec WeightSpec::generic() { return {}; }
WeightSpec WeightSpec::generic_vw() {
    WeightSpec s;
    s.family = WeightFamily::GenericDoubleSymbolic;
    return s;
}
WeightSpec WeightSpec::q_commuting() {
    WeightSpec s;
    s.family = WeightFamily::Q;
    return s;
}
WeightSpec WeightSpec::complete_sym() {
    WeightSpec s;
    s.family = WeightFamily::CompleteSym;
    return s;
}
WeightSpec WeightSpec::elementary_sym() {
    WeightSpec s;
    s.family = WeightFamily::ElementarySym;
    return s;
}
WeightSpec WeightSpec::stirling_second() {
    WeightSpec s;
    s.family = WeightFamily::StirlingSecond;
    return s;
}
WeightSpec WeightSpec::stirling_first() {
    WeightSpec s;
    s.family = WeightFamily::StirlingFirst;
    return s;
}
WeightSpec WeightSpec::q_stirling_second() {
    WeightSpec s;
    s.family = WeightFamily::QStirlingSecond;
    return s;
}
WeightSpec WeightSpec::q_stirling_first() {
    WeightSpec s;
    s.family = WeightFamily::QStirlingFirst;
    return s;
}
WeightSpec WeightSpec::elliptic(Cplx a, Cplx b, Cplx q, Cplx p) {
    WeightSpec s;
    s.family = WeightFamily::Elliptic;
    s.a = a; s.b = b; s.q = q; s.p = p;
    s.validate();
    return s;
}
WeightSpec WeightSpec::balanced_vwp(Cplx a, Cplx b, Cplx q) {
    WeightSpec s;
    s.family = WeightFamily::BalancedVWP;
    s.a = a; s.b = b; s.q = q;
    s.validate();
    return s;
}
WeightSpec WeightSpec::balanced(Cplx b, Cplx q) {
    WeightSpec s;
    s.family = WeightFamily::Balanced;
    s.b = b; s.q = q;
    s.validate();
    return s;
}
WeightSpec WeightSpec::vwp(Cplx a, Cplx q) {
    WeightSpec s;
    s.family = WeightFamily::VWP;
    s.a = a; s.q = q;
    s.validate();
    return s;
}
WeightSpec WeightSpec::custom(std::function<Cplx(int, int)> w, std::function<Cplx(int, int)> v) {
    WeightSpec s;
    s.family = WeightFamily::CustomTable;
    s.custom_w = std::move(w);
    s.custom_v = std::move(v);
    s.validate();
    return s;
}

WeightSpec shift_spec(WeightSpec spec, int ds, int dt) {
    if (ds < 0 || dt < 0) throw std::invalid_argument("weight shift must be nonnegative");
    spec.shift_s += ds;
    spec.shift_t += dt;
    return spec;
}

SymPoly small_weight_sym(const WeightSpec& spec, int s, int t) {
    require_indices(s, t, 1);
    int S = s + spec.shift_s, T = t + spec.shift_t;
    switch (spec.family) {
        case WeightFamily::GenericSymbolic:
        case WeightFamily::GenericDoubleSymbolic:
            return SymPoly::var(Indeterminate::small_w(S, T));
        case WeightFamily::Q:
            return SymPoly::var(Indeterminate::sym_q());
        case WeightFamily::CompleteSym:
            return SymPoly::var(Indeterminate::sym_a(T)) *
                   SymPoly::var(Indeterminate::sym_a(T - 1), -1);
        case WeightFamily::ElementarySym:
            return SymPoly::var(Indeterminate::sym_a(S + T)) *
                   SymPoly::var(Indeterminate::sym_a(S + T - 1), -1);
        case WeightFamily::StirlingSecond:
        case WeightFamily::StirlingFirst:
        case WeightFamily::QStirlingSecond:
        case WeightFamily::QStirlingFirst:
            return SymPoly(1);
        default:
            throw DomainMismatch("family " + family_name(spec.family) +
                                 " has no symbolic weights");
    }
}

SymPoly small_weight_v_sym(const WeightSpec& spec, int s, int t) {
    require_indices(s, t, 0);
    int S = s + spec.shift_s, T = t + spec.shift_t;
    switch (spec.family) {
        case WeightFamily::GenericDoubleSymbolic:
            return SymPoly::var(Indeterminate::small_v(S, T));
        case WeightFamily::StirlingSecond:
            return SymPoly(S);
        case WeightFamily::StirlingFirst:
            return SymPoly(1 - S - T);
        case WeightFamily::QStirlingSecond:
            return q_integer(S); // (1 - q^S)/(1 - q)
        case WeightFamily::QStirlingFirst:
            return -q_integer(S + T - 1); // (q^{S+T-1} - 1)/(1 - q)
        case WeightFamily::GenericSymbolic:
        case WeightFamily::Q:
        case WeightFamily::CompleteSym:
        case WeightFamily::ElementarySym:
            return SymPoly(1);
        default:
            throw DomainMismatch("family " + family_name(spec.family) +
                                 " has no symbolic weights");
    }
}

SymPoly big_weight_sym(const WeightSpec& spec, int s, int t) {
    if (t < 0) throw std::invalid_argument("big weight requires t >= 0");
    SymPoly out(1);
    for (int j = 1; j <= t; ++j) out *= small_weight_sym(spec, s, j);
    return out;
}

Cplx small_weight_num(const WeightSpec& spec, int s, int t) {
    require_indices(s, t, 1);
    int S = s + spec.shift_s, T = t + spec.shift_t;
    switch (spec.family) {
        case WeightFamily::Elliptic:
            return elliptic_small_weight(spec.a, spec.b, spec.q, spec.p, S, T);
        case WeightFamily::BalancedVWP:
        case WeightFamily::Balanced:
        case WeightFamily::VWP:
            return basic_small_weight(spec.family, spec.a, spec.b, spec.q, S, T);
        case WeightFamily::CustomTable:
            return ensure_finite(spec.custom_w(S, T), "custom weight");
        default:
            throw DomainMismatch("family " + family_name(spec.family) +
                                 " has no numeric weights");
    }
}

Cplx small_weight_v_num(const WeightSpec& spec, int s, int t) {
    require_indices(s, t, 0);
    int S = s + spec.shift_s, T = t + spec.shift_t;
    switch (spec.family) {
        case WeightFamily::Elliptic:
        case WeightFamily::BalancedVWP:
        case WeightFamily::Balanced:
        case WeightFamily::VWP:
            return {1.0, 0.0};
        case WeightFamily::CustomTable:
            return spec.custom_v ? ensure_finite(spec.custom_v(S, T), "custom vertical weight")
                                 : Cplx{1.0, 0.0};
        default:
            throw DomainMismatch("family " + family_name(spec.family) +
                                 " has no numeric weights");
    }
}

Cplx big_weight_num(const WeightSpec& spec, int s, int t) {
    if (t < 0) throw std::invalid_argument("big weight requires t >= 0");
    Cplx out{1.0, 0.0};
    for (int j = 1; j <= t; ++j) out *= small_weight_num(spec, s, j);
    return ensure_finite(out, "big weight");
}

int a_index_shift(WeightFamily f, int ds, int dt) {
    switch (f) {
        case WeightFamily::CompleteSym: return dt;
        case WeightFamily::ElementarySym: return ds + dt;
        default: return 0;
    }
}

SymPoly shift_coeff(const SymPoly& c, int ds, int dt, const WeightSpec& spec) {
    if (ds == 0 && dt == 0) return c;
    return c.shifted_indices(ds, dt, a_index_shift(spec.family, ds, dt));
}

SymPoly eval_v_symbols(const SymPoly& c, const WeightSpec& spec) {
    if (!spec.symbolic()) {
        throw DomainMismatch("eval_v_symbols requires a symbolic family");
    }
    if (spec.family == WeightFamily::GenericDoubleSymbolic) return c;
    // Symbols carry absolute table positions, so evaluate through an
    // unshifted view of the family.
    WeightSpec raw = spec;
    raw.shift_s = raw.shift_t = 0;
    return c.map_vars([&raw](const Indeterminate& x) {
        if (x.kind == VarKind::V) return small_weight_v_sym(raw, x.s, x.t);
        return SymPoly::var(x);
    });
}

Cplx elliptic_small_weight(Cplx a, Cplx b, Cplx q, Cplx p, int s, int t) {
    std::array<Cplx, 3> num{a * cpow(q, s + 2 * t), b * cpow(q, 2 * s + t - 2),
                            a * cpow(q, t - s - 1) / b};
    std::array<Cplx, 3> den{a * cpow(q, s + 2 * t - 2), b * cpow(q, 2 * s + t),
                            a * cpow(q, t - s + 1) / b};
    return theta_ratio(num, den, p) * q;
}

Cplx elliptic_big_weight_closed(Cplx a, Cplx b, Cplx q, Cplx p, int s, int t) {
    std::array<Cplx, 5> num{a * cpow(q, s + 2 * t), b * cpow(q, 2 * s), b * cpow(q, 2 * s - 1),
                            a * cpow(q, 1 - s) / b, a * cpow(q, -s) / b};
    std::array<Cplx, 5> den{a * cpow(q, s), b * cpow(q, 2 * s + t), b * cpow(q, 2 * s + t - 1),
                            a * cpow(q, 1 + t - s) / b, a * cpow(q, t - s) / b};
    return theta_ratio(num, den, p) * cpow(q, t);
}

Cplx basic_small_weight(WeightFamily f, Cplx a, Cplx b, Cplx q, int s, int t) {
    switch (f) {
        case WeightFamily::BalancedVWP:
            return elliptic_small_weight(a, b, q, Cplx{0.0, 0.0}, s, t);
        case WeightFamily::Balanced:
            return checked_num_ratio(1.0 - b * cpow(q, 2 * s + t - 2), 1.0 - b * cpow(q, 2 * s + t),
                                     "balanced weight") *
                   q;
        case WeightFamily::VWP:
            return checked_num_ratio(1.0 - a * cpow(q, s + 2 * t), 1.0 - a * cpow(q, s + 2 * t - 2),
                                     "vwp weight") /
                   q;
        default:
            throw DomainMismatch("basic_small_weight expects a p = 0 family");
    }
}

Cplx basic_big_weight_closed(WeightFamily f, Cplx a, Cplx b, Cplx q, int s, int t) {
    switch (f) {
        case WeightFamily::BalancedVWP:
            return elliptic_big_weight_closed(a, b, q, Cplx{0.0, 0.0}, s, t);
        case WeightFamily::Balanced:
            return checked_num_ratio((1.0 - b * cpow(q, 2 * s)) * (1.0 - b * cpow(q, 2 * s - 1)),
                                     (1.0 - b * cpow(q, 2 * s + t)) *
                                         (1.0 - b * cpow(q, 2 * s + t - 1)),
                                     "balanced big weight") *
                   cpow(q, t);
        case WeightFamily::VWP:
            return checked_num_ratio(1.0 - a * cpow(q, s + 2 * t), 1.0 - a * cpow(q, s),
                                     "vwp big weight") *
                   cpow(q, -t);
        default:
            throw DomainMismatch("basic_big_weight_closed expects a p = 0 family");
    }
}

} // namespace wbinom
