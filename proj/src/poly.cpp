#include "wbinom/poly.hpp"

#include <sstream>

namespace wbinom {

std::string format_cplx(Cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) {
        os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    }
    return os.str();
}

Cplx parse_cplx(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            std::size_t used = 0;
            double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        std::string left = text.substr(0, comma);
        std::string right = text.substr(comma + 1);
        std::size_t ul = 0, ur = 0;
        double re = std::stod(left, &ul);
        double im = std::stod(right, &ur);
        if (ul != left.size() || ur != right.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse complex value '" + text + "' (expected re or re,im)");
    }
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational SymPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value() on a non-constant polynomial");
    return terms_.begin()->second;
}

Rational SymPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

SymPoly SymPoly::pow(int e) const {
    if (e == 0) return SymPoly(1);
    if (e < 0) {
        if (terms_.size() != 1) {
            throw std::invalid_argument("negative power of a non-monomial polynomial");
        }
        const auto& [m, c] = *terms_.begin();
        Rational cc(1); // c^(-e); c != 0 by invariant
        for (int i = 0; i < -e; ++i) cc *= c;
        return SymPoly::monomial(m.pow(e), Rational(1) / cc);
    }
    SymPoly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

SymPoly SymPoly::shifted_indices(int ds, int dt, int da) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.shifted_indices(ds, dt, da), c);
    return out;
}

Cplx SymPoly::substitute(const Assignment& values) const {
    Cplx acc{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        Cplx term{static_cast<double>(c.convert_to<double>()), 0.0};
        for (const auto& [x, e] : m.factors()) {
            term *= cpow(values.get(x), e);
        }
        acc += term;
    }
    return ensure_finite(acc, "poly substitution");
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.is_unit()) {
            out += rational_str(mag);
        } else {
            if (mag != 1) out += rational_str(mag) + "*";
            out += m.str();
        }
    }
    return out;
}

namespace {

const char* kind_tag(VarKind k) {
    switch (k) {
        case VarKind::W: return "w";
        case VarKind::V: return "v";
        case VarKind::A: return "a";
        case VarKind::Q: return "q";
    }
    return "?";
}

VarKind kind_from_tag(const std::string& tag) {
    if (tag == "w") return VarKind::W;
    if (tag == "v") return VarKind::V;
    if (tag == "a") return VarKind::A;
    if (tag == "q") return VarKind::Q;
    throw std::invalid_argument("unknown variable kind tag '" + tag + "'");
}

} // namespace

nlohmann::json SymPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [x, e] : m.factors()) {
            mono.push_back({kind_tag(x.kind), x.s, x.t, e});
        }
        arr.push_back({{"monomial", std::move(mono)},
                       {"num", numerator(c).str()},
                       {"den", denominator(c).str()}});
    }
    return arr;
}

SymPoly SymPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    SymPoly out;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& f : term.at("monomial")) {
            VarKind k = kind_from_tag(f.at(0).get<std::string>());
            int s = f.at(1).get<int>();
            int t = f.at(2).get<int>();
            int e = f.at(3).get<int>();
            Indeterminate x;
            switch (k) {
                case VarKind::W: x = Indeterminate::small_w(s, t); break;
                case VarKind::V: x = Indeterminate::small_v(s, t); break;
                case VarKind::A: x = Indeterminate::sym_a(s); break;
                case VarKind::Q: x = Indeterminate::sym_q(); break;
            }
            m = m * Monomial::var(x, e);
        }
        Integer num(term.at("num").get<std::string>());
        Integer den(term.at("den").get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
        out.add_term(m, Rational(num, den));
    }
    return out;
}

} // namespace wbinom
