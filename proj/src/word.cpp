#include "wbinom/ncalgebra.hpp"

#include <sstream>

namespace wbinom {

WordAtom WordAtom::weight(Monomial m) {
    if (!m.only_weight_kinds() || !m.all_positive_exponents()) {
        throw std::invalid_argument(
            "word factors must be w/v monomials with positive exponents");
    }
    return {Kind::Factor, std::move(m)};
}

int Word::x_count() const {
    int n = 0;
    for (const auto& a : atoms) n += (a.kind == WordAtom::Kind::X);
    return n;
}

int Word::y_count() const {
    int n = 0;
    for (const auto& a : atoms) n += (a.kind == WordAtom::Kind::Y);
    return n;
}

namespace {

WordAtom parse_token(const std::string& tok) {
    if (tok == "x") return WordAtom::x();
    if (tok == "y") return WordAtom::y();
    if (tok.size() >= 6 && (tok[0] == 'w' || tok[0] == 'v') && tok[1] == '(' &&
        tok.back() == ')') {
        std::string body = tok.substr(2, tok.size() - 3);
        std::size_t comma = body.find(',');
        if (comma != std::string::npos) {
            try {
                std::size_t us = 0, ut = 0;
                std::string left = body.substr(0, comma);
                std::string right = body.substr(comma + 1);
                int s = std::stoi(left, &us);
                int t = std::stoi(right, &ut);
                if (us == left.size() && ut == right.size()) {
                    Indeterminate v = (tok[0] == 'w') ? Indeterminate::small_w(s, t)
                                                      : Indeterminate::small_v(s, t);
                    return WordAtom::weight(Monomial::var(v));
                }
            } catch (const std::invalid_argument&) {
                // fall through to the uniform error below
            } catch (const std::out_of_range&) {
            }
        }
    }
    throw std::invalid_argument("bad word token '" + tok +
                                "' (expected x, y, w(s,t) or v(s,t))");
}

} // namespace

Word Word::parse(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.atoms.push_back(parse_token(tok));
    return w;
}

std::string Word::str() const {
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty()) out += " ";
        switch (a.kind) {
            case WordAtom::Kind::X: out += "x"; break;
            case WordAtom::Kind::Y: out += "y"; break;
            case WordAtom::Kind::Factor: out += a.factor.str(); break;
        }
    }
    return out;
}

} // namespace wbinom
