#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wbinom/weights.hpp"

namespace wbinom {

// One token of a word in the weighted algebra: the generator x, the
// generator y, or an interleaved weight-symbol factor (a monomial in w/v
// symbols with positive exponents).
struct WordAtom {
    enum class Kind { X, Y, Factor } kind = Kind::X;
    Monomial factor; // meaningful for Kind::Factor only

    static WordAtom x() { return {Kind::X, {}}; }
    static WordAtom y() { return {Kind::Y, {}}; }
    static WordAtom weight(Monomial m);

    friend bool operator==(const WordAtom&, const WordAtom&) = default;
};

struct Word {
    std::vector<WordAtom> atoms;

    int x_count() const;
    int y_count() const;

    // Whitespace-separated tokens: x, y, w(s,t), v(s,t).
    static Word parse(const std::string& text);
    std::string str() const;
};

// Element in canonical form: a finite sum of terms c_{k,l} x^k y^l with the
// coefficient written on the left. Zero coefficients are never stored.
template <class R>
class NCElement {
public:
    using Key = std::pair<int, int>; // (x-degree, y-degree)
    using TermMap = std::map<Key, R>;

    NCElement() = default;

    static NCElement unit() {
        NCElement e;
        e.terms_.emplace(Key{0, 0}, R(1));
        return e;
    }
    static NCElement term(int k, int l, R coeff) {
        NCElement e;
        e.add(k, l, std::move(coeff));
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(int k, int l) const {
        auto it = terms_.find(Key{k, l});
        return it == terms_.end() ? R(0) : it->second;
    }

    void add(int k, int l, R c) {
        if (k < 0 || l < 0) throw std::invalid_argument("negative degree in NCElement");
        if (c == R(0)) return;
        auto [it, inserted] = terms_.try_emplace(Key{k, l}, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    NCElement& operator+=(const NCElement& rhs) {
        for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, c);
        return *this;
    }
    friend NCElement operator+(NCElement a, const NCElement& b) { a += b; return a; }

    friend bool operator==(const NCElement&, const NCElement&) = default;

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [key, c] : terms_) {
            nlohmann::json coeff;
            if constexpr (std::is_same_v<R, SymPoly>) {
                coeff = c.to_json();
            } else {
                coeff = nlohmann::json::array({c.real(), c.imag()});
            }
            arr.push_back({{"k", key.first}, {"l", key.second}, {"coeff", std::move(coeff)}});
        }
        return arr;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            if (!out.empty()) out += "\n";
            auto [k, l] = key;
            std::string mono;
            if (k > 0) {
                mono += "x";
                if (k > 1) mono += "^" + std::to_string(k);
            }
            if (l > 0) {
                if (!mono.empty()) mono += " ";
                mono += "y";
                if (l > 1) mono += "^" + std::to_string(l);
            }
            if (mono.empty()) mono = "1";
            std::string cs;
            if constexpr (std::is_same_v<R, SymPoly>) {
                cs = c.str();
            } else {
                cs = format_cplx(c);
            }
            out += mono + ": " + cs;
        }
        return out;
    }

private:
    TermMap terms_;
};

// Evaluate a w/v-symbol monomial through the weight table (atom indices are
// table positions of the possibly shifted spec).
template <class R>
R eval_factor_monomial(const Monomial& m, const WeightSpec& spec) {
    R out = R(1);
    for (const auto& [x, e] : m.factors()) {
        R base;
        if (x.kind == VarKind::W) {
            base = small_weight<R>(spec, x.s, x.t);
        } else if (x.kind == VarKind::V) {
            base = small_weight_v<R>(spec, x.s, x.t);
        } else {
            throw std::invalid_argument("word factors may contain only w/v symbols");
        }
        if constexpr (std::is_same_v<R, SymPoly>) {
            out *= base.pow(e);
        } else {
            for (int i = 0; i < e; ++i) out *= base;
        }
    }
    return out;
}

// Rewrite a word into canonical form in a single left-to-right pass:
// interleaved factors move to the front picking up the index shift of the
// generators crossed, and the residual {x,y}-word contributes the product of
// big weights at the endpoints of its horizontal steps.
template <class R>
NCElement<R> normalize(const Word& word, const WeightSpec& spec) {
    R coeff = R(1);
    int xs_seen = 0, ys_seen = 0;
    // Interleaved factors first: each is transported across the generators to
    // its left, then evaluated through the table.
    for (const auto& atom : word.atoms) {
        switch (atom.kind) {
            case WordAtom::Kind::X: ++xs_seen; break;
            case WordAtom::Kind::Y: ++ys_seen; break;
            case WordAtom::Kind::Factor: {
                Monomial shifted = atom.factor.shifted_indices(xs_seen, ys_seen, 0);
                coeff *= eval_factor_monomial<R>(shifted, spec);
                break;
            }
        }
    }
    // Residual x/y word as a lattice walk from (0,0): a horizontal step to
    // (s,t) contributes W(s,t); a vertical step contributes v(s,t).
    int s = 0, t = 0;
    for (const auto& atom : word.atoms) {
        if (atom.kind == WordAtom::Kind::X) {
            ++s;
            coeff *= big_weight<R>(spec, s, t);
        } else if (atom.kind == WordAtom::Kind::Y) {
            ++t;
        }
    }
    return NCElement<R>::term(xs_seen, ys_seen, std::move(coeff));
}

// Product of two canonical-form elements:
//   (c_a x^ka y^la)(c_b x^kb y^lb)
//     = c_a * shift(c_b, ka, la) * prod_{i=1}^{kb} W(i+ka, la) x^(ka+kb) y^(la+lb).
// For the numeric ring the right factor's coefficients must be scalars (the
// shift is the identity there).
template <class R>
NCElement<R> multiply(const NCElement<R>& a, const NCElement<R>& b, const WeightSpec& spec) {
    NCElement<R> out;
    for (const auto& [ka_la, ca] : a.terms()) {
        auto [ka, la] = ka_la;
        for (const auto& [kb_lb, cb] : b.terms()) {
            auto [kb, lb] = kb_lb;
            R c = ca * shift_coeff(cb, ka, la, spec);
            for (int i = 1; i <= kb; ++i) c *= big_weight<R>(spec, i + ka, la);
            out.add(ka + kb, la + lb, std::move(c));
        }
    }
    return out;
}

// Commutation factor of y^k x^l = commute_yx(k,l) x^l y^k.
template <class R>
R commute_yx(int k, int l, const WeightSpec& spec) {
    if (k < 0 || l < 0) throw std::invalid_argument("commute_yx requires k, l >= 0");
    R out = R(1);
    for (int i = 1; i <= l; ++i) out *= big_weight<R>(spec, i, k);
    return out;
}

// (x + y)^n by repeated multiplication; double-weight families expand
// (x + v(0,1) y)^n with the vertical symbol carried symbolically and
// specialized through the family at the end.
template <class R>
NCElement<R> binomial_power(int n, const WeightSpec& spec) {
    if (n < 0) throw std::invalid_argument("binomial_power requires n >= 0");
    bool dbl = spec.double_weight();
    if (dbl && !std::is_same_v<R, SymPoly>) {
        throw DomainMismatch("numeric binomial_power supports single-weight families only");
    }
    NCElement<R> base;
    base.add(1, 0, R(1));
    if constexpr (std::is_same_v<R, SymPoly>) {
        base.add(0, 1, dbl ? SymPoly::var(Indeterminate::small_v(spec.shift_s, 1 + spec.shift_t))
                           : SymPoly(1));
    } else {
        base.add(0, 1, R(1));
    }
    NCElement<R> acc = NCElement<R>::unit();
    for (int i = 0; i < n; ++i) acc = multiply(acc, base, spec);
    if constexpr (std::is_same_v<R, SymPoly>) {
        if (dbl && spec.family != WeightFamily::GenericDoubleSymbolic) {
            NCElement<R> specialized;
            for (const auto& [key, c] : acc.terms()) {
                specialized.add(key.first, key.second, eval_v_symbols(c, spec));
            }
            return specialized;
        }
    }
    return acc;
}

} // namespace wbinom
