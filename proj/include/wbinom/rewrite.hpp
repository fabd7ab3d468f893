#pragma once

#include "wbinom/ncalgebra.hpp"

namespace wbinom {

// Exhaustive term rewriting with the defining relations, used as an oracle
// for the single-pass normalizer. Deliberately naive: repeatedly applies the
// first applicable rule until the word is [factor] x^k y^l.
//
// Rules on adjacent atoms:
//   y x       -> w(1,1) x y
//   x f       -> f[(s,t) -> (s+1,t)] x
//   y f       -> f[(s,t) -> (s,t+1)] y
//   f g       -> (f*g)                (merge adjacent factors)
//
// Capped at small inputs: this path is quadratic in the worst case and only
// meant to double-check the fast normalizer.
inline constexpr int kRewriteMaxGenerators = 10;
inline constexpr int kRewriteMaxAtoms = 16;

namespace detail {

inline bool apply_first_rewrite(std::vector<WordAtom>& atoms) {
    using Kind = WordAtom::Kind;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        const WordAtom& a = atoms[i];
        const WordAtom& b = atoms[i + 1];
        if (a.kind == Kind::Y && b.kind == Kind::X) {
            atoms[i] = WordAtom::weight(Monomial::var(Indeterminate::small_w(1, 1)));
            atoms[i + 1] = WordAtom::x();
            atoms.insert(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 2, WordAtom::y());
            return true;
        }
        if (a.kind == Kind::X && b.kind == Kind::Factor) {
            atoms[i] = WordAtom::weight(b.factor.shifted_indices(1, 0, 0));
            atoms[i + 1] = WordAtom::x();
            return true;
        }
        if (a.kind == Kind::Y && b.kind == Kind::Factor) {
            atoms[i] = WordAtom::weight(b.factor.shifted_indices(0, 1, 0));
            atoms[i + 1] = WordAtom::y();
            return true;
        }
        if (a.kind == Kind::Factor && b.kind == Kind::Factor) {
            atoms[i] = WordAtom::weight(a.factor * b.factor);
            atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return true;
        }
    }
    return false;
}

} // namespace detail

// All words reachable from `word` by one admissible rewrite (used by the
// reduction-uniqueness property test).
inline std::vector<Word> single_rewrites(const Word& word) {
    using Kind = WordAtom::Kind;
    std::vector<Word> out;
    const auto& atoms = word.atoms;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        const WordAtom& a = atoms[i];
        const WordAtom& b = atoms[i + 1];
        Word w = word;
        if (a.kind == Kind::Y && b.kind == Kind::X) {
            w.atoms[i] = WordAtom::weight(Monomial::var(Indeterminate::small_w(1, 1)));
            w.atoms[i + 1] = WordAtom::x();
            w.atoms.insert(w.atoms.begin() + static_cast<std::ptrdiff_t>(i) + 2, WordAtom::y());
        } else if (a.kind == Kind::X && b.kind == Kind::Factor) {
            w.atoms[i] = WordAtom::weight(b.factor.shifted_indices(1, 0, 0));
            w.atoms[i + 1] = WordAtom::x();
        } else if (a.kind == Kind::Y && b.kind == Kind::Factor) {
            w.atoms[i] = WordAtom::weight(b.factor.shifted_indices(0, 1, 0));
            w.atoms[i + 1] = WordAtom::y();
        } else if (a.kind == Kind::Factor && b.kind == Kind::Factor) {
            w.atoms[i] = WordAtom::weight(a.factor * b.factor);
            w.atoms.erase(w.atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        } else {
            continue;
        }
        out.push_back(std::move(w));
    }
    return out;
}

template <class R>
NCElement<R> normalize_by_rewriting(const Word& word, const WeightSpec& spec) {
    if (word.x_count() + word.y_count() > kRewriteMaxGenerators ||
        static_cast<int>(word.atoms.size()) > kRewriteMaxAtoms) {
        throw std::invalid_argument("rewriting oracle accepts only short words");
    }
    std::vector<WordAtom> atoms = word.atoms;
    while (detail::apply_first_rewrite(atoms)) {
    }
    // Canonical shape is now [factor] x... y...; fold it into one term.
    Monomial factor;
    int k = 0, l = 0;
    for (const auto& a : atoms) {
        switch (a.kind) {
            case WordAtom::Kind::Factor: factor = factor * a.factor; break;
            case WordAtom::Kind::X: ++k; break;
            case WordAtom::Kind::Y: ++l; break;
        }
    }
    return NCElement<R>::term(k, l, eval_factor_monomial<R>(factor, spec));
}

} // namespace wbinom
