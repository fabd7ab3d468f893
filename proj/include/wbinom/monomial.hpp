#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wbinom/indeterminate.hpp"

namespace wbinom {

// Product of indeterminate powers with nonzero integer exponents (Laurent),
// kept sorted by variable. The empty product is the unit monomial.
class Monomial {
public:
    using Factor = std::pair<Indeterminate, std::int32_t>;

    Monomial() = default;

    static Monomial var(const Indeterminate& x, int exp = 1) {
        Monomial m;
        if (exp != 0) m.factors_.push_back({x, exp});
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    bool all_positive_exponents() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Factor& f) { return f.second > 0; });
    }

    bool only_weight_kinds() const {
        return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) {
            return f.first.kind == VarKind::W || f.first.kind == VarKind::V;
        });
    }

    Monomial operator*(const Monomial& rhs) const {
        Monomial out;
        out.factors_.reserve(factors_.size() + rhs.factors_.size());
        auto i = factors_.begin();
        auto j = rhs.factors_.begin();
        while (i != factors_.end() && j != rhs.factors_.end()) {
            if (i->first < j->first) {
                out.factors_.push_back(*i++);
            } else if (j->first < i->first) {
                out.factors_.push_back(*j++);
            } else {
                int e = i->second + j->second;
                if (e != 0) out.factors_.push_back({i->first, e});
                ++i;
                ++j;
            }
        }
        out.factors_.insert(out.factors_.end(), i, factors_.end());
        out.factors_.insert(out.factors_.end(), j, rhs.factors_.end());
        return out;
    }

    Monomial pow(int e) const {
        Monomial out;
        if (e == 0) return out;
        out.factors_ = factors_;
        for (auto& f : out.factors_) f.second *= e;
        return out;
    }

    // Index translation: kinds W and V move by (ds,dt), kind A by da, q is fixed.
    Monomial shifted_indices(int ds, int dt, int da) const {
        Monomial out;
        out.factors_ = factors_;
        for (auto& [x, e] : out.factors_) {
            (void)e;
            switch (x.kind) {
                case VarKind::W:
                case VarKind::V:
                    x.s += ds;
                    x.t += dt;
                    break;
                case VarKind::A:
                    x.s += da;
                    break;
                case VarKind::Q:
                    break;
            }
            if (x.kind == VarKind::W && (x.s < 1 || x.t < 1))
                throw std::invalid_argument("index shift left w(s,t) range");
            if (x.kind == VarKind::V && (x.s < 0 || x.t < 1))
                throw std::invalid_argument("index shift left v(s,t) range");
            if (x.kind == VarKind::A && x.s < 0)
                throw std::invalid_argument("index shift left a_i range");
        }
        std::sort(out.factors_.begin(), out.factors_.end());
        return out;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [x, e] : factors_) {
            if (!out.empty()) out += "*";
            out += x.str();
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::vector<Factor> factors_;
};

} // namespace wbinom
