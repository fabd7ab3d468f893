#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wbinom {

// The four symbol kinds appearing in coefficients:
//   W : doubly indexed weight symbol w(s,t), s >= 1, t >= 1
//   V : doubly indexed vertical weight symbol v(s,t), s >= 0, t >= 1
//   A : singly indexed symmetric-function variable a_i, i >= 0
//   Q : the nullary symbol q
// The enum order fixes the canonical variable order.
enum class VarKind : std::uint8_t { W = 0, V = 1, A = 2, Q = 3 };

struct Indeterminate {
    VarKind kind = VarKind::W;
    std::int32_t s = 0; // first index (the a_i index lives here for kind A)
    std::int32_t t = 0; // second index (unused for kinds A and Q)

    friend constexpr auto operator<=>(const Indeterminate&, const Indeterminate&) = default;

    static Indeterminate small_w(int s, int t) {
        if (s < 1 || t < 1) throw std::invalid_argument("w(s,t) requires s >= 1 and t >= 1");
        return {VarKind::W, s, t};
    }
    static Indeterminate small_v(int s, int t) {
        if (s < 0 || t < 1) throw std::invalid_argument("v(s,t) requires s >= 0 and t >= 1");
        return {VarKind::V, s, t};
    }
    static Indeterminate sym_a(int index) {
        if (index < 0) throw std::invalid_argument("a_i requires i >= 0");
        return {VarKind::A, index, 0};
    }
    static Indeterminate sym_q() { return {VarKind::Q, 0, 0}; }

    std::string str() const {
        switch (kind) {
            case VarKind::W: return "w(" + std::to_string(s) + "," + std::to_string(t) + ")";
            case VarKind::V: return "v(" + std::to_string(s) + "," + std::to_string(t) + ")";
            case VarKind::A: return "a(" + std::to_string(s) + ")";
            case VarKind::Q: return "q";
        }
        return "?";
    }
};

} // namespace wbinom
