#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "wbinom/types.hpp"

namespace wbinom {

// Deterministic random draws for the verification harness. All randomness in
// the engine flows through this class so a fixed seed reproduces a report
// byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive integer range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // Generic parameter draw: log-uniform magnitude in [0.2, 2], uniform phase.
    Cplx param() { return std::polar(log_uniform(0.2, 2.0), uniform(0.0, 6.283185307179586)); }

    // Nome draw: the modulus must stay well inside the unit disc, so the
    // magnitude window is [0.05, 0.5] (log-uniform), uniform phase.
    Cplx nome() { return std::polar(log_uniform(0.05, 0.5), uniform(0.0, 6.283185307179586)); }

private:
    std::mt19937_64 eng_;
};

} // namespace wbinom
