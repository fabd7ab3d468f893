#include "wbinom/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace wbinom {

Cplx balancing_e(Cplx a, Cplx b, Cplx c, Cplx d, Cplx q, int n) {
    Cplx bcd = b * c * d;
    if (bcd == Cplx{0.0, 0.0}) throw DegenerateParameter("balancing requires b, c, d != 0");
    return a * a * cpow(q, n + 1) / bcd;
}

void check_balancing(const EllipticParams& P, double tol) {
    Cplx want = P.a * P.a * cpow(P.q, P.n + 1);
    Cplx have = P.b * P.c * P.d * P.e;
    double scale = std::max(1.0, std::abs(want));
    if (std::abs(want - have) / scale > tol) {
        throw BalancingViolation("balancing condition a^2 q^(n+1) = bcde violated");
    }
}

std::pair<Cplx, Cplx> v109_sides(const EllipticParams& P, double* term_scale) {
    check_balancing(P);
    const Cplx a = P.a, b = P.b, c = P.c, d = P.d, e = P.e, q = P.q, p = P.p;
    const int n = P.n;
    Cplx theta_a = theta(a, p);
    if (std::abs(theta_a) < kThetaDegeneracyEps) {
        throw EllipticDegenerate("vanishing theta(a) in summation prefactor");
    }
    std::array<Cplx, 6> num{a, b, c, d, e, cpow(q, -n)};
    std::array<Cplx, 6> den{q, a * q / b, a * q / c, a * q / d, a * q / e, a * cpow(q, n + 1)};
    Cplx lhs{0.0, 0.0};
    double scale = 0.0;
    for (int k = 0; k <= n; ++k) {
        Cplx term = theta(a * cpow(q, 2 * k), p) / theta_a;
        term *= qp_factorial_ratio(num, den, q, p, k);
        term *= cpow(q, k);
        lhs += term;
        scale += std::abs(term);
    }
    if (term_scale) *term_scale = scale;
    std::array<Cplx, 4> rnum{a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)};
    std::array<Cplx, 4> rden{a * q / b, a * q / c, a * q / d, a * q / (b * c * d)};
    Cplx rhs = qp_factorial_ratio(rnum, rden, q, p, n);
    return {ensure_finite(lhs, "summation side"), ensure_finite(rhs, "product side")};
}

namespace {

// Far-factor parameters after a table shift by (ds,dt).
std::pair<Cplx, Cplx> shifted_ab(Cplx a, Cplx b, Cplx q, int ds, int dt) {
    return {a * cpow(q, ds + 2 * dt), b * cpow(q, 2 * ds + dt)};
}

} // namespace

Cplx v109_convolution_delta(Cut which, Cplx a, Cplx b, Cplx q, Cplx p, int n, int m,
                            int k_or_l, double* term_scale) {
    if (n < 0 || m < 0) throw std::invalid_argument("convolution requires n, m >= 0");
    auto binom = [&](Cplx aa, Cplx bb, int nn, int kk) {
        return elliptic_binom_closed(aa, bb, q, p, nn, kk);
    };
    auto bigw = [&](int s, int t) { return elliptic_big_weight_closed(a, b, q, p, s, t); };
    double scale = 0.0;
    auto finish = [&](Cplx lhs, Cplx rhs) {
        if (term_scale) *term_scale = scale + std::abs(lhs);
        return lhs - rhs;
    };
    switch (which) {
        case Cut::Diagonal: {
            int k = k_or_l;
            if (k < 0 || k > n + m) {
                throw std::invalid_argument("diagonal cut requires 0 <= k <= n+m");
            }
            Cplx rhs{0.0, 0.0};
            for (int j = std::max(0, k - m); j <= std::min(k, n); ++j) {
                auto [aj, bj] = shifted_ab(a, b, q, j, n - j);
                Cplx term = binom(a, b, n, j) * binom(aj, bj, m, k - j);
                for (int i = 1; i <= k - j; ++i) term *= bigw(i + j, n - j);
                rhs += term;
                scale += std::abs(term);
            }
            return finish(binom(a, b, n + m, k), rhs);
        }
        case Cut::Vertical: {
            int l = k_or_l;
            if (l < 1 || l > n) throw std::invalid_argument("vertical cut requires 1 <= l <= n");
            Cplx rhs{0.0, 0.0};
            for (int k = 0; k <= m; ++k) {
                auto [al, bl] = shifted_ab(a, b, q, l, k);
                Cplx term = binom(a, b, k + l - 1, l - 1) * binom(al, bl, n + m - l - k, n - l);
                for (int i = 0; i <= n - l; ++i) term *= bigw(i + l, k);
                rhs += term;
                scale += std::abs(term);
            }
            return finish(binom(a, b, n + m, n), rhs);
        }
        case Cut::Horizontal: {
            int k = k_or_l;
            if (k < 1 || k > m) throw std::invalid_argument("horizontal cut requires 1 <= k <= m");
            Cplx rhs{0.0, 0.0};
            for (int l = 0; l <= n; ++l) {
                auto [al, bl] = shifted_ab(a, b, q, l, k);
                Cplx term = binom(a, b, l + k - 1, l) * binom(al, bl, n + m - l - k, n - l);
                for (int i = 1; i <= n - l; ++i) term *= bigw(i + l, k);
                rhs += term;
                scale += std::abs(term);
            }
            return finish(binom(a, b, n + m, n), rhs);
        }
    }
    throw std::invalid_argument("unknown cut");
}

EllipticParams v109_from_diagonal(Cplx a, Cplx b, Cplx q, Cplx p, int n, int m, int k) {
    EllipticParams P;
    P.a = b * cpow(q, -n) / a;
    P.b = cpow(q, -n) / a;
    P.c = b * cpow(q, 1 + n + m);
    P.d = b * cpow(q, -n - m + k) / a;
    P.e = cpow(q, -n);
    P.q = q;
    P.p = p;
    P.n = k;
    return P;
}

namespace {

double min_theta_abs(std::initializer_list<Cplx> args, Cplx p, double floor_so_far) {
    double out = floor_so_far;
    for (Cplx x : args) out = std::min(out, std::abs(theta(x, p)));
    return out;
}

} // namespace

double v109_degeneracy_floor(const EllipticParams& P) {
    const Cplx a = P.a, b = P.b, c = P.c, d = P.d, e = P.e, q = P.q, p = P.p;
    double out = std::abs(theta(a, p));
    for (int j = 0; j < P.n; ++j) {
        Cplx qj = cpow(q, 1 + j);
        out = min_theta_abs({qj, a * qj / b, a * qj / c, a * qj / d, a * qj / e,
                             a * cpow(q, P.n + 1 + j), a * qj / (b * c * d)},
                            p, out);
    }
    return out;
}

double elliptic_binom_degeneracy_floor(Cplx a, Cplx b, Cplx q, Cplx p, int n_max) {
    double out = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n_max; ++k) {
        for (int j = 0; j < n_max - k; ++j) {
            Cplx qj = cpow(q, j);
            out = min_theta_abs(
                {q * qj, a * q * qj, b * cpow(q, 1 + 2 * k) * qj, a * q * qj / b}, p, out);
        }
    }
    return out;
}

double elliptic_table_degeneracy_floor(Cplx a, Cplx b, Cplx q, Cplx p, int s_max, int t_max) {
    double out = std::numeric_limits<double>::infinity();
    for (int s = 1; s <= s_max; ++s) {
        for (int t = 0; t <= t_max; ++t) {
            out = min_theta_abs({a * cpow(q, s), b * cpow(q, 2 * s + t),
                                 b * cpow(q, 2 * s + t - 1), a * cpow(q, 1 + t - s) / b,
                                 a * cpow(q, t - s) / b},
                                p, out);
        }
    }
    return out;
}

} // namespace wbinom
