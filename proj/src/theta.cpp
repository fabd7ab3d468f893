#include "wbinom/theta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wbinom {

int theta_truncation_terms(double abs_p, double eps) {
    if (abs_p <= 0.0) return 1;
    return static_cast<int>(std::ceil(std::log(eps) / std::log(abs_p))) + 2;
}

Cplx theta_truncated(Cplx x, Cplx p, int terms) {
    if (x == Cplx{0.0, 0.0}) throw ZeroArgument();
    Cplx acc{1.0, 0.0};
    Cplx pk{1.0, 0.0}; // p^k
    Cplx inv_x = 1.0 / x;
    for (int k = 0; k < terms; ++k) {
        acc *= (1.0 - x * pk) * (1.0 - p * pk * inv_x);
        pk *= p;
    }
    return ensure_finite(acc, "theta");
}

Cplx theta(Cplx x, Cplx p) {
    double ap = std::abs(p);
    if (ap >= 1.0) throw DegenerateParameter("theta nome requires |p| < 1");
    if (p == Cplx{0.0, 0.0}) {
        if (x == Cplx{0.0, 0.0}) throw ZeroArgument();
        return 1.0 - x;
    }
    // Dropped tail factors deviate from 1 by ~max(|x|, 1/|x|) |p|^k, so the
    // truncation depth must grow with the argument's dynamic range or huge
    // arguments lose relative accuracy.
    double ax = std::abs(x);
    double scale = std::max(1.0, std::max(ax, ax > 0.0 ? 1.0 / ax : 1.0));
    double eps = std::max(1e-17 / scale, 1e-290);
    return theta_truncated(x, p, theta_truncation_terms(ap, eps));
}

Cplx theta(std::initializer_list<Cplx> args, Cplx p) {
    Cplx acc{1.0, 0.0};
    for (Cplx x : args) acc *= theta(x, p);
    return ensure_finite(acc, "theta product");
}

Cplx theta_ratio(std::span<const Cplx> num, std::span<const Cplx> den, Cplx p) {
    Cplx acc{1.0, 0.0};
    std::size_t common = std::min(num.size(), den.size());
    for (std::size_t i = 0; i < common; ++i) {
        Cplx d = theta(den[i], p);
        if (std::abs(d) < kThetaDegeneracyEps) {
            throw EllipticDegenerate("vanishing denominator theta at argument " +
                                     format_cplx(den[i]));
        }
        acc *= theta(num[i], p) / d;
    }
    for (std::size_t i = common; i < num.size(); ++i) acc *= theta(num[i], p);
    for (std::size_t i = common; i < den.size(); ++i) {
        Cplx d = theta(den[i], p);
        if (std::abs(d) < kThetaDegeneracyEps) {
            throw EllipticDegenerate("vanishing denominator theta at argument " +
                                     format_cplx(den[i]));
        }
        acc /= d;
    }
    return ensure_finite(acc, "theta ratio");
}

double theta_addition_residual(Cplx x, Cplx y, Cplx u, Cplx v, Cplx p) {
    Cplx lhs1 = theta({x * y, x / y, u * v, u / v}, p);
    Cplx lhs2 = theta({x * v, x / v, u * y, u / y}, p);
    Cplx rhs = (u / y) * theta({y * v, y / v, x * u, x / u}, p);
    // Normalize by the largest of the three products: the identity is a
    // cancellation between them, so that is the scale roundoff lives on.
    double scale = std::max({1.0, std::abs(lhs1), std::abs(lhs2), std::abs(rhs)});
    return std::abs(lhs1 - lhs2 - rhs) / scale;
}

Cplx qp_factorial(Cplx a, Cplx q, Cplx p, int n) {
    if (q == Cplx{0.0, 0.0}) throw DegenerateParameter("q-shifted factorial requires q != 0");
    if (n == 0) return {1.0, 0.0};
    bool p_zero = (p == Cplx{0.0, 0.0});
    if (std::abs(p) >= 1.0) throw DegenerateParameter("theta nome requires |p| < 1");
    if (n > 0) {
        Cplx acc{1.0, 0.0};
        Cplx aqk = a;
        for (int k = 0; k < n; ++k) {
            acc *= p_zero ? (1.0 - aqk) : theta(aqk, p);
            aqk *= q;
        }
        return ensure_finite(acc, "qp factorial");
    }
    // (a; q, p)_n = 1 / prod_{k=0}^{-n-1} theta(a q^{n+k}) for n < 0.
    Cplx acc{1.0, 0.0};
    Cplx aqk = a * cpow(q, n);
    for (int k = 0; k < -n; ++k) {
        Cplx f = p_zero ? (1.0 - aqk) : theta(aqk, p);
        if (std::abs(f) < kThetaDegeneracyEps) {
            throw DegenerateParameter("vanishing factor in negatively indexed q-shifted factorial");
        }
        acc *= f;
        aqk *= q;
    }
    return ensure_finite(1.0 / acc, "qp factorial");
}

Cplx qp_factorial(std::initializer_list<Cplx> args, Cplx q, Cplx p, int n) {
    Cplx acc{1.0, 0.0};
    for (Cplx a : args) acc *= qp_factorial(a, q, p, n);
    return ensure_finite(acc, "qp factorial product");
}

Cplx qp_factorial_ratio(std::span<const Cplx> num, std::span<const Cplx> den, Cplx q, Cplx p,
                        int n) {
    if (n < 0) throw DegenerateParameter("qp_factorial_ratio requires n >= 0");
    bool p_zero = (p == Cplx{0.0, 0.0});
    auto factor = [&](Cplx x) { return p_zero ? (1.0 - x) : theta(x, p); };
    std::vector<Cplx> nx(num.begin(), num.end());
    std::vector<Cplx> dx(den.begin(), den.end());
    // Cancel identical base pairs up front: they stay identical under the
    // shared q-shift, so their quotient is exactly 1 at every order.
    for (auto it = nx.begin(); it != nx.end();) {
        auto match = std::find(dx.begin(), dx.end(), *it);
        if (match != dx.end()) {
            dx.erase(match);
            it = nx.erase(it);
        } else {
            ++it;
        }
    }
    Cplx acc{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        std::size_t common = std::min(nx.size(), dx.size());
        for (std::size_t i = 0; i < common; ++i) {
            Cplx d = factor(dx[i]);
            if (std::abs(d) < kThetaDegeneracyEps) {
                throw EllipticDegenerate("vanishing denominator theta at argument " +
                                         format_cplx(dx[i]));
            }
            acc *= factor(nx[i]) / d;
        }
        for (std::size_t i = common; i < nx.size(); ++i) acc *= factor(nx[i]);
        for (std::size_t i = common; i < dx.size(); ++i) {
            Cplx d = factor(dx[i]);
            if (std::abs(d) < kThetaDegeneracyEps) {
                throw EllipticDegenerate("vanishing denominator theta at argument " +
                                         format_cplx(dx[i]));
            }
            acc /= d;
        }
        for (auto& x : nx) x *= q;
        for (auto& x : dx) x *= q;
    }
    return ensure_finite(acc, "qp factorial ratio");
}

} // namespace wbinom
