#include "wbinom/binomial.hpp"

#include <array>

namespace wbinom {

Cplx elliptic_binom_closed(Cplx a, Cplx b, Cplx q, Cplx p, int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return {0.0, 0.0};
    std::array<Cplx, 4> num{cpow(q, 1 + k), a * cpow(q, 1 + k), b * cpow(q, 1 + k),
                            a * cpow(q, 1 - k) / b};
    std::array<Cplx, 4> den{q, a * q, b * cpow(q, 1 + 2 * k), a * q / b};
    return qp_factorial_ratio(num, den, q, p, n - k);
}

Cplx basic_binom_closed(WeightFamily f, Cplx a, Cplx b, Cplx q, int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return {0.0, 0.0};
    switch (f) {
        case WeightFamily::BalancedVWP:
            return elliptic_binom_closed(a, b, q, Cplx{0.0, 0.0}, n, k);
        case WeightFamily::Balanced: {
            std::array<Cplx, 2> num{cpow(q, 1 + k), b * cpow(q, 1 + k)};
            std::array<Cplx, 2> den{q, b * cpow(q, 1 + 2 * k)};
            return qp_factorial_ratio(num, den, q, Cplx{0.0, 0.0}, n - k);
        }
        case WeightFamily::VWP: {
            std::array<Cplx, 2> num{cpow(q, 1 + k), a * cpow(q, 1 + k)};
            std::array<Cplx, 2> den{q, a * q};
            return qp_factorial_ratio(num, den, q, Cplx{0.0, 0.0}, n - k) *
                   cpow(q, static_cast<long>(k) * (k - n));
        }
        default:
            throw DomainMismatch("basic_binom_closed expects a p = 0 family");
    }
}

} // namespace wbinom
