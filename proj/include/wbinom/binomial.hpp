#pragma once

#include <vector>

#include "wbinom/weights.hpp"

namespace wbinom {

// Where a region is cut in the three convolution identities.
enum class Cut { Diagonal, Vertical, Horizontal };

// Triangular table of weight-dependent binomial coefficients built from the
// Pascal-type recursion
//   [n+1,k] = [n,k] * v(k, n+1-k) + [n,k-1] * W(k, n+1-k),
// with [0,0] = 1 and [n,k] = 0 outside 0 <= k <= n. Single-weight tables use
// v = 1 identically (the plain recursion); use_vertical enables the
// double-weight form.
template <class R>
class BinomTable {
public:
    explicit BinomTable(WeightSpec spec, bool use_vertical = false)
        : spec_(std::move(spec)), use_vertical_(use_vertical) {
        rows_.push_back({R(1)}); // [0,0]
    }

    const WeightSpec& spec() const { return spec_; }

    R coeff(int n, int k) {
        if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
        if (k < 0 || k > n) return R(0);
        extend(n);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    void extend(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            int row = static_cast<int>(rows_.size()); // building row `row`
            const auto& prev = rows_.back();
            std::vector<R> next(static_cast<std::size_t>(row) + 1, R(0));
            for (int k = 0; k <= row; ++k) {
                R acc = R(0);
                if (k <= row - 1) {
                    R stay = prev[static_cast<std::size_t>(k)];
                    if (use_vertical_) stay *= small_weight_v<R>(spec_, k, row - k);
                    acc += stay;
                }
                if (k >= 1) {
                    acc += prev[static_cast<std::size_t>(k - 1)] *
                           big_weight<R>(spec_, k, row - k);
                }
                next[static_cast<std::size_t>(k)] = std::move(acc);
            }
            rows_.push_back(std::move(next));
        }
    }

    WeightSpec spec_;
    bool use_vertical_;
    std::vector<std::vector<R>> rows_;
};

// One-shot accessors. wbinom runs the single-weight recursion (v ignored);
// vwbinom runs the double-weight recursion and coincides with wbinom on
// single-weight families.
template <class R>
R wbinom(const WeightSpec& spec, int n, int k) {
    BinomTable<R> table(spec, false);
    return table.coeff(n, k);
}

template <class R>
R vwbinom(const WeightSpec& spec, int n, int k) {
    BinomTable<R> table(spec, true);
    return table.coeff(n, k);
}

// Closed product form of the elliptic binomial coefficient.
Cplx elliptic_binom_closed(Cplx a, Cplx b, Cplx q, Cplx p, int n, int k);

// Closed p = 0 forms for the three specialized families (Balanced ignores a,
// VWP ignores b).
Cplx basic_binom_closed(WeightFamily f, Cplx a, Cplx b, Cplx q, int n, int k);

// LHS - RHS of the three convolution identities, evaluated through the
// recursion tables of `spec` (shifted tables for the far factor):
//   Diagonal   [n+m,k]: sum over j of [n,j] * [m,k-j]' * prod_{i=1}^{k-j} W(i+j, n-j)
//   Vertical   [n+m,n], cut line 1 <= l <= n
//   Horizontal [n+m,n], cut line 1 <= k <= m (crossing factor v(l,k))
// Double-weight families use the v,w recursion throughout; single-weight
// families reduce to the plain convolution statements.
template <class R>
R convolution_check(Cut which, const WeightSpec& spec, int n, int m, int k_or_l);

// --- implementation ---

template <class R>
R convolution_check(Cut which, const WeightSpec& spec, int n, int m, int k_or_l) {
    if (n < 0 || m < 0) throw std::invalid_argument("convolution requires n, m >= 0");
    bool dbl = spec.double_weight();
    BinomTable<R> table(spec, dbl);
    switch (which) {
        case Cut::Diagonal: {
            int k = k_or_l;
            if (k < 0 || k > n + m) throw std::invalid_argument("diagonal cut requires 0 <= k <= n+m");
            R rhs = R(0);
            for (int j = std::max(0, k - m); j <= std::min(k, n); ++j) {
                BinomTable<R> far(shift_spec(spec, j, n - j), dbl);
                R term = table.coeff(n, j) * far.coeff(m, k - j);
                for (int i = 1; i <= k - j; ++i) term *= big_weight<R>(spec, i + j, n - j);
                rhs += term;
            }
            return table.coeff(n + m, k) - rhs;
        }
        case Cut::Vertical: {
            int l = k_or_l;
            if (l < 1 || l > n) throw std::invalid_argument("vertical cut requires 1 <= l <= n");
            R rhs = R(0);
            for (int k = 0; k <= m; ++k) {
                BinomTable<R> far(shift_spec(spec, l, k), dbl);
                R term = table.coeff(k + l - 1, l - 1) * far.coeff(n + m - l - k, n - l);
                for (int i = 0; i <= n - l; ++i) term *= big_weight<R>(spec, i + l, k);
                rhs += term;
            }
            return table.coeff(n + m, n) - rhs;
        }
        case Cut::Horizontal: {
            int k = k_or_l;
            if (k < 1 || k > m) throw std::invalid_argument("horizontal cut requires 1 <= k <= m");
            R rhs = R(0);
            for (int l = 0; l <= n; ++l) {
                BinomTable<R> far(shift_spec(spec, l, k), dbl);
                R term = table.coeff(l + k - 1, l) * far.coeff(n + m - l - k, n - l);
                term *= small_weight_v<R>(spec, l, k); // 1 for single-weight families
                for (int i = 1; i <= n - l; ++i) term *= big_weight<R>(spec, i + l, k);
                rhs += term;
            }
            return table.coeff(n + m, n) - rhs;
        }
    }
    throw std::invalid_argument("unknown cut");
}

} // namespace wbinom
