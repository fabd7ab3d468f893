#include "wbinom/symmetric.hpp"

#include "wbinom/binomial.hpp"

namespace wbinom {

SymPoly complete_h(int k, SymVarSet vars) {
    if (k < 0) return SymPoly();
    // column[j] = h_j over the variables added so far
    std::vector<SymPoly> column(static_cast<std::size_t>(k) + 1);
    column[0] = SymPoly(1);
    for (int m = vars.lo; m <= vars.hi; ++m) {
        SymPoly am = SymPoly::var(Indeterminate::sym_a(m));
        // h_j(.., a_m) = h_j(..) + a_m h_{j-1}(.., a_m): ascending j reuses
        // the already-updated j-1 entry.
        for (int j = 1; j <= k; ++j) {
            column[static_cast<std::size_t>(j)] += am * column[static_cast<std::size_t>(j - 1)];
        }
    }
    return column[static_cast<std::size_t>(k)];
}

SymPoly elementary_e(int k, SymVarSet vars) {
    if (k < 0) return SymPoly();
    std::vector<SymPoly> column(static_cast<std::size_t>(k) + 1);
    column[0] = SymPoly(1);
    for (int m = vars.lo; m <= vars.hi; ++m) {
        SymPoly am = SymPoly::var(Indeterminate::sym_a(m));
        // e_j(.., a_m) = e_j(..) + a_m e_{j-1}(..): descending j keeps the
        // j-1 entry from the previous variable count.
        for (int j = k; j >= 1; --j) {
            column[static_cast<std::size_t>(j)] += am * column[static_cast<std::size_t>(j - 1)];
        }
    }
    return column[static_cast<std::size_t>(k)];
}

SymPoly sym_binom_check(char family, int n) {
    if (n < 0) throw std::invalid_argument("sym_binom_check requires n >= 0");
    if (family != 'h' && family != 'e') {
        throw std::invalid_argument("sym_binom_check family must be 'h' or 'e'");
    }
    WeightSpec spec =
        family == 'h' ? WeightSpec::complete_sym() : WeightSpec::elementary_sym();
    BinomTable<SymPoly> table(spec);
    for (int k = 0; k <= n; ++k) {
        SymPoly closed;
        if (family == 'h') {
            closed = complete_h(k, {0, n - k}) *
                     SymPoly::var(Indeterminate::sym_a(0), -1).pow(k);
        } else {
            closed = elementary_e(k, {1, n});
            for (int i = 1; i <= k; ++i) closed *= SymPoly::var(Indeterminate::sym_a(i), -1);
        }
        SymPoly diff = table.coeff(n, k) - closed;
        if (!diff.is_zero()) return diff;
    }
    return SymPoly();
}

SymPoly sym_identity_check(SymIdentity which, int n, int m, int k_or_l) {
    if (n < 0 || m < 0) throw std::invalid_argument("identity sizes must be nonnegative");
    switch (which) {
        case SymIdentity::H1: {
            int k = k_or_l;
            if (k < 0 || k > n + m) {
                throw std::invalid_argument("H1 requires 0 <= k <= n+m");
            }
            SymPoly rhs;
            for (int j = 0; j <= std::min(k, n); ++j) {
                rhs += complete_h(j, {0, n - j}) * complete_h(k - j, {n - j, n + m - k});
            }
            return complete_h(k, {0, n + m - k}) - rhs;
        }
        case SymIdentity::H2: {
            int l = k_or_l;
            if (l < 1 || l > n) throw std::invalid_argument("H2 requires 1 <= l <= n");
            SymPoly rhs;
            for (int k = 0; k <= m; ++k) {
                rhs += complete_h(l - 1, {0, k}) * SymPoly::var(Indeterminate::sym_a(k)) *
                       complete_h(n - l, {k, m});
            }
            return complete_h(n, {0, m}) - rhs;
        }
        case SymIdentity::SchurH: {
            int k = k_or_l;
            if (k < 1 || k > m) throw std::invalid_argument("SchurH requires 1 <= k <= m");
            SymPoly rhs;
            for (int l = 0; l <= n; ++l) {
                rhs += complete_h(l, {0, k - 1}) * complete_h(n - l, {k, m});
            }
            return complete_h(n, {0, m}) - rhs;
        }
        case SymIdentity::SchurE: {
            int k = k_or_l;
            if (k < 0 || k > n + m) {
                throw std::invalid_argument("SchurE requires 0 <= k <= n+m");
            }
            SymPoly rhs;
            for (int j = 0; j <= k; ++j) {
                rhs += elementary_e(j, {1, n}) * elementary_e(k - j, {n + 1, n + m});
            }
            return elementary_e(k, {1, n + m}) - rhs;
        }
        case SymIdentity::E1: {
            int l = k_or_l;
            if (l < 1 || l > n) throw std::invalid_argument("E1 requires 1 <= l <= n");
            SymPoly rhs;
            for (int k = 0; k <= m; ++k) {
                rhs += elementary_e(l - 1, {1, l + k - 1}) *
                       SymPoly::var(Indeterminate::sym_a(l + k)) *
                       elementary_e(n - l, {l + k + 1, n + m});
            }
            return elementary_e(n, {1, n + m}) - rhs;
        }
        case SymIdentity::E2: {
            int k = k_or_l;
            if (k < 1 || k > m) throw std::invalid_argument("E2 requires 1 <= k <= m");
            SymPoly rhs;
            for (int l = 0; l <= n; ++l) {
                rhs += elementary_e(l, {1, l + k - 1}) * elementary_e(n - l, {l + k + 1, n + m});
            }
            return elementary_e(n, {1, n + m}) - rhs;
        }
    }
    throw std::invalid_argument("unknown symmetric identity");
}

} // namespace wbinom
