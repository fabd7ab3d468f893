#include "wbinom/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "wbinom/binomial.hpp"
#include "wbinom/elliptic.hpp"
#include "wbinom/ncalgebra.hpp"
#include "wbinom/paths.hpp"
#include "wbinom/rewrite.hpp"
#include "wbinom/rng.hpp"
#include "wbinom/symmetric.hpp"

namespace wbinom {

namespace {

using nlohmann::json;
using std::chrono::duration_cast;
using std::chrono::milliseconds;
using std::chrono::steady_clock;

// Draws whose smallest relevant denominator modulus falls below this are
// rejected and redrawn.
// Reject draws whose smallest screened theta factor falls below this floor:
// a denominator of size f amplifies roundoff by 1/f, so 1e-4 keeps residuals
// of well-posed identities comfortably under the 1e-8..1e-9 tolerances.
constexpr double kDrawFloor = 1e-4;

// Per-term relative error bounds for sums of theta-quotient products,
// used with the reported term scales to reject draws whose cancellation
// exceeds what double arithmetic can certify at the stated tolerance.
constexpr double kSumEpsElliptic = 1.2e-12;
constexpr double kSumEpsBasic = 6e-13;

std::vector<int> range_or_pin(const std::optional<int>& pin, int lo, int hi) {
    if (pin) return {*pin};
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

double rel_residual(Cplx lhs, Cplx rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

CheckResult exact_result(json params, long trials, bool pass) {
    CheckResult r;
    r.params = std::move(params);
    r.trials = trials;
    r.pass = pass;
    return r;
}

CheckResult numeric_result(json params, long trials, double max_res, double tol,
                           bool exact_ok = true) {
    CheckResult r;
    r.params = std::move(params);
    r.params["tol"] = tol;
    r.trials = trials;
    r.max_residual = max_res;
    r.pass = exact_ok && max_res <= tol;
    return r;
}

// --- draw helpers -----------------------------------------------------------

// q restricted so that |q|^(+-max_exp) stays within ~10 decades: every theta
// argument the check touches then stays far from double overflow/underflow.
Cplx draw_q(Rng& rng, int max_exp) {
    double cap = std::pow(10.0, 10.0 / std::max(1, max_exp));
    double lo = std::max(0.2, 1.0 / cap);
    double hi = std::min(2.0, cap);
    return std::polar(rng.log_uniform(lo, hi), rng.uniform(0.0, 6.283185307179586));
}

// Overflow-safe proxy for theta degeneracy: the smallest product factor
// |1 - x p^k| or |1 - p^{k+1}/x| over the truncation range. theta vanishes
// exactly when a factor does, which is all a rejection screen must detect.
double theta_factor_floor(Cplx x, Cplx p) {
    if (x == Cplx{0.0, 0.0}) return 0.0;
    if (p == Cplx{0.0, 0.0}) return std::abs(1.0 - x);
    double out = std::numeric_limits<double>::infinity();
    int terms = theta_truncation_terms(std::abs(p));
    Cplx pk{1.0, 0.0};
    Cplx inv_x = 1.0 / x;
    for (int k = 0; k < terms; ++k) {
        out = std::min(out, std::abs(1.0 - x * pk));
        out = std::min(out, std::abs(1.0 - p * pk * inv_x));
        pk *= p;
    }
    return out;
}

// Smallest theta-degeneracy proxy over the argument shapes q^i, a q^i, b q^i
// (1 <= i <= max_exp) and (a/b) q^i (|i| <= max_exp); every denominator of
// the elliptic weight/binomial routes has one of these shapes.
double elliptic_draw_floor(Cplx a, Cplx b, Cplx q, Cplx p, int max_exp) {
    double out = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= max_exp; ++i) {
        out = std::min(out, theta_factor_floor(cpow(q, i), p));
        out = std::min(out, theta_factor_floor(a * cpow(q, i), p));
        out = std::min(out, theta_factor_floor(b * cpow(q, i), p));
    }
    for (int i = -max_exp; i <= max_exp; ++i) {
        out = std::min(out, theta_factor_floor(a * cpow(q, i) / b, p));
    }
    return out;
}

// p = 0 screen: smallest |1 - base q^i| over lo <= i <= hi.
double unit_gap_floor(Cplx base, Cplx q, int lo, int hi) {
    double out = std::numeric_limits<double>::infinity();
    for (int i = lo; i <= hi; ++i) out = std::min(out, std::abs(1.0 - base * cpow(q, i)));
    return out;
}

struct EllipticDraw {
    Cplx a, b, q, p;
};

EllipticDraw draw_elliptic(Rng& rng, int max_exp, bool with_p) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        EllipticDraw d{rng.param(), rng.param(), draw_q(rng, max_exp),
                       with_p ? rng.nome() : Cplx{0.0, 0.0}};
        if (elliptic_draw_floor(d.a, d.b, d.q, d.p, max_exp) >= kDrawFloor) return d;
    }
    throw Error("rejection sampling exhausted for elliptic parameters");
}

// --- brute-force combinatorial oracles --------------------------------------

void rgs_count(int pos, int n, int used, std::vector<long long>& out) {
    if (pos == n) {
        ++out[static_cast<std::size_t>(used)];
        return;
    }
    for (int b = 0; b <= used; ++b) {
        rgs_count(pos + 1, n, std::max(used, b + 1), out);
    }
}

// Partitions of an n-set into exactly k blocks, by enumerating restricted
// growth strings.
std::vector<long long> set_partition_counts(int n) {
    std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
    rgs_count(0, n, 0, out);
    return out;
}

// Permutations of n letters with exactly k cycles, by enumerating all n!
// permutations.
std::vector<long long> cycle_counts(int n) {
    std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (n == 0) {
        out[0] = 1;
        return out;
    }
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)];
                 j = perm[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
            }
        }
        ++out[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymPoly q_int_poly(int n) {
    SymPoly out;
    for (int i = 0; i < n; ++i) {
        out += (i == 0) ? SymPoly(1) : SymPoly::var(Indeterminate::sym_q(), i);
    }
    return out;
}

// --- binomial theorem and normalizer checks ---------------------------------

CheckResult check_binomial_theorem(bool double_weight, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(double_weight ? 7 : 8);
    WeightSpec spec = double_weight ? WeightSpec::generic_vw() : WeightSpec::generic();
    BinomTable<SymPoly> table(spec, double_weight);
    long trials = 0;
    bool ok = true;
    for (int n = 0; n <= n_max && ok; ++n) {
        NCElement<SymPoly> e = binomial_power<SymPoly>(n, spec);
        if (static_cast<int>(e.terms().size()) != n + 1) ok = false;
        for (int k = 0; k <= n && ok; ++k) {
            ok = (e.coeff(k, n - k) == table.coeff(n, k));
            ++trials;
        }
    }
    return exact_result({{"family", family_name(spec.family)}, {"n_max", n_max}}, trials, ok);
}

CheckResult check_path_oracle(const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(8);
    long trials = 0;
    bool ok = true;
    for (WeightSpec spec : {WeightSpec::generic(), WeightSpec::generic_vw()}) {
        BinomTable<SymPoly> table(spec, spec.double_weight());
        WeightGrid<SymPoly> grid(spec);
        for (int n = 0; n <= n_max && ok; ++n) {
            for (int k = 0; k <= n && ok; ++k) {
                ok = (table.coeff(n, k) ==
                      generating_function_cached<SymPoly>({0, 0}, {k, n - k}, grid));
                ++trials;
            }
        }
    }
    return exact_result({{"families", {"generic", "generic-vw"}}, {"n_max", n_max}}, trials, ok);
}

CheckResult check_lemma_commutation(const CheckConfig& cfg) {
    int k_max = cfg.k.value_or(6), l_max = cfg.l.value_or(6);
    WeightSpec spec = WeightSpec::generic();
    long trials = 0;
    bool ok = true;
    for (int k = 0; k <= k_max && ok; ++k) {
        for (int l = 0; l <= l_max && ok; ++l) {
            Word word;
            for (int i = 0; i < k; ++i) word.atoms.push_back(WordAtom::y());
            for (int i = 0; i < l; ++i) word.atoms.push_back(WordAtom::x());
            NCElement<SymPoly> nf = normalize<SymPoly>(word, spec);
            SymPoly closed = commute_yx<SymPoly>(k, l, spec);
            ok = (nf.terms().size() == 1) && (nf.coeff(l, k) == closed);
            ++trials;
        }
    }
    return exact_result({{"family", "generic"}, {"k_max", k_max}, {"l_max", l_max}}, trials, ok);
}

CheckResult check_normalizer_rewriter(const CheckConfig& cfg) {
    int len_max = cfg.n.value_or(8);
    std::vector<WeightSpec> specs{WeightSpec::generic(), WeightSpec::generic_vw()};
    long trials = 0;
    bool ok = true;
    // Every pure x/y word up to the length cap.
    for (int len = 1; len <= len_max && ok; ++len) {
        for (unsigned mask = 0; mask < (1u << len) && ok; ++mask) {
            Word w;
            for (int i = 0; i < len; ++i) {
                w.atoms.push_back((mask >> i) & 1u ? WordAtom::x() : WordAtom::y());
            }
            for (const auto& spec : specs) {
                ok = ok && (normalize<SymPoly>(w, spec) == normalize_by_rewriting<SymPoly>(w, spec));
                ++trials;
            }
        }
    }
    // Factor-interleaved samples.
    Rng rng(cfg.seed);
    int samples = cfg.trials.value_or(40);
    for (int t = 0; t < samples && ok; ++t) {
        Word w;
        int len = rng.uniform_int(1, 6);
        for (int i = 0; i < len; ++i) {
            switch (rng.uniform_int(0, 3)) {
                case 0: w.atoms.push_back(WordAtom::x()); break;
                case 1: w.atoms.push_back(WordAtom::y()); break;
                case 2:
                    w.atoms.push_back(WordAtom::weight(Monomial::var(
                        Indeterminate::small_w(rng.uniform_int(1, 3), rng.uniform_int(1, 3)))));
                    break;
                default:
                    w.atoms.push_back(WordAtom::weight(Monomial::var(
                        Indeterminate::small_v(rng.uniform_int(0, 3), rng.uniform_int(1, 3)))));
                    break;
            }
        }
        for (const auto& spec : specs) {
            ok = ok && (normalize<SymPoly>(w, spec) == normalize_by_rewriting<SymPoly>(w, spec));
            ++trials;
        }
    }
    return exact_result({{"families", {"generic", "generic-vw"}},
                         {"len_max", len_max},
                         {"interleaved_samples", samples}},
                        trials, ok);
}

// --- convolution identities --------------------------------------------------

CheckResult check_convolution(Cut cut, const CheckConfig& cfg) {
    const int sum_cap = 7;
    long trials = 0;
    bool ok = true;
    for (WeightSpec spec : {WeightSpec::generic(), WeightSpec::generic_vw()}) {
        for (int n : range_or_pin(cfg.n, 0, sum_cap)) {
            for (int m : range_or_pin(cfg.m, 0, sum_cap)) {
                if (!(cfg.n && cfg.m) && n + m > sum_cap) continue;
                std::vector<int> cuts;
                switch (cut) {
                    case Cut::Diagonal: cuts = range_or_pin(cfg.k, 0, n + m); break;
                    case Cut::Vertical: cuts = range_or_pin(cfg.l, 1, n); break;
                    case Cut::Horizontal: cuts = range_or_pin(cfg.k, 1, m); break;
                }
                for (int x : cuts) {
                    ok = ok && convolution_check<SymPoly>(cut, spec, n, m, x).is_zero();
                    ++trials;
                }
            }
        }
    }
    // Numeric spot checks with elliptic weights through the same table route.
    int ntrials = cfg.trials.value_or(5);
    double tol = cfg.tol.value_or(1e-9);
    Rng rng(cfg.seed);
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        int n = cfg.n ? *cfg.n : rng.uniform_int(cut == Cut::Vertical ? 1 : 0, 3);
        int m = cfg.m ? *cfg.m : rng.uniform_int(cut == Cut::Horizontal ? 1 : 0, 3);
        int x = 0;
        switch (cut) {
            case Cut::Diagonal: x = cfg.k ? *cfg.k : rng.uniform_int(0, n + m); break;
            case Cut::Vertical: x = cfg.l ? *cfg.l : rng.uniform_int(1, n); break;
            case Cut::Horizontal: x = cfg.k ? *cfg.k : rng.uniform_int(1, m); break;
        }
        int depth = 3 * (n + m) + 6;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            EllipticDraw d{rng.param(), rng.param(), draw_q(rng, depth), rng.nome()};
            if (elliptic_draw_floor(d.a, d.b, d.q, d.p, depth) < kDrawFloor) continue;
            WeightSpec spec = WeightSpec::elliptic(d.a, d.b, d.q, d.p);
            try {
                Cplx delta = convolution_check<Cplx>(cut, spec, n, m, x);
                Cplx ref = wbinom<Cplx>(spec, n + m, cut == Cut::Diagonal ? x : n);
                max_res = std::max(max_res, std::abs(delta) / std::max(1.0, std::abs(ref)));
            } catch (const Error&) {
                continue;
            }
            break;
        }
        ++trials;
    }
    return numeric_result({{"families", {"generic", "generic-vw", "elliptic"}},
                           {"sum_cap", sum_cap},
                           {"numeric_trials", ntrials}},
                          trials, max_res, tol, ok);
}

// --- path decompositions -----------------------------------------------------

template <class R>
using GridTable = std::vector<std::vector<R>>;

// gf(a -> (x,y)) for every box cell, by the last-step recursion.
template <class R>
GridTable<R> sweep_from(GridPoint a, int bx, int by, WeightGrid<R>& grid) {
    GridTable<R> g(static_cast<std::size_t>(bx) + 1,
                   std::vector<R>(static_cast<std::size_t>(by) + 1, R(0)));
    for (int x = a.x; x <= bx; ++x) {
        for (int y = a.y; y <= by; ++y) {
            if (x == a.x && y == a.y) {
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = R(1);
                continue;
            }
            R acc = R(0);
            if (x > a.x) {
                acc += g[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)] *
                       grid.big(x, y);
            }
            if (y > a.y) {
                acc += g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)] *
                       grid.vertical(x, y);
            }
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::move(acc);
        }
    }
    return g;
}

// gf((x,y) -> omega) for every cell weakly south-west of omega, by the
// first-step recursion.
template <class R>
GridTable<R> sweep_to(GridPoint omega, WeightGrid<R>& grid) {
    GridTable<R> g(static_cast<std::size_t>(omega.x) + 1,
                   std::vector<R>(static_cast<std::size_t>(omega.y) + 1, R(0)));
    for (int x = omega.x; x >= 0; --x) {
        for (int y = omega.y; y >= 0; --y) {
            if (x == omega.x && y == omega.y) {
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = R(1);
                continue;
            }
            R acc = R(0);
            if (x < omega.x) {
                acc += grid.big(x + 1, y) *
                       g[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(y)];
            }
            if (y < omega.y) {
                acc += grid.vertical(x, y + 1) *
                       g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y + 1)];
            }
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = std::move(acc);
        }
    }
    return g;
}

// Magnitude analogs of the two sweeps: the same recursions over |values| and
// |weights|.  They majorize the term scale of every quantity either sweep
// sums, including cancellation hidden inside cells, which is the scale that
// numeric-ring roundoff actually lives on.
inline GridTable<double> mag_sweep_from(GridPoint a, int bx, int by, WeightGrid<Cplx>& grid) {
    GridTable<double> g(static_cast<std::size_t>(bx) + 1,
                        std::vector<double>(static_cast<std::size_t>(by) + 1, 0.0));
    for (int x = a.x; x <= bx; ++x) {
        for (int y = a.y; y <= by; ++y) {
            if (x == a.x && y == a.y) {
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1.0;
                continue;
            }
            double acc = 0.0;
            if (x > a.x) {
                acc += g[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)] *
                       std::abs(grid.big(x, y));
            }
            if (y > a.y) {
                acc += g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)] *
                       std::abs(grid.vertical(x, y));
            }
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = acc;
        }
    }
    return g;
}

inline GridTable<double> mag_sweep_to(GridPoint omega, WeightGrid<Cplx>& grid) {
    GridTable<double> g(static_cast<std::size_t>(omega.x) + 1,
                        std::vector<double>(static_cast<std::size_t>(omega.y) + 1, 0.0));
    for (int x = omega.x; x >= 0; --x) {
        for (int y = omega.y; y >= 0; --y) {
            if (x == omega.x && y == omega.y) {
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1.0;
                continue;
            }
            double acc = 0.0;
            if (x < omega.x) {
                acc += std::abs(grid.big(x + 1, y)) *
                       g[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(y)];
            }
            if (y < omega.y) {
                acc += std::abs(grid.vertical(x, y + 1)) *
                       g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y + 1)];
            }
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = acc;
        }
    }
    return g;
}

// Checks one cut family over every endpoint of the box. Exact rings return a
// zero max residual only if every difference is the zero element; numeric
// rings report the largest residual relative to the decomposition's term
// scale (the scale summation roundoff lives on).
template <class R>
std::pair<bool, double> run_box_decomposition(Cut cut, const WeightSpec& spec, int bx, int by,
                                              const std::optional<int>& pin, long& trials) {
    WeightGrid<R> grid(spec);
    auto fwd = sweep_from<R>({0, 0}, bx, by, grid);
    constexpr bool kNumeric = !std::is_same_v<R, SymPoly>;
    GridTable<double> mfwd;
    if constexpr (kNumeric) mfwd = mag_sweep_from({0, 0}, bx, by, grid);
    bool ok = true;
    double max_res = 0.0;
    for (int X = 0; X <= bx; ++X) {
        for (int Y = 0; Y <= by; ++Y) {
            auto bwd = sweep_to<R>({X, Y}, grid);
            GridTable<double> mbwd;
            if constexpr (kNumeric) mbwd = mag_sweep_to({X, Y}, grid);
            const R& lhs = fwd[static_cast<std::size_t>(X)][static_cast<std::size_t>(Y)];
            auto record = [&](const R& rhs, double scale) {
                if constexpr (kNumeric) {
                    double den = std::max(
                        1.0,
                        scale + mfwd[static_cast<std::size_t>(X)][static_cast<std::size_t>(Y)]);
                    max_res = std::max(max_res, std::abs(lhs - rhs) / den);
                } else {
                    (void)scale;
                    ok = ok && (lhs == rhs);
                }
                ++trials;
            };
            switch (cut) {
                case Cut::Diagonal:
                    for (int c : range_or_pin(pin, 0, X + Y)) {
                        if (c < 0 || c > X + Y) continue;
                        R rhs = R(0);
                        double scale = 0.0;
                        for (int j = std::max(0, c - Y); j <= std::min(c, X); ++j) {
                            rhs += fwd[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(c - j)] *
                                   bwd[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(c - j)];
                            if constexpr (kNumeric) {
                                scale += mfwd[static_cast<std::size_t>(j)]
                                             [static_cast<std::size_t>(c - j)] *
                                         mbwd[static_cast<std::size_t>(j)]
                                             [static_cast<std::size_t>(c - j)];
                            }
                        }
                        record(rhs, scale);
                    }
                    break;
                case Cut::Vertical:
                    for (int l : range_or_pin(pin, 1, X)) {
                        if (l < 1 || l > X) continue;
                        R rhs = R(0);
                        double scale = 0.0;
                        for (int k = 0; k <= Y; ++k) {
                            rhs += fwd[static_cast<std::size_t>(l - 1)]
                                      [static_cast<std::size_t>(k)] *
                                   grid.big(l, k) *
                                   bwd[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
                            if constexpr (kNumeric) {
                                scale += mfwd[static_cast<std::size_t>(l - 1)]
                                             [static_cast<std::size_t>(k)] *
                                         std::abs(grid.big(l, k)) *
                                         mbwd[static_cast<std::size_t>(l)]
                                             [static_cast<std::size_t>(k)];
                            }
                        }
                        record(rhs, scale);
                    }
                    break;
                case Cut::Horizontal:
                    for (int c : range_or_pin(pin, 1, Y)) {
                        if (c < 1 || c > Y) continue;
                        R rhs = R(0);
                        double scale = 0.0;
                        for (int l = 0; l <= X; ++l) {
                            rhs += fwd[static_cast<std::size_t>(l)]
                                      [static_cast<std::size_t>(c - 1)] *
                                   grid.vertical(l, c) *
                                   bwd[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)];
                            if constexpr (kNumeric) {
                                scale += mfwd[static_cast<std::size_t>(l)]
                                             [static_cast<std::size_t>(c - 1)] *
                                         std::abs(grid.vertical(l, c)) *
                                         mbwd[static_cast<std::size_t>(l)]
                                             [static_cast<std::size_t>(c)];
                            }
                        }
                        record(rhs, scale);
                    }
                    break;
            }
        }
    }
    return {ok, max_res};
}

CheckResult check_path_decomposition(Cut cut, const CheckConfig& cfg) {
    int bx = cfg.n.value_or(8), by = cfg.m.value_or(8);
    const std::optional<int>& pin = (cut == Cut::Vertical) ? cfg.l : cfg.k;
    long trials = 0;
    bool ok = true;

    // Exact: generic weights over the full box, double weights over a
    // smaller one.
    {
        WeightSpec spec = WeightSpec::generic();
        auto [pass, res] = run_box_decomposition<SymPoly>(cut, spec, bx, by, pin, trials);
        (void)res;
        ok = ok && pass;
    }
    {
        WeightSpec spec = WeightSpec::generic_vw();
        auto [pass, res] =
            run_box_decomposition<SymPoly>(cut, spec, std::min(bx, 5), std::min(by, 5), pin,
                                           trials);
        (void)res;
        ok = ok && pass;
    }

    // Tie the sweeps to the literal path enumeration on a small corner.
    {
        WeightSpec spec = WeightSpec::generic();
        for (int X = 0; X <= std::min(bx, 3); ++X) {
            for (int Y = 0; Y <= std::min(by, 3); ++Y) {
                switch (cut) {
                    case Cut::Diagonal:
                        for (int c : range_or_pin(pin, 0, X + Y)) {
                            if (c < 0 || c > X + Y) continue;
                            ok = ok && decompose_diagonal<SymPoly>(spec, c, X + Y - c, X)
                                           .is_zero();
                            ++trials;
                        }
                        break;
                    case Cut::Vertical:
                        for (int l : range_or_pin(pin, 1, X)) {
                            if (l < 1 || l > X) continue;
                            ok = ok && decompose_vertical<SymPoly>(spec, X, Y, l).is_zero();
                            ++trials;
                        }
                        break;
                    case Cut::Horizontal:
                        for (int c : range_or_pin(pin, 1, Y)) {
                            if (c < 1 || c > Y) continue;
                            ok = ok && decompose_horizontal<SymPoly>(spec, X, Y, c).is_zero();
                            ++trials;
                        }
                        break;
                }
            }
        }
    }

    // Numeric: elliptic weights over a reduced box.  Held to the common
    // elliptic tolerance: sums of theta-quotient path products share the
    // conditioning of the other elliptic convolutions.
    int ntrials = cfg.trials.value_or(2);
    double tol = cfg.tol.value_or(1e-8);
    Rng rng(cfg.seed);
    double max_res = 0.0;
    int nbx = std::min(bx, 5), nby = std::min(by, 5);
    int depth = 3 * std::max(nbx, nby) + 6;
    for (int t = 0; t < ntrials; ++t) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            EllipticDraw d = {rng.param(), rng.param(), draw_q(rng, depth), rng.nome()};
            if (elliptic_draw_floor(d.a, d.b, d.q, d.p, depth) < kDrawFloor) continue;
            WeightSpec spec = WeightSpec::elliptic(d.a, d.b, d.q, d.p);
            try {
                auto [pass, res] = run_box_decomposition<Cplx>(cut, spec, nbx, nby, pin, trials);
                (void)pass;
                max_res = std::max(max_res, res);
            } catch (const Error&) {
                continue;
            }
            break;
        }
    }
    return numeric_result({{"families", {"generic", "generic-vw", "elliptic"}},
                           {"box", {bx, by}},
                           {"numeric_trials", ntrials}},
                          trials, max_res, tol, ok);
}

// --- elliptic checks ---------------------------------------------------------

CheckResult check_elliptic_binomial(const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(10);
    int ntrials = cfg.trials.value_or(100);
    double tol = cfg.tol.value_or(1e-9);
    int depth = 3 * n_max + 4;
    Rng rng(cfg.seed);
    double max_res = 0.0;
    bool exact_ok = true;
    for (int t = 0; t < ntrials; ++t) {
        Cplx a, b, q, p;
        std::vector<std::vector<Cplx>> rec(static_cast<std::size_t>(n_max) + 1);
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            auto d = draw_elliptic(rng, depth, true);
            a = d.a, b = d.b, q = d.q, p = d.p;
            // Pascal-type recursion with the closed big-weight formula, fully
            // independent of the product-of-small-weights route.  A shadow
            // table carries a running first-order roundoff bound: draws whose
            // cancellation pattern makes double arithmetic unable to certify
            // the stated tolerance are rejected up front (the bound never
            // looks at the closed form, so the comparison stays independent).
            constexpr double kWeightEps = 1e-12; // per-factor relative error
            constexpr double kUlp = 1.1e-16;
            std::vector<std::vector<double>> err(static_cast<std::size_t>(n_max) + 1);
            rec[0] = {Cplx{1.0, 0.0}};
            err[0] = {0.0};
            bool conditioned = true;
            try {
                for (int row = 1; row <= n_max; ++row) {
                    auto& cur = rec[static_cast<std::size_t>(row)];
                    auto& prev_row = rec[static_cast<std::size_t>(row - 1)];
                    auto& cur_err = err[static_cast<std::size_t>(row)];
                    auto& prev_err = err[static_cast<std::size_t>(row - 1)];
                    cur.assign(static_cast<std::size_t>(row) + 1, Cplx{0.0, 0.0});
                    cur_err.assign(static_cast<std::size_t>(row) + 1, 0.0);
                    for (int k = 0; k <= row; ++k) {
                        Cplx acc{0.0, 0.0};
                        double bound = 0.0;
                        if (k <= row - 1) {
                            acc += prev_row[static_cast<std::size_t>(k)];
                            bound += prev_err[static_cast<std::size_t>(k)];
                        }
                        if (k >= 1) {
                            Cplx w = elliptic_big_weight_closed(a, b, q, p, k, row - k);
                            Cplx prev = prev_row[static_cast<std::size_t>(k - 1)];
                            acc += prev * w;
                            bound += prev_err[static_cast<std::size_t>(k - 1)] * std::abs(w) +
                                     std::abs(prev * w) * kWeightEps;
                        }
                        bound += std::abs(acc) * kUlp;
                        cur[static_cast<std::size_t>(k)] = acc;
                        cur_err[static_cast<std::size_t>(k)] = bound;
                        if (!(bound <= 0.5 * tol * std::max(1.0, std::abs(acc)))) {
                            conditioned = false;
                        }
                    }
                }
            } catch (const Error&) {
                continue;
            }
            if (conditioned) break;
        }
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                Cplx closed = elliptic_binom_closed(a, b, q, p, n, k);
                max_res = std::max(
                    max_res,
                    rel_residual(rec[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                                 closed));
            }
        }
        // Boundary values are exact.
        exact_ok = exact_ok && elliptic_binom_closed(a, b, q, p, n_max, -1) == Cplx{0.0, 0.0} &&
                   elliptic_binom_closed(a, b, q, p, n_max, n_max + 1) == Cplx{0.0, 0.0} &&
                   elliptic_binom_closed(a, b, q, p, n_max, n_max) == Cplx{1.0, 0.0} &&
                   elliptic_binom_closed(a, b, q, p, n_max, 0) == Cplx{1.0, 0.0};
        // Invariance under a -> pa and b -> pb separately.
        if (n_max >= 1) {
            int kk = n_max / 2;
            Cplx base = elliptic_binom_closed(a, b, q, p, n_max, kk);
            max_res = std::max(
                max_res, rel_residual(elliptic_binom_closed(p * a, b, q, p, n_max, kk), base));
            max_res = std::max(
                max_res, rel_residual(elliptic_binom_closed(a, p * b, q, p, n_max, kk), base));
        }
    }
    return numeric_result({{"family", "elliptic"}, {"n_max", n_max}, {"draws", ntrials}}, ntrials,
                          max_res, tol, exact_ok);
}

CheckResult check_v109(bool p_zero, const CheckConfig& cfg) {
    int ntrials = cfg.trials.value_or(50);
    double tol = cfg.tol.value_or(p_zero ? 1e-10 : 1e-8);
    Rng rng(cfg.seed);
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        int n = cfg.n ? *cfg.n : t % 9;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            EllipticParams P;
            P.q = draw_q(rng, 2 * n + 4);
            P.a = rng.param();
            P.b = rng.param();
            P.c = rng.param();
            P.d = rng.param();
            P.p = p_zero ? Cplx{0.0, 0.0} : rng.nome();
            P.n = n;
            try {
                P.e = balancing_e(P.a, P.b, P.c, P.d, P.q, n);
                double ae = std::abs(P.e);
                if (ae < 1e-4 || ae > 1e4) continue;
                // The p = 0 branch is held to a tighter tolerance; near-unit
                // factors 1 - x amplify roundoff by 1/|1 - x|, so demand a
                // larger gap there.
                if (v109_degeneracy_floor(P) < (p_zero ? 1e-2 : kDrawFloor)) continue;
                double scale = 0.0;
                auto [lhs, rhs] = v109_sides(P, &scale);
                double eps = p_zero ? kSumEpsBasic : kSumEpsElliptic;
                if (scale * eps > 0.5 * tol * std::max(1.0, std::abs(rhs))) continue;
                max_res = std::max(max_res, rel_residual(lhs, rhs));
            } catch (const Error&) {
                continue;
            }
            break;
        }
    }
    return numeric_result(
        {{"p", p_zero ? "zero" : "drawn"}, {"n", cfg.n ? json(*cfg.n) : json("0..8")}}, ntrials,
        max_res, tol);
}

CheckResult check_v109_convolution(Cut cut, const CheckConfig& cfg) {
    int ntrials = cfg.trials.value_or(25);
    double tol = cfg.tol.value_or(1e-8);
    const int cap = 5;
    Rng rng(cfg.seed);
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        int n = cfg.n ? *cfg.n : rng.uniform_int(cut == Cut::Vertical ? 1 : 0, cap);
        int m = cfg.m ? *cfg.m : rng.uniform_int(cut == Cut::Horizontal ? 1 : 0, cap);
        int x = 0;
        switch (cut) {
            case Cut::Diagonal: x = cfg.k ? *cfg.k : rng.uniform_int(0, n + m); break;
            case Cut::Vertical: x = cfg.l ? *cfg.l : rng.uniform_int(1, n); break;
            case Cut::Horizontal: x = cfg.k ? *cfg.k : rng.uniform_int(1, m); break;
        }
        int depth = 4 * (n + m) + 6;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            EllipticDraw d{rng.param(), rng.param(), draw_q(rng, depth), rng.nome()};
            if (elliptic_draw_floor(d.a, d.b, d.q, d.p, depth) < kDrawFloor) continue;
            try {
                // The literal summation form of the diagonal cut exists only for
                // k <= m: beyond that a denominator factor theta(q^{1+m-k+i})
                // vanishes identically and the identity lives on as an analytic
                // continuation, not as a finite sum.
                if (cut == Cut::Diagonal && x <= m) {
                    EllipticParams P = v109_from_diagonal(d.a, d.b, d.q, d.p, n, m, x);
                    if (v109_degeneracy_floor(P) < kDrawFloor) continue;
                    double scale = 0.0;
                    auto [lhs, rhs] = v109_sides(P, &scale);
                    if (scale * kSumEpsElliptic > 0.5 * tol * std::max(1.0, std::abs(rhs))) {
                        continue;
                    }
                    max_res = std::max(max_res, rel_residual(lhs, rhs));
                }
                double cscale = 0.0;
                Cplx delta =
                    v109_convolution_delta(cut, d.a, d.b, d.q, d.p, n, m, x, &cscale);
                Cplx ref = elliptic_binom_closed(d.a, d.b, d.q, d.p, n + m,
                                                 cut == Cut::Diagonal ? x : n);
                if (cscale * kSumEpsElliptic > 0.5 * tol * std::max(1.0, std::abs(ref))) {
                    continue;
                }
                max_res = std::max(max_res, std::abs(delta) / std::max(1.0, std::abs(ref)));
            } catch (const Error&) {
                continue;
            }
            break;
        }
    }
    return numeric_result({{"family", "elliptic"}, {"size_cap", cap}, {"draws", ntrials}},
                          ntrials, max_res, tol);
}

// --- theta function checks ---------------------------------------------------

enum class ThetaCheck { Inversion, QuasiPeriodicity, Addition, NomeZero, FactorialShift };

CheckResult check_theta(ThetaCheck which, const CheckConfig& cfg) {
    int ntrials = cfg.trials.value_or(200);
    double tol = cfg.tol.value_or(which == ThetaCheck::NomeZero ? 0.0 : 1e-11);
    Rng rng(cfg.seed);
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        switch (which) {
            case ThetaCheck::Inversion: {
                Cplx x = rng.param(), p = rng.nome();
                Cplx lhs = theta(x, p);
                Cplx rhs = -x * theta(1.0 / x, p);
                max_res = std::max(max_res, rel_residual(lhs, rhs));
                break;
            }
            case ThetaCheck::QuasiPeriodicity: {
                Cplx x = rng.param(), p = rng.nome();
                Cplx lhs = theta(p * x, p);
                Cplx rhs = -theta(x, p) / x;
                max_res = std::max(max_res, rel_residual(lhs, rhs));
                break;
            }
            case ThetaCheck::Addition: {
                Cplx x = rng.param(), y = rng.param(), u = rng.param(), v = rng.param();
                Cplx p = rng.nome();
                max_res = std::max(max_res, theta_addition_residual(x, y, u, v, p));
                break;
            }
            case ThetaCheck::NomeZero: {
                Cplx x = rng.param();
                max_res = std::max(max_res, std::abs(theta(x, Cplx{0.0, 0.0}) - (1.0 - x)));
                break;
            }
            case ThetaCheck::FactorialShift: {
                Cplx a = rng.param(), q = rng.param(), p = rng.nome();
                int n = rng.uniform_int(0, 8);
                Cplx lhs = qp_factorial(p * a, q, p, n);
                Cplx sign{(n % 2 == 0) ? 1.0 : -1.0, 0.0};
                Cplx rhs = sign * cpow(a, -n) * cpow(q, -static_cast<long>(n) * (n - 1) / 2) *
                           qp_factorial(a, q, p, n);
                max_res = std::max(max_res, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                break;
            }
        }
    }
    return numeric_result({{"draws", ntrials}}, ntrials, max_res, tol);
}

// --- symmetric function checks -----------------------------------------------

CheckResult check_sym_binomial(char family, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(8);
    long trials = 0;
    bool ok = true;
    for (int n = 0; n <= n_max && ok; ++n) {
        ok = sym_binom_check(family, n).is_zero();
        trials += n + 1;
    }
    return exact_result(
        {{"family", family == 'h' ? "complete-sym" : "elementary-sym"}, {"n_max", n_max}}, trials,
        ok);
}

CheckResult check_sym_identity(SymIdentity which, const CheckConfig& cfg) {
    int n_max = cfg.n ? *cfg.n : 6, m_max = cfg.m ? *cfg.m : 6;
    long trials = 0;
    bool ok = true;
    for (int n : range_or_pin(cfg.n, 0, n_max)) {
        for (int m : range_or_pin(cfg.m, 0, m_max)) {
            std::vector<int> xs;
            switch (which) {
                case SymIdentity::H1:
                case SymIdentity::SchurE: xs = range_or_pin(cfg.k, 0, n + m); break;
                case SymIdentity::H2:
                case SymIdentity::E1: xs = range_or_pin(cfg.l, 1, n); break;
                case SymIdentity::SchurH:
                case SymIdentity::E2: xs = range_or_pin(cfg.k, 1, m); break;
            }
            for (int x : xs) {
                ok = ok && sym_identity_check(which, n, m, x).is_zero();
                ++trials;
            }
            if (!ok) break;
        }
        if (!ok) break;
    }
    return exact_result({{"n_max", n_max}, {"m_max", m_max}}, trials, ok);
}

// --- p = 0 specialization checks ----------------------------------------------

CheckResult check_basic_binomial(WeightFamily f, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(10);
    int ntrials = cfg.trials.value_or(20);
    double tol = cfg.tol.value_or(1e-9);
    int depth = 3 * n_max + 4;
    Rng rng(cfg.seed);
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        Cplx a, b, q;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            a = rng.param();
            b = rng.param();
            q = rng.param();
            double floor = 0.0;
            if (f == WeightFamily::BalancedVWP) {
                floor = elliptic_draw_floor(a, b, q, Cplx{0.0, 0.0}, depth);
            } else if (f == WeightFamily::Balanced) {
                floor = std::min(unit_gap_floor(Cplx{1.0, 0.0}, q, 1, depth),
                                 unit_gap_floor(b, q, 1, depth));
            } else {
                floor = std::min(unit_gap_floor(Cplx{1.0, 0.0}, q, 1, depth),
                                 unit_gap_floor(a, q, 0, depth));
            }
            if (floor >= kDrawFloor) break;
        }
        WeightSpec spec = (f == WeightFamily::BalancedVWP) ? WeightSpec::balanced_vwp(a, b, q)
                          : (f == WeightFamily::Balanced)  ? WeightSpec::balanced(b, q)
                                                           : WeightSpec::vwp(a, q);
        BinomTable<Cplx> table(spec);
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                Cplx closed = basic_binom_closed(f, a, b, q, n, k);
                max_res = std::max(max_res, rel_residual(table.coeff(n, k), closed));
            }
        }
    }
    return numeric_result({{"family", family_name(f)}, {"n_max", n_max}, {"draws", ntrials}},
                          ntrials, max_res, tol);
}

CheckResult check_q_limit(WeightFamily f, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(8);
    int ntrials = cfg.trials.value_or(20);
    double tol = cfg.tol.value_or(1e-12);
    Rng rng(cfg.seed);
    BinomTable<SymPoly> gauss(WeightSpec::q_commuting());
    Indeterminate qsym = Indeterminate::sym_q();
    double max_res = 0.0;
    for (int t = 0; t < ntrials; ++t) {
        Cplx q;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 5000) throw Error("rejection sampling exhausted");
            q = rng.param();
            if (unit_gap_floor(Cplx{1.0, 0.0}, q, 1, n_max + 1) >= kDrawFloor) break;
        }
        Assignment direct, inverted;
        direct.set(qsym, q);
        inverted.set(qsym, 1.0 / q);
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                Cplx closed =
                    basic_binom_closed(f, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, q, n, k);
                Cplx expect = gauss.coeff(n, k).substitute(
                    f == WeightFamily::Balanced ? direct : inverted);
                max_res = std::max(max_res, rel_residual(closed, expect));
            }
        }
    }
    json target = (f == WeightFamily::Balanced) ? "gaussian(q)" : "gaussian(1/q)";
    return numeric_result(
        {{"family", family_name(f)}, {"limit", target}, {"n_max", n_max}, {"draws", ntrials}},
        ntrials, max_res, tol);
}

// --- Stirling family checks ---------------------------------------------------

CheckResult check_stirling(bool second, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(8);
    WeightSpec spec = second ? WeightSpec::stirling_second() : WeightSpec::stirling_first();
    BinomTable<SymPoly> table(spec, true);
    long trials = 0;
    bool ok = true;
    for (int n = 0; n <= n_max && ok; ++n) {
        auto counts = second ? set_partition_counts(n) : cycle_counts(n);
        for (int k = 0; k <= n && ok; ++k) {
            Rational expect(counts[static_cast<std::size_t>(k)]);
            if (!second && (n - k) % 2 == 1) expect = -expect;
            SymPoly val = table.coeff(n, k);
            ok = val.is_constant() && val.constant_value() == expect;
            ++trials;
        }
    }
    // The expansion route must agree with the recursion route.
    for (int n : {std::min(5, n_max), n_max}) {
        if (!ok) break;
        NCElement<SymPoly> e = binomial_power<SymPoly>(n, spec);
        for (int k = 0; k <= n && ok; ++k) {
            ok = (e.coeff(k, n - k) == table.coeff(n, k));
            ++trials;
        }
    }
    return exact_result({{"family", family_name(spec.family)}, {"n_max", n_max}}, trials, ok);
}

CheckResult check_q_stirling(bool second, const CheckConfig& cfg) {
    int n_max = cfg.n.value_or(8);
    WeightSpec spec = second ? WeightSpec::q_stirling_second() : WeightSpec::q_stirling_first();
    BinomTable<SymPoly> table(spec, true);
    long trials = 0;
    bool ok = true;
    // Direct triangle recursion, written without the weight machinery.
    std::vector<std::vector<SymPoly>> tri(static_cast<std::size_t>(n_max) + 1);
    tri[0] = {SymPoly(1)};
    for (int n = 1; n <= n_max; ++n) {
        tri[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, SymPoly());
        for (int k = 0; k <= n; ++k) {
            SymPoly acc;
            if (k <= n - 1) {
                SymPoly stay = tri[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
                acc += second ? q_int_poly(k) * stay : -q_int_poly(n - 1) * stay;
            }
            if (k >= 1) {
                acc += tri[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
            }
            tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(acc);
        }
    }
    Assignment at_one;
    at_one.set(Indeterminate::sym_q(), Cplx{1.0, 0.0});
    for (int n = 0; n <= n_max && ok; ++n) {
        auto counts = second ? set_partition_counts(n) : cycle_counts(n);
        for (int k = 0; k <= n && ok; ++k) {
            SymPoly val = table.coeff(n, k);
            ok = (val == tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            // q = 1 lands on the classical counts.
            double expect = static_cast<double>(counts[static_cast<std::size_t>(k)]);
            if (!second && (n - k) % 2 == 1) expect = -expect;
            ok = ok && std::abs(val.substitute(at_one) - Cplx{expect, 0.0}) < 1e-9;
            ++trials;
        }
    }
    // The expansion route must agree with the recursion route.
    int n_pow = std::min(6, n_max);
    if (ok) {
        NCElement<SymPoly> e = binomial_power<SymPoly>(n_pow, spec);
        for (int k = 0; k <= n_pow && ok; ++k) {
            ok = (e.coeff(k, n_pow - k) == table.coeff(n_pow, k));
            ++trials;
        }
    }
    return exact_result({{"family", family_name(spec.family)}, {"n_max", n_max}}, trials, ok);
}

// --- registry assembly ---------------------------------------------------------

template <class Fn>
std::function<CheckResult(const CheckConfig&)> timed(std::string name, Fn fn) {
    return [name = std::move(name), fn = std::move(fn)](const CheckConfig& cfg) {
        auto t0 = steady_clock::now();
        CheckResult r = fn(cfg);
        r.identity = name;
        r.millis = duration_cast<milliseconds>(steady_clock::now() - t0).count();
        return r;
    };
}

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> v;
    auto add = [&v](const char* name, const char* summary, auto fn) {
        v.push_back({name, summary, timed(name, std::move(fn))});
    };

    add("binomial-theorem", "(x+y)^n expansion matches the single-weight recursion (exact)",
        [](const CheckConfig& c) { return check_binomial_theorem(false, c); });
    add("binomial-theorem-vw",
        "(x + v(0,1)y)^n expansion matches the double-weight recursion (exact)",
        [](const CheckConfig& c) { return check_binomial_theorem(true, c); });
    add("path-oracle", "recursion tables equal lattice-path generating functions (exact)",
        check_path_oracle);
    add("lemma-commutation", "y^k x^l = prod W(i,k) x^l y^k via the normalizer (exact)",
        check_lemma_commutation);
    add("normalizer-rewriter", "single-pass normalizer agrees with the naive rewriter (exact)",
        check_normalizer_rewriter);

    add("convolution-diagonal", "diagonal-cut convolution of the tables (exact + elliptic spots)",
        [](const CheckConfig& c) { return check_convolution(Cut::Diagonal, c); });
    add("convolution-vertical", "vertical-cut convolution of the tables (exact + elliptic spots)",
        [](const CheckConfig& c) { return check_convolution(Cut::Vertical, c); });
    add("convolution-horizontal",
        "horizontal-cut convolution of the tables (exact + elliptic spots)",
        [](const CheckConfig& c) { return check_convolution(Cut::Horizontal, c); });

    add("path-decomposition-diagonal",
        "generating functions split along a diagonal (exact box + elliptic spots)",
        [](const CheckConfig& c) { return check_path_decomposition(Cut::Diagonal, c); });
    add("path-decomposition-vertical",
        "generating functions split at the crossing horizontal step (exact box + elliptic spots)",
        [](const CheckConfig& c) { return check_path_decomposition(Cut::Vertical, c); });
    add("path-decomposition-horizontal",
        "generating functions split at the crossing vertical step (exact box + elliptic spots)",
        [](const CheckConfig& c) { return check_path_decomposition(Cut::Horizontal, c); });

    add("elliptic-binomial",
        "closed theta-quotient form equals the recursion; exact borders; nome shifts",
        check_elliptic_binomial);
    add("v109", "terminating very-well-poised summation, sum side vs product side",
        [](const CheckConfig& c) { return check_v109(false, c); });
    add("jackson-8phi7", "the p = 0 specialization of the terminating summation",
        [](const CheckConfig& c) { return check_v109(true, c); });
    add("v109-diagonal", "diagonal convolution in closed elliptic form (plus summation form)",
        [](const CheckConfig& c) { return check_v109_convolution(Cut::Diagonal, c); });
    add("v109-vertical", "vertical convolution in closed elliptic form",
        [](const CheckConfig& c) { return check_v109_convolution(Cut::Vertical, c); });
    add("v109-horizontal", "horizontal convolution in closed elliptic form",
        [](const CheckConfig& c) { return check_v109_convolution(Cut::Horizontal, c); });

    add("theta-inversion", "theta(x) = -x theta(1/x)",
        [](const CheckConfig& c) { return check_theta(ThetaCheck::Inversion, c); });
    add("theta-quasiperiodicity", "theta(px) = -(1/x) theta(x)",
        [](const CheckConfig& c) { return check_theta(ThetaCheck::QuasiPeriodicity, c); });
    add("theta-addition", "three-term product addition rule",
        [](const CheckConfig& c) { return check_theta(ThetaCheck::Addition, c); });
    add("theta-nome-zero", "theta(x; 0) = 1 - x exactly",
        [](const CheckConfig& c) { return check_theta(ThetaCheck::NomeZero, c); });
    add("qp-factorial-shift", "(pa; q, p)_n = (-1)^n a^-n q^-C(n,2) (a; q, p)_n",
        [](const CheckConfig& c) { return check_theta(ThetaCheck::FactorialShift, c); });

    add("sym-binomial-h", "complete-homogeneous closed form of the table columns (exact)",
        [](const CheckConfig& c) { return check_sym_binomial('h', c); });
    add("sym-binomial-e", "elementary closed form of the table columns (exact)",
        [](const CheckConfig& c) { return check_sym_binomial('e', c); });
    add("h1", "complete-homogeneous diagonal convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::H1, c); });
    add("h2", "complete-homogeneous vertical convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::H2, c); });
    add("schur-h", "complete-homogeneous horizontal convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::SchurH, c); });
    add("schur-e", "elementary diagonal convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::SchurE, c); });
    add("e1", "elementary vertical convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::E1, c); });
    add("e2", "elementary horizontal convolution (exact)",
        [](const CheckConfig& c) { return check_sym_identity(SymIdentity::E2, c); });

    add("balanced-vwp-binomial", "p = 0 elliptic closed form equals the recursion",
        [](const CheckConfig& c) { return check_basic_binomial(WeightFamily::BalancedVWP, c); });
    add("balanced-binomial", "balanced closed form equals the recursion",
        [](const CheckConfig& c) { return check_basic_binomial(WeightFamily::Balanced, c); });
    add("vwp-binomial", "very-well-poised closed form equals the recursion",
        [](const CheckConfig& c) { return check_basic_binomial(WeightFamily::VWP, c); });
    add("balanced-q-limit", "balanced family lands on the q-binomial coefficient",
        [](const CheckConfig& c) { return check_q_limit(WeightFamily::Balanced, c); });
    add("vwp-q-limit", "very-well-poised family lands on the 1/q-binomial coefficient",
        [](const CheckConfig& c) { return check_q_limit(WeightFamily::VWP, c); });

    add("stirling-second", "double-weight table equals brute-force set-partition counts (exact)",
        [](const CheckConfig& c) { return check_stirling(true, c); });
    add("stirling-first", "double-weight table equals signed brute-force cycle counts (exact)",
        [](const CheckConfig& c) { return check_stirling(false, c); });
    add("q-stirling-second",
        "double-weight table equals the direct q-triangle; q = 1 gives the counts (exact)",
        [](const CheckConfig& c) { return check_q_stirling(true, c); });
    add("q-stirling-first",
        "double-weight table equals the direct signed q-triangle; q = 1 gives the counts (exact)",
        [](const CheckConfig& c) { return check_q_stirling(false, c); });

    std::sort(v.begin(), v.end(),
              [](const IdentityCheck& x, const IdentityCheck& y) { return x.name < y.name; });
    return v;
}

} // namespace

const std::vector<IdentityCheck>& identity_registry() {
    static const std::vector<IdentityCheck> reg = build_registry();
    return reg;
}

const IdentityCheck* find_identity(std::string_view name) {
    for (const auto& c : identity_registry()) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

nlohmann::json check_result_json(const CheckResult& r, bool timing) {
    json j{{"identity", r.identity},
           {"params", r.params},
           {"trials", r.trials},
           {"max_residual", r.max_residual ? json(*r.max_residual) : json("exact-zero")},
           {"pass", r.pass}};
    if (timing) j["millis"] = r.millis;
    return j;
}

std::pair<std::string, bool> run_report(std::uint64_t seed, bool timing) {
    json checks = json::array();
    long passed = 0;
    bool all = true;
    for (const auto& c : identity_registry()) {
        CheckConfig cfg;
        cfg.seed = seed;
        CheckResult r = c.run(cfg);
        all = all && r.pass;
        passed += r.pass ? 1 : 0;
        checks.push_back(check_result_json(r, timing));
    }
    json report{{"seed", seed},
                {"total", static_cast<long>(identity_registry().size())},
                {"passed", passed},
                {"all_pass", all},
                {"checks", std::move(checks)}};
    return {report.dump(2) + "\n", all};
}

} // namespace wbinom
