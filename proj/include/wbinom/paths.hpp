#pragma once

#include <map>
#include <string>
#include <vector>

#include "wbinom/weights.hpp"

namespace wbinom {

struct GridPoint {
    int x = 0, y = 0;
    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class Step : char { H = 'H', V = 'V' };

struct LatticePath {
    GridPoint start;
    std::vector<Step> steps;

    GridPoint end() const {
        GridPoint p = start;
        for (Step s : steps) {
            if (s == Step::H) ++p.x;
            else ++p.y;
        }
        return p;
    }

    std::string str() const {
        std::string out;
        for (Step s : steps) out += static_cast<char>(s);
        return out;
    }
};

// Enumeration is capped: the acceptance scale is an 8x8 box and the count
// grows as a central binomial coefficient.
inline constexpr int kMaxPathSpan = 22;

// All north-east lattice paths from a to omega in H-before-V lexicographic
// order; the empty set when omega is not weakly north-east of a.
inline std::vector<LatticePath> enumerate_paths(GridPoint a, GridPoint omega) {
    std::vector<LatticePath> out;
    int dx = omega.x - a.x, dy = omega.y - a.y;
    if (dx < 0 || dy < 0) return out;
    if (dx + dy > kMaxPathSpan) {
        throw std::invalid_argument("path region too large: dx + dy exceeds " +
                                    std::to_string(kMaxPathSpan));
    }
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(dx + dy));
    auto rec = [&](auto&& self, int rx, int ry) -> void {
        if (rx == 0 && ry == 0) {
            out.push_back({a, steps});
            return;
        }
        if (rx > 0) {
            steps.push_back(Step::H);
            self(self, rx - 1, ry);
            steps.pop_back();
        }
        if (ry > 0) {
            steps.push_back(Step::V);
            self(self, rx, ry - 1);
            steps.pop_back();
        }
    };
    rec(rec, dx, dy);
    return out;
}

// Per-call weight cache so enumerations do not recompute table entries.
template <class R>
class WeightGrid {
public:
    explicit WeightGrid(const WeightSpec& spec) : spec_(spec) {}

    const R& big(int s, int t) {
        return lookup(big_, s, t, [this](int ss, int tt) { return big_weight<R>(spec_, ss, tt); });
    }
    const R& vertical(int s, int t) {
        return lookup(vert_, s, t,
                      [this](int ss, int tt) { return small_weight_v<R>(spec_, ss, tt); });
    }

private:
    template <class Fn>
    const R& lookup(std::map<std::pair<int, int>, R>& cache, int s, int t, Fn&& compute) {
        auto it = cache.find({s, t});
        if (it == cache.end()) it = cache.emplace(std::pair{s, t}, compute(s, t)).first;
        return it->second;
    }

    const WeightSpec& spec_;
    std::map<std::pair<int, int>, R> big_, vert_;
};

template <class R>
R path_weight_cached(const LatticePath& path, WeightGrid<R>& grid) {
    R out = R(1);
    GridPoint p = path.start;
    for (Step s : path.steps) {
        if (s == Step::H) {
            ++p.x;
            out *= grid.big(p.x, p.y);
        } else {
            ++p.y;
            out *= grid.vertical(p.x, p.y);
        }
    }
    return out;
}

// Weight of one path: a horizontal step ending at (s,t) contributes W(s,t),
// a vertical step ending at (s,t) contributes v(s,t) (1 for single-weight
// families).
template <class R>
R path_weight(const LatticePath& path, const WeightSpec& spec) {
    WeightGrid<R> grid(spec);
    return path_weight_cached(path, grid);
}

template <class R>
R generating_function_cached(GridPoint a, GridPoint omega, WeightGrid<R>& grid) {
    R acc = R(0);
    for (const auto& path : enumerate_paths(a, omega)) acc += path_weight_cached(path, grid);
    return acc;
}

// Sum of path weights over all paths a -> omega (zero for an empty region).
template <class R>
R generating_function(GridPoint a, GridPoint omega, const WeightSpec& spec) {
    WeightGrid<R> grid(spec);
    return generating_function_cached(a, omega, grid);
}

// LHS - RHS of the three path-decomposition identities.
// Diagonal: paths (0,0) -> (k, n+m-k) split on the diagonal x + y = n.
template <class R>
R decompose_diagonal(const WeightSpec& spec, int n, int m, int k) {
    if (n < 0 || m < 0 || k < 0 || k > n + m) {
        throw std::invalid_argument("diagonal decomposition requires 0 <= k <= n+m");
    }
    WeightGrid<R> grid(spec);
    R rhs = R(0);
    for (int j = std::max(0, k - m); j <= std::min(k, n); ++j) {
        rhs += generating_function_cached<R>({0, 0}, {j, n - j}, grid) *
               generating_function_cached<R>({j, n - j}, {k, n + m - k}, grid);
    }
    return generating_function_cached<R>({0, 0}, {k, n + m - k}, grid) - rhs;
}

// Vertical: paths (0,0) -> (n,m) split at the unique horizontal step crossing
// the line x = l - 1/2, i.e. the H step from (l-1,k) to (l,k).
template <class R>
R decompose_vertical(const WeightSpec& spec, int n, int m, int l) {
    if (l < 1 || l > n || m < 0) {
        throw std::invalid_argument("vertical decomposition requires 1 <= l <= n");
    }
    WeightGrid<R> grid(spec);
    R rhs = R(0);
    for (int k = 0; k <= m; ++k) {
        rhs += generating_function_cached<R>({0, 0}, {l - 1, k}, grid) * grid.big(l, k) *
               generating_function_cached<R>({l, k}, {n, m}, grid);
    }
    return generating_function_cached<R>({0, 0}, {n, m}, grid) - rhs;
}

// Horizontal: split at the unique vertical step crossing y = k - 1/2, i.e.
// the V step from (l,k-1) to (l,k) with crossing weight v(l,k).
template <class R>
R decompose_horizontal(const WeightSpec& spec, int n, int m, int k) {
    if (k < 1 || k > m || n < 0) {
        throw std::invalid_argument("horizontal decomposition requires 1 <= k <= m");
    }
    WeightGrid<R> grid(spec);
    R rhs = R(0);
    for (int l = 0; l <= n; ++l) {
        rhs += generating_function_cached<R>({0, 0}, {l, k - 1}, grid) * grid.vertical(l, k) *
               generating_function_cached<R>({l, k}, {n, m}, grid);
    }
    return generating_function_cached<R>({0, 0}, {n, m}, grid) - rhs;
}

} // namespace wbinom
