#include <doctest.h>

#include "wbinom/binomial.hpp"
#include "wbinom/paths.hpp"

using namespace wbinom;

namespace {

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

} // namespace

TEST_CASE("path counts are binomial coefficients") {
    for (int dx = 0; dx <= 5; ++dx) {
        for (int dy = 0; dy <= 5; ++dy) {
            auto paths = enumerate_paths({1, 2}, {1 + dx, 2 + dy});
            CHECK(static_cast<long long>(paths.size()) == choose(dx + dy, dx));
            for (const auto& p : paths) {
                CHECK(p.end().x == 1 + dx);
                CHECK(p.end().y == 2 + dy);
            }
        }
    }
}

TEST_CASE("enumeration order puts horizontal steps first") {
    auto paths = enumerate_paths({0, 0}, {2, 1});
    REQUIRE(paths.size() == 3);
    CHECK(paths[0].str() == "HHV");
    CHECK(paths[1].str() == "HVH");
    CHECK(paths[2].str() == "VHH");
}

TEST_CASE("unreachable endpoints give the empty sum") {
    CHECK(enumerate_paths({1, 0}, {0, 0}).empty());
    CHECK(generating_function<SymPoly>({1, 0}, {0, 0}, WeightSpec::generic()) == SymPoly());
    CHECK(generating_function<SymPoly>({0, 0}, {0, 0}, WeightSpec::generic()) == SymPoly(1));
}

TEST_CASE("the enumeration cap throws instead of exploding") {
    CHECK_THROWS_AS(enumerate_paths({0, 0}, {12, 12}), std::invalid_argument);
}

TEST_CASE("single-path weights") {
    WeightSpec g = WeightSpec::generic();
    // A purely horizontal path along the x-axis weighs 1: W(s,0) = 1.
    LatticePath flat{{0, 0}, {Step::H, Step::H, Step::H, Step::H}};
    CHECK(path_weight<SymPoly>(flat, g) == SymPoly(1));
    // A hook path: up t steps then right one step, weight W(1,t).
    LatticePath hook{{0, 0}, {Step::V, Step::V, Step::H}};
    CHECK(path_weight<SymPoly>(hook, g) ==
          SymPoly::var(Indeterminate::small_w(1, 1)) *
              SymPoly::var(Indeterminate::small_w(1, 2)));
    // Vertical steps pick up v weights in the double-weight setting.
    WeightSpec gv = WeightSpec::generic_vw();
    CHECK(path_weight<SymPoly>(hook, gv) ==
          SymPoly::var(Indeterminate::small_v(0, 1)) *
              SymPoly::var(Indeterminate::small_v(0, 2)) *
              SymPoly::var(Indeterminate::small_w(1, 1)) *
              SymPoly::var(Indeterminate::small_w(1, 2)));
}

TEST_CASE("generating function to a box corner is the table entry") {
    WeightSpec g = WeightSpec::generic();
    CHECK(generating_function<SymPoly>({0, 0}, {2, 2}, g) == wbinom<SymPoly>(g, 4, 2));
    WeightSpec gv = WeightSpec::generic_vw();
    CHECK(generating_function<SymPoly>({0, 0}, {1, 2}, gv) == vwbinom<SymPoly>(gv, 3, 1));
}

TEST_CASE("literal decompositions vanish on a small box") {
    WeightSpec gv = WeightSpec::generic_vw();
    CHECK(decompose_diagonal<SymPoly>(gv, 2, 2, 1).is_zero());
    CHECK(decompose_vertical<SymPoly>(gv, 3, 2, 2).is_zero());
    CHECK(decompose_horizontal<SymPoly>(gv, 2, 3, 2).is_zero());
    CHECK_THROWS_AS(decompose_vertical<SymPoly>(gv, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(decompose_horizontal<SymPoly>(gv, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(decompose_diagonal<SymPoly>(gv, 1, 1, 3), std::invalid_argument);
}
