#include "doctest.h"
#include "torus/error.hpp"
#include "torus/moment.hpp"

#include <random>

using namespace torus;

namespace {

RatVector point(std::initializer_list<Rational> xs) {
    RatVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index k = 0;
    for (auto& x : xs) v(k++) = x;
    return v;
}

// Open prism over the pair {i, j}: x_i + x_j = 1 with every coordinate positive.
bool on_open_prism(const RatVector& x) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (x(i) + x(j) == 1) return true;
    return false;
}

PluckerVector random_plane(std::mt19937& rng, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    for (;;) {
        PlaneMatrix m(5, 2);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 2; ++c) m(r, c) = Gaussian(Rational(d(rng)), Rational(d(rng)));
        try {
            return plucker_coordinates(m);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("moment values") {
    PluckerVector fixed(5, {{{1, 2}, Gaussian(1)}});
    CHECK(moment(fixed) == point({1, 1, 0, 0, 0}));
    PluckerVector two(5, {{{1, 2}, Gaussian(1)}, {{1, 3}, Gaussian(Rational(0), Rational(1))}});
    CHECK(moment(two) == point({1, Rational(1, 2), Rational(1, 2), 0, 0}));
    std::map<Pair, Gaussian> equal;
    for (auto& p : all_pairs(5)) equal[p] = Gaussian(1);
    Rational f(2, 5);
    CHECK(moment(PluckerVector(5, equal)) == point({f, f, f, f, f}));
}

TEST_CASE("differential rank and regular points") {
    std::map<Pair, Gaussian> generic;
    for (auto& p : all_pairs(5)) generic[p] = Gaussian(1);
    PluckerVector main(5, generic);
    CHECK(dmu_rank(main) == 4);
    CHECK(is_regular_point(main));
    PluckerVector fixed(5, {{{1, 2}, Gaussian(1)}});
    CHECK(dmu_rank(fixed) == 0);
    CHECK_FALSE(is_regular_point(fixed));
    auto prism = plucker_coordinates(representative({5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}}));
    CHECK(dmu_rank(prism) == 3);
    CHECK_FALSE(is_regular_point(prism));
}

TEST_CASE("moment is projective and equivariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_plane(rng, 2);
        CHECK(moment(p.scaled(Gaussian(Rational(3), Rational(-2)))) == moment(p));
        std::vector<int> image = {3, 1, 5, 2, 4};
        auto x = moment(p), y = moment(p.relabeled(image));
        for (int k = 0; k < 5; ++k) CHECK(y(image[k] - 1) == x(k));
        CHECK(relative_interior_contains(polytope_of({5, support(p)}), x));
    }
}

TEST_CASE("regular values") {
    Rational f(2, 5);
    // The barycenter has x_i + x_j = 4/5 for every pair, so it avoids every prism hyperplane.
    CHECK(is_regular_value(point({f, f, f, f, f})));
    CHECK_THROWS_AS(is_regular_value(point({Rational(9, 10), Rational(9, 10), Rational(1, 10), Rational(1, 10), 0})), Error);
    CHECK_FALSE(is_regular_value(point({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3)})));
    CHECK_THROWS_AS(is_regular_value(point({Rational(1, 2), Rational(1, 2), 1})), Error);
}

TEST_CASE("sampled regular values match the prism hyperplane oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 9);
    int checked = 0, singular = 0;
    while (checked < 200) {
        RatVector x(5);
        // Half the samples are forced onto a prism hyperplane.
        if (checked % 2 == 0) {
            Rational a(d(rng), 10);
            Rational b(d(rng), 20), c(d(rng), 20);
            Rational rest = 1 - b - c;
            x << a, 1 - a, b, c, rest;
        } else {
            for (int k = 0; k < 4; ++k) x(k) = Rational(d(rng), 20);
            x(4) = 2 - x(0) - x(1) - x(2) - x(3);
        }
        if (!in_open_hypersimplex(x)) continue;
        ++checked;
        bool oracle = on_open_prism(x);
        singular += oracle;
        CHECK(is_regular_value(x) == !oracle);
    }
    CHECK(singular > 50);
}
