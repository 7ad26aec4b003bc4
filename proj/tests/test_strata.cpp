#include "doctest.h"
#include "torus/error.hpp"
#include "torus/strata.hpp"

#include <random>

using namespace torus;

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long bell(int n) {
    // Bell triangle.
    std::vector<long long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next{row.back()};
        for (long long x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

long long census_formula(int n) {
    long long total = 0;
    for (int z = 0; z <= n - 2; ++z) total += binomial(n, z) * (bell(n - z) - 1);
    return total;
}

AdmissibleSet set_of(int n, std::initializer_list<Pair> pairs) { return {n, {pairs.begin(), pairs.end()}}; }

PlaneMatrix rows_of(std::initializer_list<std::pair<int, int>> rows) {
    std::vector<std::pair<Gaussian, Gaussian>> v;
    for (auto& [a, b] : rows) v.push_back({Gaussian(a), Gaussian(b)});
    return make_plane(v);
}

}  // namespace

TEST_CASE("stratum counts") {
    CHECK(enumerate_admissible_sets(5).size() == 171);
    CHECK(enumerate_admissible_sets(3).size() == 7);
    CHECK(enumerate_admissible_sets(4).size() == 36);
    for (int n = 3; n <= 7; ++n) CHECK(static_cast<long long>(enumerate_admissible_sets(n).size()) == census_formula(n));
    CHECK_THROWS_AS(enumerate_admissible_sets(2), Error);
    CHECK_THROWS_AS(enumerate_admissible_sets(8), Error);
}

TEST_CASE("enumeration is duplicate free and sorted") {
    auto all = enumerate_admissible_sets(5);
    for (size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1].pairs != all[k].pairs);
    std::set<std::set<Pair>> distinct;
    for (auto& s : all) distinct.insert(s.pairs);
    CHECK(distinct.size() == all.size());
}

TEST_CASE("sampled supports reach every stratum of G(4,2)") {
    // Rows drawn from {0, (1,0), (0,1), (1,1)}: enough directions to realize every configuration with <= 3 blocks,
    // and G(4,2) configurations have at most 4 blocks, so a fifth direction is added.
    std::vector<std::pair<int, int>> choices = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}};
    std::set<std::set<Pair>> seen;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 4000; ++trial) {
        PlaneMatrix m(4, 2);
        for (int r = 0; r < 4; ++r) {
            auto [a, b] = choices[pick(rng)];
            m(r, 0) = Gaussian(a);
            m(r, 1) = Gaussian(b);
        }
        try {
            auto s = support(plucker_coordinates(m));
            CHECK(is_admissible(4, s));
            seen.insert(s);
        } catch (const Error&) {
        }
    }
    CHECK(seen.size() == 36);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(5, full_set(5).pairs));
    CHECK_FALSE(is_admissible(5, set_of(5, {{1, 2}, {3, 4}}).pairs));
    auto k45 = full_set(5);
    k45.pairs.erase({4, 5});
    CHECK(is_admissible(5, k45.pairs));
    CHECK_FALSE(is_admissible(5, {}));
}

TEST_CASE("representatives") {
    auto generic = representative(full_set(5));
    CHECK(generic == rows_of({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}}));

    // The fixed point is the coordinate plane spanned by e1, e2.
    auto fixed = plucker_coordinates(representative(set_of(5, {{1, 2}})));
    CHECK(fixed == plucker_coordinates(rows_of({{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}})));

    auto blocks = set_of(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(representative(blocks) == rows_of({{1, 0}, {1, 1}, {1, 2}, {1, 2}, {1, 2}}));
    CHECK_THROWS_AS(representative(set_of(5, {{1, 2}, {3, 4}})), Error);

    for (int n = 3; n <= 6; ++n)
        for (auto& s : enumerate_admissible_sets(n)) CHECK(support(plucker_coordinates(representative(s))) == s.pairs);
}

TEST_CASE("random planes have admissible supports") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-1, 1);
    int checked = 0;
    while (checked < 500) {
        PlaneMatrix m(5, 2);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 2; ++c) m(r, c) = Gaussian(Rational(d(rng)), Rational(d(rng)));
        try {
            CHECK(is_admissible(5, support(plucker_coordinates(m))));
            ++checked;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("stabilizer dimension and defect") {
    CHECK(stabilizer_dim(full_set(5)) == 1);
    CHECK(defect(full_set(5)) == 0);
    CHECK(stabilizer_dim(set_of(5, {{1, 2}})) == 5);
    CHECK(defect(set_of(5, {{1, 2}})) == 4);
    auto prism = set_of(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(defect(prism) == 1);
    for (auto& s : enumerate_admissible_sets(5)) {
        auto rec = stratum_record(s);
        CHECK(rec.stabilizer_dim == 5 - rec.polytope_dim);
        CHECK(rec.defect == rec.stabilizer_dim - 1);
        CHECK((rec.defect == 0) == (rec.polytope_dim == 4));
        auto c = configuration_of(s);
        REQUIRE(c);
        // Oracle: a plane with b blocks and z zero rows spans a polytope of dim n-1-z (b >= 3) or n-2-z (b = 2).
        int z = static_cast<int>(c->zero_rows.size());
        int expected = c->blocks.size() >= 3 ? 4 - z : 3 - z;
        CHECK(rec.polytope_dim == expected);
    }
}
