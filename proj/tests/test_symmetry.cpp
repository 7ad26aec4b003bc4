#include "doctest.h"
#include "torus/symmetry.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace torus;

namespace {

AdmissibleSet set_of(int n, std::initializer_list<Pair> pairs) { return {n, {pairs.begin(), pairs.end()}}; }

// Stabilizer order by brute force over all n! permutations.
long brute_stabilizer(const AdmissibleSet& s) {
    Permutation perm = identity_permutation(s.n);
    long count = 0;
    do {
        AdmissibleSet image{s.n, {}};
        for (auto& p : s.pairs) image.pairs.emplace(perm[p.i - 1], perm[p.j - 1]);
        count += image.pairs == s.pairs;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("action on pair sets") {
    auto k45 = full_set(5);
    k45.pairs.erase({4, 5});
    CHECK(act(identity_permutation(5), k45) == k45);
    CHECK(act({1, 2, 3, 5, 4}, k45) == k45);
    CHECK(act({2, 3, 1, 4, 5}, set_of(5, {{1, 2}})) == set_of(5, {{2, 3}}));
}

TEST_CASE("action preserves admissibility, size and type") {
    std::mt19937 rng(7);
    auto all = enumerate_admissible_sets(5);
    Permutation s = identity_permutation(5);
    for (auto& sigma : all) {
        std::shuffle(s.begin(), s.end(), rng);
        auto image = act(s, sigma);
        CHECK(is_admissible(5, image.pairs));
        CHECK(image.pairs.size() == sigma.pairs.size());
        CHECK(classify(polytope_of(image)) == classify(polytope_of(sigma)));
    }
}

TEST_CASE("orbits and stabilizers for n = 5") {
    auto orbits = orbit_partition(5);
    CHECK(orbits.size() == 13);
    size_t covered = 0;
    std::multimap<PolytopeType, std::pair<long, long>> by_type;  // type -> (orbit size, stabilizer)
    for (auto& o : orbits) {
        covered += o.members.size();
        CHECK(o.members.size() * o.stabilizer_order == 120);
        CHECK(o.stabilizer_order == brute_stabilizer(o.members.front()));
        by_type.insert({classify(polytope_of(o.members.front())), {static_cast<long>(o.members.size()), o.stabilizer_order}});
    }
    CHECK(covered == 171);
    std::map<PolytopeType, long> stabilizer = {
        {PolytopeType::Hypersimplex, 120}, {PolytopeType::K9, 12},         {PolytopeType::K8, 8},
        {PolytopeType::K7, 12},            {PolytopeType::Prism6, 12},     {PolytopeType::Octahedron, 24},
        {PolytopeType::Tetrahedron, 24},   {PolytopeType::Pyramid5, 4},    {PolytopeType::Square, 8},
        {PolytopeType::Edge, 4},           {PolytopeType::Vertex, 12},
    };
    for (auto& [type, sizes] : by_type) {
        if (type == PolytopeType::Triangle) continue;
        CHECK_MESSAGE(sizes.second == stabilizer[type], tag(type));
    }
    std::vector<long> triangle_orbits;
    for (auto [it, end] = by_type.equal_range(PolytopeType::Triangle); it != end; ++it) triangle_orbits.push_back(it->second.first);
    std::sort(triangle_orbits.begin(), triangle_orbits.end());
    CHECK(triangle_orbits == std::vector<long>{10, 20});
    CHECK(by_type.find(PolytopeType::K9)->second.first == 10);
}

TEST_CASE("fundamental table") {
    auto table = fundamental_table(5);
    CHECK(table.rows.size() == 13);
    std::map<int, int> q, m;
    for (auto& r : table.rows) {
        q[r.p] = r.q_p;
        m[r.p] = r.m_p;
    }
    std::map<int, int> expected_q = {{10, 1}, {9, 1}, {8, 1}, {7, 1}, {6, 2}, {5, 1}, {4, 2}, {3, 2}, {2, 1}, {1, 1}};
    CHECK(q == expected_q);
    std::map<int, int> expected_m = {{10, 1}, {9, 10}, {8, 15}, {7, 10}, {6, 15}, {5, 30}, {4, 20}, {3, 30}, {2, 30}, {1, 10}};
    CHECK(m == expected_m);
    // Orbit-stabilizer summed per p reproduces m_p.
    std::map<int, long> sum;
    for (auto& r : table.rows) sum[r.p] += 120 / r.stabilizer_order;
    for (auto& [p, total] : sum) CHECK(total == m[p]);

    auto tsv = table.tsv();
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 14);
    CHECK(tsv.rfind("p\tm_p\tq_p\tgenerator\n", 0) == 0);
}
