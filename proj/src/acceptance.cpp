#include "torus/acceptance.hpp"

#include "torus/error.hpp"
#include "torus/homology.hpp"
#include "torus/moment.hpp"
#include "torus/params.hpp"
#include "torus/polytope.hpp"
#include "torus/strata.hpp"
#include "torus/symmetry.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace torus {

namespace {

// Collects failures; the first one becomes the detail line.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (first_.empty()) first_ = what;
    }
    bool pass() const { return failures_ == 0; }
    std::string detail(const std::string& summary) const {
        if (pass()) return summary + " (" + std::to_string(checks_) + " checks)";
        return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_;
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string census_text(const std::vector<int>& counts) {
    std::ostringstream os;
    for (size_t k = 0; k < counts.size(); ++k) os << (k ? "," : "") << counts[k];
    return os.str();
}

CriterionResult stratum_census() {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    auto sets = enumerate_admissible_sets(5);
    const double elapsed = seconds_since(start);
    t.expect(sets.size() == 171, "count " + std::to_string(sets.size()));
    t.expect(elapsed < 1.0, "enumeration took " + std::to_string(elapsed) + " s");
    std::map<PolytopeType, int> census;
    for (auto& s : sets) ++census[classify(polytope_of(s))];
    const std::vector<int> expected{1, 10, 15, 10, 5, 10, 30, 5, 15, 30, 30, 10};
    std::vector<int> got;
    for (auto type : all_polytope_types()) got.push_back(census[type]);
    t.expect(got == expected, "type census " + census_text(got));
    return {1, "stratum census", t.pass(), t.detail("171 strata, census " + census_text(got)), 0};
}

CriterionResult fundamental_strata() {
    Tally t;
    auto table = fundamental_table(5);
    t.expect(table.rows.size() == 13, "orbit count " + std::to_string(table.rows.size()));
    for (auto& row : table.rows) {
        const int expected_q = row.p == 3 || row.p == 4 || row.p == 6 ? 2 : 1;
        t.expect(row.q_p == expected_q, "q_" + std::to_string(row.p) + " = " + std::to_string(row.q_p));
    }
    const std::map<PolytopeType, long> stabilizer{
        {PolytopeType::Hypersimplex, 120}, {PolytopeType::K9, 12},       {PolytopeType::K8, 8},
        {PolytopeType::K7, 12},            {PolytopeType::Prism6, 12},   {PolytopeType::Octahedron, 24},
        {PolytopeType::Tetrahedron, 24},   {PolytopeType::Pyramid5, 4},  {PolytopeType::Square, 8},
        {PolytopeType::Edge, 4},           {PolytopeType::Vertex, 12},
    };
    std::vector<long> triangle_orbits;
    for (auto& row : table.rows) {
        if (row.type == PolytopeType::Triangle) {
            triangle_orbits.push_back(row.orbit_size);
            t.expect(row.orbit_size * row.stabilizer_order == 120, "triangle orbit-stabilizer");
            continue;
        }
        t.expect(row.stabilizer_order == stabilizer.at(row.type),
                 "stabilizer of " + tag(row.type) + " = " + std::to_string(row.stabilizer_order));
    }
    std::sort(triangle_orbits.begin(), triangle_orbits.end());
    t.expect(triangle_orbits == std::vector<long>{10, 20}, "triangle orbit sizes");
    return {2, "fundamental strata", t.pass(), t.detail("13 orbits, q3 = q4 = q6 = 2"), 0};
}

PlaneMatrix random_plane(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-1, 1);
    PlaneMatrix m(5, 2);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 2; ++c) m(r, c) = Gaussian(Rational(d(rng)), Rational(d(rng)));
    return m;
}

CriterionResult oracle_cross_check(unsigned seed) {
    Tally t;
    std::mt19937 rng(seed);
    int planes = 0;
    while (planes < 500) {
        PluckerVector p;
        try {
            p = plucker_coordinates(random_plane(rng));
        } catch (const Error&) {
            continue;
        }
        ++planes;
        const auto pairs = support(p);
        const bool admissible = is_admissible(5, pairs);
        t.expect(admissible, "inadmissible support");
        if (!admissible) continue;
        auto poly = polytope_of(AdmissibleSet{5, pairs});
        t.expect(relative_interior_contains(poly.vertices(), moment(p)), "moment outside the open polytope");
        t.expect(dmu_rank(p) == poly.affine_dim(), "differential rank differs from the polytope dimension");
    }
    return {3, "moment oracle cross-check", t.pass(), t.detail("500 random planes"), 0};
}

CriterionResult singular_loci(unsigned seed) {
    Tally t;
    const std::map<PolytopeType, int> expected{
        {PolytopeType::Hypersimplex, 10}, {PolytopeType::K9, 9},         {PolytopeType::K8, 4},
        {PolytopeType::K7, 1},            {PolytopeType::Octahedron, 6}, {PolytopeType::Pyramid5, 1},
        {PolytopeType::Prism6, 0},        {PolytopeType::Tetrahedron, 0},
    };
    for (auto& s : enumerate_admissible_sets(5)) {
        auto poly = polytope_of(s);
        auto it = expected.find(classify(poly));
        if (it == expected.end()) continue;
        t.expect(nonsimple_vertex_count(poly) == it->second, "nonsimple vertices of " + render(s));
    }
    std::vector<std::vector<WeightVector>> prisms;
    for (auto& pair : all_pairs(5)) {
        std::vector<WeightVector> vertices;
        for (auto& q : all_pairs(5))
            if (q.contains(pair.i) != q.contains(pair.j)) vertices.push_back(weight_vector(5, q));
        prisms.push_back(vertices);
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(1, 9);
    int sampled = 0;
    while (sampled < 200) {
        RatVector x(5);
        if (sampled % 2 == 0) {
            Rational a(d(rng), 10), b(d(rng), 20), c(d(rng), 20);
            x << a, 1 - a, b, c, 1 - b - c;
        } else {
            for (int k = 0; k < 4; ++k) x(k) = Rational(d(rng), 20);
            x(4) = 2 - x(0) - x(1) - x(2) - x(3);
        }
        if (!in_open_hypersimplex(x)) continue;
        ++sampled;
        bool on_prism = false;
        for (auto& prism : prisms) on_prism = on_prism || relative_interior_contains(prism, x);
        t.expect(is_regular_value(x) == !on_prism, "regular-value verdict disagrees with prism membership");
    }
    return {4, "singular loci", t.pass(), t.detail("nonsimple counts and 200 sampled values"), 0};
}

std::vector<AdmissibleSet> tabulated_sets() {
    std::vector<AdmissibleSet> out;
    for (auto& s : enumerate_admissible_sets(5)) {
        auto type = classify(polytope_of(s));
        if (type == PolytopeType::Hypersimplex || type == PolytopeType::K9 || type == PolytopeType::K8 ||
            type == PolytopeType::K7 || type == PolytopeType::Octahedron || type == PolytopeType::Prism6)
            out.push_back(s);
    }
    return out;
}

CriterionResult transition_calculus(unsigned seed) {
    Tally t;
    std::mt19937 rng(seed);
    for (int k = 0; k < 100; ++k) {
        auto triple = random_main_triple(rng);
        t.expect(transition({1, 2}, {1, 3}, triple) == transition_12_13_closed(triple),
                 "closed form differs at " + render(triple));
    }
    const auto charts = all_pairs(5);
    std::uniform_int_distribution<size_t> pick(0, charts.size() - 1);
    for (int k = 0; k < 20; ++k) {
        const Pair a = charts[pick(rng)], b = charts[pick(rng)], c = charts[pick(rng)];
        auto triple = random_main_triple(rng);
        t.expect(transition(b, c, transition(a, b, triple)) == transition(a, c, triple),
                 "cocycle law fails for charts " + render(a) + ", " + render(b) + ", " + render(c));
    }
    int families = 0;
    for (auto& s : tabulated_sets()) {
        VirtualFamily here, there;
        try {
            here = virtual_space(s, {1, 2});
            there = virtual_space(s, {1, 3});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Unsupported) continue;
            throw;
        }
        ++families;
        for (auto& u : here.sample(rng, 25))
            t.expect(there.contains(tilde_transition_12_13(u)), "image leaves the virtual space of " + render(s));
        for (auto& u : there.sample(rng, 25))
            t.expect(here.contains(tilde_transition({1, 3}, {1, 2}, u)), "preimage leaves the virtual space of " + render(s));
    }
    t.expect(families > 0, "no tabulated families");
    return {5, "transition calculus", t.pass(), t.detail(std::to_string(families) + " families"), 0};
}

CriterionResult embedding_identities(unsigned seed) {
    Tally t;
    std::mt19937 rng(seed);
    for (int k = 0; k < 100; ++k) {
        auto triple = random_main_triple(rng);
        t.expect(embed_five(representative_of_params({1, 2}, triple)).valid, "main-stratum point " + render(triple));
    }
    int families = 0;
    for (auto& s : tabulated_sets()) {
        if (classify(polytope_of(s)) == PolytopeType::Hypersimplex) continue;
        ++families;
        for (auto& u : virtual_space(s).sample(rng, 10))
            t.expect(satisfies_embedding_equations(five_of_chart({1, 2}, u)), "virtual family of " + render(s));
    }
    const int chi = euler_characteristic_universal();
    t.expect(chi == 7, "euler characteristic " + std::to_string(chi));
    return {6, "embedding identities", t.pass(), t.detail(std::to_string(families) + " virtual families, chi = 7"), 0};
}

void expect_profile(Tally& t, const std::string& label, const HomologyProfile& got, const std::string& want) {
    const auto expected = parse_profile(got.coefficients, want);
    t.expect(got == expected, label + " = " + got.render() + ", expected " + expected.render());
}

CriterionResult stagewise_homology() {
    Tally t;
    const auto Z = Coefficients::Integers;
    auto start = std::chrono::steady_clock::now();
    expect_profile(t, "V1", stage_homology(Stage::V1, Z), "Z@0 Z@3 Z^5@5");
    expect_profile(t, "L1", stage_homology(Stage::L1, Z), "Z@0 Z^10@3");
    expect_profile(t, "L2", stage_homology(Stage::L2, Z), "Z@0 Z^15@4");
    expect_profile(t, "V21 mod 2", stage_homology(Stage::V21, Coefficients::Mod2), "Z2@0 Z2@4 Z2^6@5 Z2^10@6");
    expect_profile(t, "V2", stage_homology(Stage::V2, Z), "Z@0 Z^6+Z/2@5 Z^5@6");
    const double elapsed = seconds_since(start);
    t.expect(elapsed < 10.0, "stagewise runtime " + std::to_string(elapsed) + " s");
    return {7, "stagewise homology", t.pass(), t.detail("V1, L1, L2, V21, V2"), 0};
}

CriterionResult final_homology() {
    Tally t;
    expect_profile(t, "G(5,2)/T", orbit_space_homology(5, Coefficients::Integers), "Z@0 Z/2@5 Z@8");
    expect_profile(t, "G(5,2)/T mod 2", orbit_space_homology(5, Coefficients::Mod2), "Z2@0 Z2@5 Z2@6 Z2@8");
    expect_profile(t, "G(4,2)/T", orbit_space_homology(4, Coefficients::Integers), "Z@0 Z@5");
    const auto x = quotient_by_g42_homology();
    expect_profile(t, "X", x, "Z@0 Z@6 Z@8");
    t.expect(x == join_comparator_homology(), "X differs from the join S^3 * CP^2");
    return {8, "final homology", t.pass(), t.detail("orbit spaces for n = 4, 5 and the quotient X"), 0};
}

// Z/2 dimension predicted from an integral profile.
long predicted_mod2(const HomologyProfile& integral, int d) {
    auto even = [&](int k) {
        long count = 0;
        if (k < 0) return count;
        for (auto& t : integral.at(k).torsion) count += t % 2 == 0;
        return count;
    };
    return static_cast<long>(integral.at(d).rank) + even(d) + even(d - 1);
}

CriterionResult property_suite() {
    Tally t;
    using Space = std::function<HomologyProfile(Coefficients)>;
    std::vector<std::pair<std::string, Space>> spaces;
    for (Stage s : {Stage::V1, Stage::L1, Stage::L2, Stage::V21_rel_L2, Stage::V21, Stage::V32, Stage::V2, Stage::V3}) {
        const ChainComplex c = curated_complex(s);
        for (int d = 2; d <= c.top_dimension(); ++d) {
            IntMatrix product = c.boundary(d - 1) * c.boundary(d);
            t.expect(product.isZero(), "boundary squares to nonzero on " + render(s) + " in degree " + std::to_string(d));
        }
        spaces.emplace_back(render(s), [c](Coefficients k) { return homology(c, k); });
    }
    spaces.emplace_back("G(4,2)/T", [](Coefficients k) { return orbit_space_homology(4, k); });
    spaces.emplace_back("G(5,2)/T", [](Coefficients k) { return orbit_space_homology(5, k); });
    spaces.emplace_back("X", [](Coefficients k) { return quotient_by_g42_homology(k); });
    spaces.emplace_back("S^3 * CP^2", [](Coefficients k) { return join_comparator_homology(k); });
    for (auto& [name, space] : spaces) {
        const auto integral = space(Coefficients::Integers), mod2 = space(Coefficients::Mod2);
        for (int d = 0; d <= std::max(integral.top_degree(), mod2.top_degree()) + 1; ++d)
            t.expect(static_cast<long>(mod2.at(d).rank) == predicted_mod2(integral, d),
                     "universal coefficients on " + name + " in degree " + std::to_string(d));
    }
    for (int n : {4, 5}) {
        const auto h = orbit_space_homology(n, Coefficients::Integers);
        t.expect(h.top_degree() == 3 * n - 7 && h.at(3 * n - 7) == free_group(1),
                 "top class for n = " + std::to_string(n));
    }
    return {9, "property suite", t.pass(), t.detail(std::to_string(spaces.size()) + " spaces"), 0};
}

}  // namespace

CriterionResult run_criterion(int id, unsigned seed) {
    if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::OutOfRange, "criterion " + std::to_string(id) + " does not exist");
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = stratum_census(); break;
            case 2: r = fundamental_strata(); break;
            case 3: r = oracle_cross_check(seed); break;
            case 4: r = singular_loci(seed); break;
            case 5: r = transition_calculus(seed); break;
            case 6: r = embedding_identities(seed); break;
            case 7: r = stagewise_homology(); break;
            case 8: r = final_homology(); break;
            case 9: r = property_suite(); break;
        }
    } catch (const Error& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0};
    }
    r.seconds = seconds_since(start);
    return r;
}

std::vector<CriterionResult> run_acceptance(unsigned seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

}  // namespace torus
