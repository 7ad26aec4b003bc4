#include "doctest.h"
#include "torus/error.hpp"
#include "torus/params.hpp"

#include <functional>
#include <map>

using namespace torus;

namespace {

using Formula = std::function<FiveCoords(const P1&)>;

P1 g(long a, long b) { return P1(a, b); }

// Embedded curves in (CP^1)^5 for chart 12 (reference lists).
std::map<Pair, Formula> reference_curves() {
    auto sub = [](const P1& c) { return c.a - c.b; };
    return {
        {{1, 3}, [](const P1& c) { return FiveCoords{g(0, 1), g(0, 1), c, g(1, 1), c.reversed()}; }},
        {{1, 4}, [=](const P1& c) { return FiveCoords{g(1, 0), c, g(0, 1), g(0, 1), P1(sub(c), c.a)}; }},
        {{1, 5}, [=](const P1& c) { return FiveCoords{c, g(1, 0), g(1, 0), g(1, 0), P1(c.a, sub(c))}; }},
        {{2, 3}, [](const P1& c) { return FiveCoords{g(1, 0), g(1, 0), c, c, g(1, 1)}; }},
        {{2, 4}, [=](const P1& c) { return FiveCoords{g(0, 1), c, g(1, 0), P1(-sub(c), c.b), g(0, 1)}; }},
        {{2, 5}, [=](const P1& c) { return FiveCoords{c, g(0, 1), g(0, 1), P1(c.b, -sub(c)), g(1, 0)}; }},
        {{3, 4}, [](const P1& c) { return FiveCoords{g(1, 1), c, c, g(1, 0), g(1, 0)}; }},
        {{3, 5}, [](const P1& c) { return FiveCoords{c, g(1, 1), c.reversed(), g(0, 1), g(0, 1)}; }},
        {{1, 2}, [](const P1& c) { return FiveCoords{g(1, 1), g(1, 1), g(1, 1), c, c}; }},
        {{4, 5}, [](const P1& c) { return FiveCoords{c, c, g(1, 1), g(1, 1), g(1, 1)}; }},
    };
}

std::map<std::pair<Pair, Pair>, FiveCoords> reference_points() {
    return {
        {{{1, 4}, {2, 3}}, {g(1, 0), g(1, 0), g(0, 1), g(0, 1), g(1, 1)}},
        {{{1, 3}, {2, 4}}, {g(0, 1), g(0, 1), g(1, 0), g(1, 1), g(0, 1)}},
        {{{1, 5}, {2, 4}}, {g(0, 1), g(1, 0), g(1, 0), g(1, 0), g(0, 1)}},
        {{{2, 3}, {4, 5}}, {g(1, 0), g(1, 0), g(1, 1), g(1, 1), g(1, 1)}},
        {{{2, 4}, {3, 5}}, {g(0, 1), g(1, 1), g(1, 0), g(0, 1), g(0, 1)}},
        {{{2, 5}, {3, 4}}, {g(1, 1), g(0, 1), g(0, 1), g(1, 0), g(1, 0)}},
        {{{1, 5}, {2, 3}}, {g(1, 0), g(1, 0), g(1, 0), g(1, 0), g(1, 1)}},
        {{{1, 3}, {2, 5}}, {g(0, 1), g(0, 1), g(0, 1), g(1, 1), g(1, 0)}},
        {{{1, 4}, {2, 5}}, {g(1, 0), g(0, 1), g(0, 1), g(0, 1), g(1, 0)}},
        {{{1, 3}, {4, 5}}, {g(0, 1), g(0, 1), g(1, 1), g(1, 1), g(1, 1)}},
        {{{1, 4}, {3, 5}}, {g(1, 0), g(1, 1), g(0, 1), g(0, 1), g(0, 1)}},
        {{{1, 5}, {3, 4}}, {g(1, 1), g(1, 0), g(1, 0), g(1, 0), g(1, 0)}},
        {{{1, 2}, {3, 4}}, {g(1, 1), g(1, 1), g(1, 1), g(1, 0), g(1, 0)}},
        {{{1, 2}, {3, 5}}, {g(1, 1), g(1, 1), g(1, 1), g(0, 1), g(0, 1)}},
        {{{1, 2}, {4, 5}}, {g(1, 1), g(1, 1), g(1, 1), g(1, 1), g(1, 1)}},
    };
}

// True when some parameter value puts e on the reference curve.
bool on_reference_curve(const Formula& f, const FiveCoords& e, bool punctured) {
    // Every reference curve has a coordinate equal to c or its reverse; try each reading.
    for (int k = 0; k < 5; ++k)
        for (bool swap : {false, true}) {
            P1 c = swap ? e[k].reversed() : e[k];
            if (punctured && c.in_A()) continue;
            try {
                if (f(c) == e) return true;
            } catch (const Error&) {
            }
        }
    return false;
}

AdmissibleSet all_but(std::initializer_list<Pair> missing) {
    AdmissibleSet s = full_set(5);
    for (auto& p : missing) s.pairs.erase(p);
    return s;
}

AdmissibleSet pyramid(const Pair& apex) {
    AdmissibleSet s{5, {}};
    for (auto& p : all_pairs(5))
        if (p.contains(apex.i) || p.contains(apex.j)) s.pairs.insert(p);
    return s;
}

std::vector<AdmissibleSet> tabulated_sets() {
    std::vector<AdmissibleSet> out;
    for (auto& s : enumerate_admissible_sets(5)) {
        auto t = classify(polytope_of(s));
        if (t == PolytopeType::Hypersimplex || t == PolytopeType::K9 || t == PolytopeType::K8 || t == PolytopeType::K7 ||
            t == PolytopeType::Octahedron || t == PolytopeType::Prism6)
            out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("chart parameters") {
    ChartCoords z = {Gaussian(1), Gaussian(1), Gaussian(1), Gaussian(1), Gaussian(2), Gaussian(3)};
    auto t = chart_params({1, 2}, z);
    CHECK(t[0] == g(2, 1));
    CHECK(t[1] == g(3, 1));
    CHECK(t[2] == g(3, 2));
    CHECK(t.satisfies_cubic());
    ChartCoords flat = {Gaussian(1), Gaussian(2), Gaussian(1), Gaussian(1), Gaussian(2), Gaussian(3)};
    CHECK_THROWS_AS(chart_params({1, 2}, flat), Error);
    ChartCoords ones;
    ones.fill(Gaussian(1));
    CHECK_THROWS_AS(chart_params({1, 2}, ones), Error);
}

TEST_CASE("representatives invert chart parameters") {
    ParamTriple t{{g(2, 1), g(3, 1), g(3, 2)}};
    CHECK(chart_params({1, 2}, representative_of_params({1, 2}, t)) == t);
    CHECK_THROWS_AS(representative_of_params({1, 2}, ParamTriple{{g(2, 1), g(3, 1), g(5, 1)}}), Error);
    CHECK_THROWS_AS(representative_of_params({1, 2}, ParamTriple{{g(1, 1), g(3, 1), g(3, 1)}}), Error);
    std::mt19937 rng(7);
    for (auto& chart : all_pairs(5))
        for (int k = 0; k < 10; ++k) {
            auto r = random_main_triple(rng);
            auto p = representative_of_params(chart, r);
            CHECK(support(p).size() == 10);
            CHECK(chart_params(chart, p) == r);
        }
}

TEST_CASE("chart coordinates agree with relabeling to chart 12") {
    std::mt19937 rng(3);
    for (auto& chart : all_pairs(5)) {
        auto p = representative_of_params({1, 2}, random_main_triple(rng));
        CHECK(chart_params(chart, p) == chart_params({1, 2}, p.relabeled(chart_relabeling(chart))));
    }
}

TEST_CASE("closed-form transition and cocycle law") {
    std::mt19937 rng(7);
    for (int k = 0; k < 100; ++k) {
        auto t = random_main_triple(rng);
        CHECK(transition({1, 2}, {1, 3}, t) == transition_12_13_closed(t));
        CHECK(transition({1, 2}, {1, 2}, t) == t);
    }
    auto charts = all_pairs(5);
    for (auto& a : charts)
        for (auto& b : charts)
            for (auto& c : charts) {
                auto t = random_main_triple(rng);
                auto step = transition(b, c, transition(a, b, t));
                CHECK(step == transition(a, c, t));
                CHECK(step.satisfies_cubic());
            }
}

TEST_CASE("blowup lift and blowdown") {
    ParamTriple t{{g(1, 2), g(1, 3), g(0, 1)}};
    t.c[2] = P1(t[0].b * t[1].a, t[0].a * t[1].b);
    CHECK(lift_to_blowup(t) == UniversalParamPoint::regular(t));
    CHECK(blowdown(lift_to_blowup(t)) == t);
    CHECK(blowdown(UniversalParamPoint::divisor(g(0, 1))) == center_triple());
    CHECK_THROWS_AS(lift_to_blowup(center_triple()), Error);
    CHECK(lift_to_blowup(center_triple(), g(2, 3)) == UniversalParamPoint::divisor(g(2, 3)));

    // Along c1' = 1 - a e, c2' = 1 - b e the blowup coordinate is (a : b) for every e, and the triple tends to the center.
    for (auto [a, b] : {std::pair{1L, 2L}, {3L, -1L}, {0L, 1L}, {1L, 0L}}) {
        for (long k = 2; k < 40; k *= 2) {
            Rational e(1, k);
            P1 c1(Gaussian(1), Gaussian(1 - a * e)), c2(Gaussian(1), Gaussian(1 - b * e));
            ParamTriple near{{c1, c2, P1(c1.b * c2.a, c1.a * c2.b)}};
            if (near.is_center()) continue;
            CHECK(blowup_coordinate(UniversalParamPoint::regular(near)) == P1(a, b));
        }
        CHECK(blowup_coordinate(UniversalParamPoint::divisor(P1(a, b))) == P1(a, b));
    }
}

TEST_CASE("five coordinates") {
    std::mt19937 rng(7);
    for (int k = 0; k < 100; ++k) {
        auto t = random_main_triple(rng);
        auto p = representative_of_params({1, 2}, t);
        auto direct = embed_five(p);
        CHECK(direct.valid);
        CHECK(embed_five(t).coords == direct.coords);
        CHECK(embed_five(p.scaled(Gaussian(Rational(2), Rational(5)))).coords == direct.coords);
        for (auto& chart : all_pairs(5)) {
            auto q = representative_of_params(chart, t);
            CHECK(five_of_chart(chart, UniversalParamPoint::regular(t)) == five_coordinates(q));
        }
        // Relabeling the five coordinates matches relabeling the plane.
        std::vector<int> image = {2, 5, 1, 4, 3};
        CHECK(relabel_five(direct.coords, image) == five_coordinates(p.relabeled(image)));
    }
    CHECK_THROWS_AS(embed_five(ParamTriple{{g(1, 0), g(1, 0), g(2, 1)}}), Error);
}

TEST_CASE("cross-ratio symmetries") {
    std::mt19937 rng(5);
    auto e = embed_five(representative_of_params({1, 2}, random_main_triple(rng))).coords;
    CHECK(cross_ratio(e, 1, 2, 3, 4) == e[0]);
    CHECK(cross_ratio(e, 2, 3, 4, 5) == e[4]);
    CHECK(cross_ratio(e, 2, 1, 3, 4) == cross_ratio(e, 1, 2, 3, 4).reversed());
    CHECK(cross_ratio(e, 3, 4, 1, 2) == cross_ratio(e, 1, 2, 3, 4));
}

TEST_CASE("tilde transition") {
    CHECK(tilde_transition_12_13(UniversalParamPoint::divisor(g(2, 5))) ==
          UniversalParamPoint::regular({{g(1, 0), g(1, 0), g(2, 5)}}));
    std::mt19937 rng(7);
    for (int k = 0; k < 25; ++k) {
        P1 c2 = random_p1(rng, true);
        auto u = UniversalParamPoint::regular({{g(1, 0), c2, g(0, 1)}});
        P1 image(c2.a, c2.a - c2.b);
        CHECK(tilde_transition_12_13(u) == UniversalParamPoint::regular({{g(1, 1), image, image}}));
    }
    for (int k = 0; k < 50; ++k) {
        auto t = random_main_triple(rng);
        CHECK(tilde_transition_12_13(UniversalParamPoint::regular(t)) == UniversalParamPoint::regular(transition({1, 2}, {1, 3}, t)));
    }
    // Bijectivity on boundary samples of every tabulated family.
    for (auto& s : tabulated_sets())
        for (auto& u : virtual_space(s).sample(rng, 6)) {
            CHECK(chart_of_five({1, 2}, five_of_chart({1, 2}, u)) == u);
            for (auto& chart : all_pairs(5)) CHECK(tilde_transition(chart, {1, 2}, tilde_transition({1, 2}, chart, u)) == u);
        }
}

TEST_CASE("virtual space tables") {
    auto k34 = virtual_space(all_but({{3, 4}}));
    CHECK(k34.contains(UniversalParamPoint::regular({{g(1, 1), g(2, 3), g(2, 3)}})));
    CHECK_FALSE(k34.contains(UniversalParamPoint::regular({{g(1, 1), g(1, 0), g(1, 0)}})));
    auto k13 = virtual_space(all_but({{1, 3}}));
    CHECK(k13.contains(UniversalParamPoint::regular({{g(1, 0), g(1, 0), g(4, 7)}})));
    CHECK(virtual_space(all_but({{1, 2}})).contains(UniversalParamPoint::divisor(g(3, 1))));
    CHECK(virtual_space(all_but({{1, 2}, {4, 5}})).contains(UniversalParamPoint::divisor(g(1, 1))));
    auto k12_7 = virtual_space(pyramid({1, 2}));
    CHECK(k12_7.contains(UniversalParamPoint::divisor(g(1, 1))));
    CHECK(k12_7.contains(UniversalParamPoint::divisor(g(0, 1))));
    AdmissibleSet o3{5, {}};
    for (auto& p : all_pairs(5))
        if (!p.contains(3)) o3.pairs.insert(p);
    auto oct = virtual_space(o3);
    CHECK(oct.contains(UniversalParamPoint::regular({{g(1, 0), g(1, 0), g(5, 2)}})));
    CHECK_FALSE(oct.contains(UniversalParamPoint::regular({{g(1, 0), g(1, 0), g(0, 1)}})));
    CHECK_THROWS_AS(virtual_space({5, {{1, 2}}}), Error);
}

TEST_CASE("virtual spaces correspond under chart transitions") {
    std::mt19937 rng(7);
    int checked = 0;
    for (auto& s : tabulated_sets())
        for (auto& chart : all_pairs(5)) {
            auto here = virtual_space(s, {1, 2}), there = virtual_space(s, chart);
            for (auto& u : here.sample(rng, 8)) {
                CHECK_MESSAGE(there.contains(tilde_transition({1, 2}, chart, u)), render(s) << " " << render(chart) << " " << render(u));
                ++checked;
            }
            for (auto& u : there.sample(rng, 8)) CHECK(here.contains(tilde_transition(chart, {1, 2}, u)));
        }
    CHECK(checked > 1000);
}

TEST_CASE("embedded virtual families match the reference lists") {
    std::mt19937 rng(7);
    auto curves = reference_curves();
    for (auto& [pair, formula] : curves) {
        for (auto& u : virtual_space(all_but({pair})).sample(rng, 20)) {
            auto e = five_of_chart({1, 2}, u);
            CHECK(satisfies_embedding_equations(e));
            CHECK_MESSAGE(on_reference_curve(formula, e, true), "K9 " << render(pair));
        }
        for (auto& u : virtual_space(pyramid(pair)).sample(rng, 20)) {
            auto e = five_of_chart({1, 2}, u);
            CHECK(satisfies_embedding_equations(e));
            CHECK_MESSAGE(on_reference_curve(formula, e, false), "K7 " << render(pair));
        }
    }
    for (auto& [pairs, expected] : reference_points()) {
        auto family = virtual_space(all_but({pairs.first, pairs.second}));
        REQUIRE(family.pieces.size() == 1);
        auto e = five_of_chart({1, 2}, family.pieces[0].point);
        CHECK(satisfies_embedding_equations(e));
        CHECK(e == expected);
    }
    for (int k = 0; k < 100; ++k) CHECK(embed_five(representative_of_params({1, 2}, random_main_triple(rng))).valid);
}

TEST_CASE("stratum parameters lie in their virtual spaces") {
    // Planes of W_sigma for K_kl(9): rows k and l share a direction, all other directions distinct.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (auto& missing : all_pairs(5)) {
        if (missing == Pair(1, 2)) continue;
        auto sigma = all_but({missing});
        auto family = virtual_space(sigma);
        int hits = 0;
        while (hits < 10) {
            PlaneMatrix m(5, 2);
            for (int r = 0; r < 5; ++r) m.row(r) << Gaussian(Rational(d(rng)), Rational(d(rng))), Gaussian(Rational(d(rng)));
            m.row(missing.j - 1) = m.row(missing.i - 1) * Gaussian(Rational(d(rng) == 0 ? 2 : 3));
            PluckerVector p;
            try { p = plucker_coordinates(m); } catch (const Error&) { continue; }
            if (support(p) != sigma.pairs) continue;
            CHECK(family.contains(UniversalParamPoint::regular(stratum_params({1, 2}, p))));
            ++hits;
        }
    }
}

TEST_CASE("euler characteristic") { CHECK(euler_characteristic_universal() == 7); }
