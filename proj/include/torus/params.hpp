#pragma once

#include "torus/polytope.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace torus {

struct ProjectivePoint1 {
    Gaussian a{1};
    Gaussian b{0};

    ProjectivePoint1() = default;
    ProjectivePoint1(Gaussian first, Gaussian second);
    ProjectivePoint1(long first, long second) : ProjectivePoint1(Gaussian(first), Gaussian(second)) {}

    // A = {(1:0), (0:1), (1:1)}.
    bool in_A() const { return a.is_zero() || b.is_zero() || a == b; }
    ProjectivePoint1 reversed() const { return {b, a}; }
    friend bool operator==(const ProjectivePoint1& x, const ProjectivePoint1& y) { return x.a * y.b == x.b * y.a; }
};
using P1 = ProjectivePoint1;

std::string render(const P1& x);
P1 parse_p1(const std::string& text);  // "(a:b)"
inline std::ostream& operator<<(std::ostream& os, const P1& x) { return os << render(x); }

struct ParamTriple {
    std::array<P1, 3> c;

    const P1& operator[](int k) const { return c[k]; }
    bool satisfies_cubic() const;
    bool is_center() const;
    bool nondegenerate() const;  // every coordinate outside A
    friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

ParamTriple center_triple();

class UniversalParamPoint {
public:
    enum class Kind { Regular, Divisor };

    static UniversalParamPoint regular(const ParamTriple& t);  // rejects the center and off-cubic triples
    static UniversalParamPoint divisor(const P1& direction);

    Kind kind() const { return kind_; }
    bool is_divisor() const { return kind_ == Kind::Divisor; }
    const ParamTriple& triple() const { return triple_; }  // the center for divisor points
    const P1& direction() const { return direction_; }

    friend bool operator==(const UniversalParamPoint& x, const UniversalParamPoint& y);

private:
    Kind kind_ = Kind::Divisor;
    ParamTriple triple_ = center_triple();
    P1 direction_;
};

std::string render(const ParamTriple& t);
std::string render(const UniversalParamPoint& u);
inline std::ostream& operator<<(std::ostream& os, const ParamTriple& t) { return os << render(t); }
inline std::ostream& operator<<(std::ostream& os, const UniversalParamPoint& u) { return os << render(u); }

// Chart M_ij: rows i, j of the plane matrix are (1,0), (0,1); for the remaining rows p < q < s
// the coordinates are z = (a_p1, a_q1, a_s1, a_p2, a_q2, a_s2).
using ChartCoords = std::array<Gaussian, 6>;

// Relabeling that sends i -> 1, j -> 2 and the remaining indices in order to 3, 4, 5.
std::vector<int> chart_relabeling(const Pair& chart);

ChartCoords chart_coordinates(const Pair& chart, const PluckerVector& p);
ParamTriple chart_params(const Pair& chart, const ChartCoords& z);
ParamTriple chart_params(const Pair& chart, const PluckerVector& p);
// The three ratios without the main-stratum requirement; each must be defined.
ParamTriple stratum_params(const Pair& chart, const PluckerVector& p);
PluckerVector representative_of_params(const Pair& chart, const ParamTriple& t);

ParamTriple transition(const Pair& from, const Pair& to, const ParamTriple& t);
ParamTriple transition_12_13_closed(const ParamTriple& t);

UniversalParamPoint lift_to_blowup(const ParamTriple& t, const std::optional<P1>& direction = std::nullopt);
ParamTriple blowdown(const UniversalParamPoint& u);
P1 blowup_coordinate(const UniversalParamPoint& u);  // (1 - c1'/c1 : 1 - c2'/c2), extended to the divisor

// Cross-ratio coordinates indexed by the 4-subsets 1234, 1235, 1245, 1345, 2345.
using FiveCoords = std::array<P1, 5>;

struct Embedded {
    FiveCoords coords;
    bool valid = false;  // the four defining equations hold
};

bool satisfies_embedding_equations(const FiveCoords& e);
FiveCoords five_coordinates(const PluckerVector& p);  // requires a main-stratum vector
Embedded embed_five(const PluckerVector& p);
Embedded embed_five(const ParamTriple& t);
// Cross-ratio (P^{ac}P^{bd} : P^{ad}P^{bc}) for distinct a, b, c, d read off the five coordinates.
P1 cross_ratio(const FiveCoords& e, int a, int b, int c, int d);
FiveCoords relabel_five(const FiveCoords& e, const std::vector<int>& image);

FiveCoords five_of_chart(const Pair& chart, const UniversalParamPoint& u);
UniversalParamPoint chart_of_five(const Pair& chart, const FiveCoords& e);
UniversalParamPoint tilde_transition(const Pair& from, const Pair& to, const UniversalParamPoint& u);
UniversalParamPoint tilde_transition_12_13(const UniversalParamPoint& u);

// One piece of a virtual parameter space, in chart coordinates.
struct VirtualPiece {
    enum class Kind { Point, Curve, DivisorCurve, Surface };
    enum class Rule { Fixed, Param, ParamSwapped };
    Kind kind = Kind::Point;
    UniversalParamPoint point;          // Point
    std::array<Rule, 3> rules{};        // Curve
    std::array<P1, 3> fixed{};          // Curve: values of Fixed coordinates
    bool punctured = false;             // Curve, DivisorCurve: parameter restricted to CP^1 minus A
    std::array<bool, 3> avoid_A{};      // Surface: coordinates required outside A

    bool contains(const UniversalParamPoint& u) const;
    std::optional<UniversalParamPoint> at(const P1& c) const;  // Curve, DivisorCurve
    std::string describe() const;
};

struct VirtualFamily {
    AdmissibleSet sigma;
    Pair chart;
    PolytopeType type = PolytopeType::Hypersimplex;
    std::vector<VirtualPiece> pieces;

    bool contains(const UniversalParamPoint& u) const;
    std::vector<UniversalParamPoint> sample(std::mt19937& rng, int count) const;
};

VirtualFamily virtual_space(const AdmissibleSet& sigma, const Pair& chart = Pair(1, 2));

// Random point of CP^1 with small Gaussian rational ratio; optionally outside A.
P1 random_p1(std::mt19937& rng, bool avoid_A);
ParamTriple random_main_triple(std::mt19937& rng);

int euler_characteristic_universal();

}  // namespace torus
