#include "torus/params.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>

namespace torus {

// ---- projective line ------------------------------------------------------------------------

ProjectivePoint1::ProjectivePoint1(Gaussian first, Gaussian second) : a(std::move(first)), b(std::move(second)) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::OutOfRange, "(0:0) is not a point of CP^1");
}

std::string render(const P1& x) {
    if (x.b.is_zero()) return "(1:0)";
    return "(" + render(x.a / x.b) + ":1)";
}

P1 parse_p1(const std::string& text) {
    auto open = text.find('('), colon = text.find(':'), close = text.find(')');
    if (open == std::string::npos || colon == std::string::npos || close == std::string::npos || !(open < colon && colon < close))
        throw Error(ErrorKind::Parse, "expected (a:b), got " + text);
    return {parse_gaussian(text.substr(open + 1, colon - open - 1)), parse_gaussian(text.substr(colon + 1, close - colon - 1))};
}

// ---- triples and the blowup ------------------------------------------------------------------

bool ParamTriple::satisfies_cubic() const { return c[0].a * c[1].b * c[2].a == c[0].b * c[1].a * c[2].b; }

bool ParamTriple::is_center() const {
    P1 one(1, 1);
    return c[0] == one && c[1] == one && c[2] == one;
}

bool ParamTriple::nondegenerate() const { return !c[0].in_A() && !c[1].in_A() && !c[2].in_A(); }

ParamTriple center_triple() { return {{P1(1, 1), P1(1, 1), P1(1, 1)}}; }

UniversalParamPoint UniversalParamPoint::regular(const ParamTriple& t) {
    if (!t.satisfies_cubic()) throw Error(ErrorKind::DegenerateTriple, "triple is off the cubic surface");
    if (t.is_center()) throw Error(ErrorKind::CenterWithoutDirection, "the center needs a divisor direction");
    UniversalParamPoint u;
    u.kind_ = Kind::Regular;
    u.triple_ = t;
    return u;
}

UniversalParamPoint UniversalParamPoint::divisor(const P1& direction) {
    UniversalParamPoint u;
    u.kind_ = Kind::Divisor;
    u.direction_ = direction;
    return u;
}

bool operator==(const UniversalParamPoint& x, const UniversalParamPoint& y) {
    if (x.kind_ != y.kind_) return false;
    return x.is_divisor() ? x.direction_ == y.direction_ : x.triple_ == y.triple_;
}

std::string render(const ParamTriple& t) { return "(" + render(t[0]) + "," + render(t[1]) + "," + render(t[2]) + ")"; }

std::string render(const UniversalParamPoint& u) {
    return u.is_divisor() ? "divisor" + render(u.direction()) : render(u.triple());
}

UniversalParamPoint lift_to_blowup(const ParamTriple& t, const std::optional<P1>& direction) {
    if (!t.is_center()) return UniversalParamPoint::regular(t);
    if (!direction) throw Error(ErrorKind::CenterWithoutDirection, "lifting the center needs a direction");
    return UniversalParamPoint::divisor(*direction);
}

ParamTriple blowdown(const UniversalParamPoint& u) { return u.triple(); }

// ---- charts ------------------------------------------------------------------------------------

std::vector<int> chart_relabeling(const Pair& chart) {
    if (chart.i < 1 || chart.j > 5 || chart.i == chart.j) throw Error(ErrorKind::OutOfRange, "chart must be a pair in 1..5");
    std::vector<int> image(5);
    image[chart.i - 1] = 1;
    image[chart.j - 1] = 2;
    int next = 3;
    for (int r = 1; r <= 5; ++r)
        if (!chart.contains(r)) image[r - 1] = next++;
    return image;
}

namespace {

std::array<int, 3> others(const Pair& chart) {
    std::array<int, 3> rest{};
    int k = 0;
    for (int r = 1; r <= 5; ++r)
        if (!chart.contains(r)) rest[k++] = r;
    return rest;
}

std::vector<int> inverse(const std::vector<int>& image) {
    std::vector<int> inv(image.size());
    for (size_t k = 0; k < image.size(); ++k) inv[image[k] - 1] = static_cast<int>(k) + 1;
    return inv;
}

Gaussian ratio(const P1& x) { return x.a / x.b; }

}  // namespace

ChartCoords chart_coordinates(const Pair& chart, const PluckerVector& p) {
    if (p.n() != 5) throw Error(ErrorKind::Unsupported, "chart coordinates are defined for n = 5");
    const Gaussian base = p(chart.i, chart.j);
    if (base.is_zero()) throw Error(ErrorKind::NotMainStratum, "plane lies outside the chart");
    auto rest = others(chart);
    ChartCoords z;
    for (int k = 0; k < 3; ++k) {
        z[k] = p(rest[k], chart.j) / base;
        z[k + 3] = p(chart.i, rest[k]) / base;
    }
    return z;
}

namespace {

std::array<std::pair<Gaussian, Gaussian>, 3> ratios(const ChartCoords& z) {
    return {{{z[0] * z[4], z[1] * z[3]}, {z[0] * z[5], z[2] * z[3]}, {z[1] * z[5], z[2] * z[4]}}};
}

}  // namespace

ParamTriple chart_params(const Pair&, const ChartCoords& z) {
    ParamTriple t;
    auto r = ratios(z);
    for (int k = 0; k < 3; ++k) {
        if (r[k].first.is_zero() || r[k].second.is_zero() || r[k].first == r[k].second)
            throw Error(ErrorKind::NotMainStratum, "chart coordinates are not in the main stratum");
        t.c[k] = P1(r[k].first, r[k].second);
    }
    return t;
}

ParamTriple chart_params(const Pair& chart, const PluckerVector& p) { return chart_params(chart, chart_coordinates(chart, p)); }

ParamTriple stratum_params(const Pair& chart, const PluckerVector& p) {
    auto r = ratios(chart_coordinates(chart, p));
    ParamTriple t;
    for (int k = 0; k < 3; ++k) {
        if (r[k].first.is_zero() && r[k].second.is_zero())
            throw Error(ErrorKind::OutOfRange, "chart parameter is undefined on this stratum");
        t.c[k] = P1(r[k].first, r[k].second);
    }
    return t;
}

PluckerVector representative_of_params(const Pair& chart, const ParamTriple& t) {
    for (auto& x : t.c)
        if (x.in_A()) throw Error(ErrorKind::DegenerateTriple, "parameters must avoid (1:0), (0:1), (1:1)");
    if (!t.satisfies_cubic()) throw Error(ErrorKind::DegenerateTriple, "triple is off the cubic surface");
    // z1 = z2 = z3 = z4 = 1 fixes the torus; the cubic then forces the third ratio.
    ChartCoords z = {Gaussian(1), Gaussian(1), Gaussian(1), Gaussian(1), ratio(t[0]), ratio(t[1])};
    auto rest = others(chart);
    PlaneMatrix m = PlaneMatrix::Constant(5, 2, Gaussian());
    m(chart.i - 1, 0) = Gaussian(1);
    m(chart.j - 1, 1) = Gaussian(1);
    for (int k = 0; k < 3; ++k) {
        m(rest[k] - 1, 0) = z[k];
        m(rest[k] - 1, 1) = z[k + 3];
    }
    return plucker_coordinates(m);
}

ParamTriple transition(const Pair& from, const Pair& to, const ParamTriple& t) {
    return chart_params(to, representative_of_params(from, t));
}

ParamTriple transition_12_13_closed(const ParamTriple& t) {
    if (!t.nondegenerate() || !t.satisfies_cubic()) throw Error(ErrorKind::DegenerateTriple, "closed form needs a main-stratum triple");
    const auto &c1 = t[0], &c2 = t[1], &c3 = t[2];
    return {{P1(c1.a, c1.a - c1.b), P1(c2.a, c2.a - c2.b),
             P1((c1.a - c1.b) * c2.b * c3.a, c1.b * (c2.a - c2.b) * c3.b)}};
}

// ---- five cross-ratio coordinates --------------------------------------------------------------

namespace {

// Position of the 4-subset of {1..5} that omits `missing`.
int slot_without(int missing) { return 5 - missing; }

std::array<int, 4> subset_of_slot(int slot) {
    std::array<int, 4> s{};
    int k = 0;
    for (int r = 1; r <= 5; ++r)
        if (r != 5 - slot) s[k++] = r;
    return s;
}

}  // namespace

FiveCoords five_coordinates(const PluckerVector& p) {
    if (p.n() != 5 || p.coords().size() != 10) throw Error(ErrorKind::NotMainStratum, "five coordinates need all Pluecker coordinates nonzero");
    FiveCoords e;
    for (int slot = 0; slot < 5; ++slot) {
        auto [a, b, c, d] = subset_of_slot(slot);
        e[slot] = P1(p(a, c) * p(b, d), p(a, d) * p(b, c));
    }
    return e;
}

P1 cross_ratio(const FiveCoords& e, int a, int b, int c, int d) {
    std::array<int, 4> t = {a, b, c, d};
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end() || t[0] < 1 || t[3] > 5)
        throw Error(ErrorKind::OutOfRange, "cross-ratio needs four distinct indices in 1..5");
    int missing = 15 - t[0] - t[1] - t[2] - t[3];
    const P1& base = e[slot_without(missing)];
    // With Z = P^{t1t3}P^{t2t4}, Y = P^{t1t4}P^{t2t3} and X = P^{t1t2}P^{t3t4}, the relation reads Z = X + Y.
    const Gaussian z = base.a, y = base.b, x = z - y;
    auto product = [&](int u, int v, int w, int s) {
        int sign = (u < v ? 1 : -1) * (w < s ? 1 : -1);
        int lo = std::min(u, v) == t[0] ? std::max(u, v) : std::max(w, s);
        const Gaussian& m = lo == t[1] ? x : lo == t[2] ? z : y;
        return sign > 0 ? m : -m;
    };
    return {product(a, c, b, d), product(a, d, b, c)};
}

FiveCoords relabel_five(const FiveCoords& e, const std::vector<int>& image) {
    auto inv = inverse(image);
    FiveCoords out;
    for (int slot = 0; slot < 5; ++slot) {
        auto [a, b, c, d] = subset_of_slot(slot);
        out[slot] = cross_ratio(e, inv[a - 1], inv[b - 1], inv[c - 1], inv[d - 1]);
    }
    return out;
}

bool satisfies_embedding_equations(const FiveCoords& e) {
    const auto &c1 = e[0], &c2 = e[1], &c3 = e[2], &c4 = e[3], &c5 = e[4];
    return c1.a * c2.b * c3.a == c1.b * c2.a * c3.b &&
           c2.b * c4.a * (c1.a - c1.b) == c1.b * c4.b * (c2.a - c2.b) &&
           (c1.a - c1.b) * c2.a * c5.a == c1.a * (c2.a - c2.b) * c5.b &&
           c3.a * c4.b * c5.a == c3.b * c4.a * c5.b;
}

Embedded embed_five(const PluckerVector& p) {
    auto e = five_coordinates(p);
    return {e, satisfies_embedding_equations(e)};
}

namespace {

P1 first_defined(const Gaussian& a, const Gaussian& b, const Gaussian& c, const Gaussian& d) {
    if (!a.is_zero() || !b.is_zero()) return P1(a, b);
    if (!c.is_zero() || !d.is_zero()) return P1(c, d);
    throw Error(ErrorKind::OutOfRange, "coordinate is undefined at this point");
}

FiveCoords five_of_chart12(const UniversalParamPoint& u) {
    if (u.is_divisor()) {
        P1 one(1, 1), x = u.direction().reversed();
        return {one, one, one, x, x};
    }
    const auto &c1 = u.triple()[0], &c2 = u.triple()[1], &c3 = u.triple()[2];
    const Gaussian d1 = c1.a - c1.b, d2 = c2.a - c2.b;
    // Each of the last two coordinates has two expressions that agree on the cubic; the second one
    // is used on the curve where the first degenerates to (0:0).
    P1 e4 = first_defined(c1.a * d2, c2.a * d1, c1.b * c3.b * d2, c2.b * c3.a * d1);
    P1 e5 = first_defined(c1.b * d2, c2.b * d1, c1.a * c3.a * d2, c2.a * c3.b * d1);
    return {c1.reversed(), c2.reversed(), c3.reversed(), e4, e5};
}

}  // namespace

Embedded embed_five(const ParamTriple& t) {
    if (!t.nondegenerate() || !t.satisfies_cubic()) throw Error(ErrorKind::NotMainStratum, "triple is not a main-stratum parameter");
    auto e = five_of_chart12(UniversalParamPoint::regular(t));
    return {e, satisfies_embedding_equations(e)};
}

FiveCoords five_of_chart(const Pair& chart, const UniversalParamPoint& u) {
    return relabel_five(five_of_chart12(u), inverse(chart_relabeling(chart)));
}

UniversalParamPoint chart_of_five(const Pair& chart, const FiveCoords& e) {
    FiveCoords local = relabel_five(e, chart_relabeling(chart));
    ParamTriple t{{local[0].reversed(), local[1].reversed(), local[2].reversed()}};
    if (t.is_center()) return UniversalParamPoint::divisor(local[3].reversed());
    return UniversalParamPoint::regular(t);
}

UniversalParamPoint tilde_transition(const Pair& from, const Pair& to, const UniversalParamPoint& u) {
    return chart_of_five(to, five_of_chart(from, u));
}

UniversalParamPoint tilde_transition_12_13(const UniversalParamPoint& u) { return tilde_transition({1, 2}, {1, 3}, u); }

P1 blowup_coordinate(const UniversalParamPoint& u) { return five_of_chart12(u)[3].reversed(); }

// ---- sampling -----------------------------------------------------------------------------------

P1 random_p1(std::mt19937& rng, bool avoid_A) {
    std::uniform_int_distribution<int> part(-3, 3), special(0, 7);
    if (!avoid_A) {
        switch (special(rng)) {
            case 0: return P1(1, 0);
            case 1: return P1(0, 1);
            case 2: return P1(1, 1);
            default: break;
        }
    }
    for (;;) {
        Gaussian a(Rational(part(rng)), Rational(part(rng))), b(Rational(part(rng)), Rational(part(rng)));
        if (a.is_zero() && b.is_zero()) continue;
        P1 x(a, b);
        if (!avoid_A || !x.in_A()) return x;
    }
}

namespace {

// Completes a triple on the cubic given two coordinates; nullopt when the fibre is a whole line.
std::optional<P1> solve_cubic(ParamTriple t, int missing) {
    const auto &c1 = t[0], &c2 = t[1], &c3 = t[2];
    Gaussian a, b;
    switch (missing) {
        case 0: a = c2.a * c3.b; b = c2.b * c3.a; break;
        case 1: a = c1.a * c3.a; b = c1.b * c3.b; break;
        default: a = c1.b * c2.a; b = c1.a * c2.b; break;
    }
    if (a.is_zero() && b.is_zero()) return std::nullopt;
    return P1(a, b);
}

}  // namespace

ParamTriple random_main_triple(std::mt19937& rng) {
    for (;;) {
        ParamTriple t{{random_p1(rng, true), random_p1(rng, true), P1()}};
        auto third = solve_cubic(t, 2);
        if (!third || third->in_A()) continue;
        t.c[2] = *third;
        return t;
    }
}

// ---- virtual spaces -----------------------------------------------------------------------------

std::optional<UniversalParamPoint> VirtualPiece::at(const P1& c) const {
    if (punctured && c.in_A()) return std::nullopt;
    if (kind == Kind::DivisorCurve) return UniversalParamPoint::divisor(c);
    if (kind != Kind::Curve) throw Error(ErrorKind::Unsupported, "only curves are parametrized by a point of CP^1");
    ParamTriple t;
    for (int k = 0; k < 3; ++k)
        t.c[k] = rules[k] == Rule::Fixed ? fixed[k] : rules[k] == Rule::Param ? c : c.reversed();
    if (!t.is_center()) return UniversalParamPoint::regular(t);
    // The strict transform meets the divisor in the limiting direction of (1 - c1'/c1 : 1 - c2'/c2).
    auto slope = [&](int k) { return rules[k] == Rule::Fixed ? 0L : rules[k] == Rule::Param ? 1L : -1L; };
    return UniversalParamPoint::divisor(P1(slope(0), slope(1)));
}

bool VirtualPiece::contains(const UniversalParamPoint& u) const {
    switch (kind) {
        case Kind::Point: return u == point;
        case Kind::DivisorCurve: return u.is_divisor() && !(punctured && u.direction().in_A());
        case Kind::Surface:
            if (u.is_divisor()) return false;
            for (int k = 0; k < 3; ++k)
                if (avoid_A[k] && u.triple()[k].in_A()) return false;
            return true;
        case Kind::Curve: {
            P1 c(1, 1);
            if (!u.is_divisor()) {
                for (int k = 0; k < 3; ++k)
                    if (rules[k] != Rule::Fixed) {
                        c = rules[k] == Rule::Param ? u.triple()[k] : u.triple()[k].reversed();
                        break;
                    }
            }
            auto v = at(c);
            return v && *v == u;
        }
    }
    return false;
}

std::string VirtualPiece::describe() const {
    auto rule = [&](int k) {
        return rules[k] == Rule::Fixed ? render(fixed[k]) : rules[k] == Rule::Param ? std::string("(c:c')") : std::string("(c':c)");
    };
    std::string domain = punctured ? "CP1-A" : "CP1";
    switch (kind) {
        case Kind::Point: return render(point);
        case Kind::DivisorCurve: return "divisor(c:c'), c in " + domain;
        case Kind::Curve: return "(" + rule(0) + "," + rule(1) + "," + rule(2) + "), c in " + domain;
        case Kind::Surface: {
            std::string s = "cubic";
            for (int k = 0; k < 3; ++k)
                if (avoid_A[k]) s += ", c" + std::to_string(k + 1) + " not in A";
            return s;
        }
    }
    return "";
}

bool VirtualFamily::contains(const UniversalParamPoint& u) const {
    return std::any_of(pieces.begin(), pieces.end(), [&](const VirtualPiece& p) { return p.contains(u); });
}

std::vector<UniversalParamPoint> VirtualFamily::sample(std::mt19937& rng, int count) const {
    std::vector<UniversalParamPoint> out;
    for (int k = 0; k < count; ++k) {
        const VirtualPiece& piece = pieces[k % pieces.size()];
        switch (piece.kind) {
            case VirtualPiece::Kind::Point: out.push_back(piece.point); break;
            case VirtualPiece::Kind::Curve:
            case VirtualPiece::Kind::DivisorCurve: out.push_back(*piece.at(random_p1(rng, piece.punctured))); break;
            case VirtualPiece::Kind::Surface: {
                for (;;) {
                    ParamTriple t;
                    int masked = static_cast<int>(std::count(piece.avoid_A.begin(), piece.avoid_A.end(), true));
                    int missing = 2;
                    if (masked == 1) {
                        int kept = static_cast<int>(std::find(piece.avoid_A.begin(), piece.avoid_A.end(), true) - piece.avoid_A.begin());
                        missing = kept == 2 ? 1 : 2;
                    }
                    for (int c = 0; c < 3; ++c)
                        if (c != missing) t.c[c] = random_p1(rng, piece.avoid_A[c]);
                    auto third = solve_cubic(t, missing);
                    if (!third) continue;
                    t.c[missing] = *third;
                    if (t.is_center() || !piece.contains(UniversalParamPoint::regular(t))) continue;
                    out.push_back(UniversalParamPoint::regular(t));
                    break;
                }
                break;
            }
        }
    }
    return out;
}

namespace {

using Rule = VirtualPiece::Rule;

P1 named(const std::string& s) { return s == "10" ? P1(1, 0) : s == "01" ? P1(0, 1) : P1(1, 1); }

VirtualPiece curve(const std::string& a, const std::string& b, const std::string& c, bool punctured) {
    VirtualPiece piece;
    piece.kind = VirtualPiece::Kind::Curve;
    piece.punctured = punctured;
    std::array<std::string, 3> pattern = {a, b, c};
    for (int k = 0; k < 3; ++k) {
        if (pattern[k] == "c") piece.rules[k] = Rule::Param;
        else if (pattern[k] == "c'") piece.rules[k] = Rule::ParamSwapped;
        else {
            piece.rules[k] = Rule::Fixed;
            piece.fixed[k] = named(pattern[k]);
        }
    }
    return piece;
}

VirtualPiece divisor_curve(bool punctured) {
    VirtualPiece piece;
    piece.kind = VirtualPiece::Kind::DivisorCurve;
    piece.punctured = punctured;
    return piece;
}

VirtualPiece point(const UniversalParamPoint& u) {
    VirtualPiece piece;
    piece.kind = VirtualPiece::Kind::Point;
    piece.point = u;
    return piece;
}

VirtualPiece surface(bool c1, bool c2, bool c3) {
    VirtualPiece piece;
    piece.kind = VirtualPiece::Kind::Surface;
    piece.avoid_A = {c1, c2, c3};
    return piece;
}

// Curves in chart 12 indexed by the distinguished pair; shared by K_ij(9) (punctured), K_ij(7) and P_ij.
VirtualPiece chart12_curve(const Pair& p, bool punctured) {
    static const std::map<Pair, std::array<std::string, 3>> table = {
        {{2, 3}, {"01", "01", "c"}}, {{2, 4}, {"10", "c", "01"}}, {{2, 5}, {"c", "10", "10"}},
        {{1, 3}, {"10", "10", "c"}}, {{1, 4}, {"01", "c", "10"}}, {{1, 5}, {"c", "01", "01"}},
        {{3, 4}, {"11", "c", "c"}},  {{3, 5}, {"c", "11", "c'"}}, {{4, 5}, {"c", "c", "11"}},
    };
    if (p == Pair(1, 2)) return divisor_curve(punctured);
    auto& row = table.at(p);
    return curve(row[0], row[1], row[2], punctured);
}

UniversalParamPoint k8_point(const Pair& x, const Pair& y) {
    static const std::map<std::pair<Pair, Pair>, std::array<std::string, 3>> table = {
        {{{1, 4}, {2, 3}}, {"01", "01", "10"}}, {{{1, 3}, {2, 4}}, {"10", "10", "01"}},
        {{{1, 5}, {2, 4}}, {"10", "01", "01"}}, {{{2, 3}, {4, 5}}, {"01", "01", "11"}},
        {{{2, 4}, {3, 5}}, {"10", "11", "01"}}, {{{2, 5}, {3, 4}}, {"11", "10", "10"}},
        {{{1, 5}, {2, 3}}, {"01", "01", "01"}}, {{{1, 3}, {2, 5}}, {"10", "10", "10"}},
        {{{1, 4}, {2, 5}}, {"01", "10", "10"}}, {{{1, 3}, {4, 5}}, {"10", "10", "11"}},
        {{{1, 4}, {3, 5}}, {"01", "11", "10"}}, {{{1, 5}, {3, 4}}, {"11", "01", "01"}},
    };
    if (x == Pair(1, 2)) {
        if (y == Pair(3, 4)) return UniversalParamPoint::divisor(P1(0, 1));
        if (y == Pair(3, 5)) return UniversalParamPoint::divisor(P1(1, 0));
        return UniversalParamPoint::divisor(P1(1, 1));
    }
    auto& row = table.at({x, y});
    return UniversalParamPoint::regular({{named(row[0]), named(row[1]), named(row[2])}});
}

std::vector<VirtualPiece> chart12_pieces(const AdmissibleSet& s, PolytopeType type) {
    auto config = configuration_of(s);
    std::vector<Pair> missing;
    for (auto& p : all_pairs(5))
        if (!s.pairs.count(p)) missing.push_back(p);
    switch (type) {
        case PolytopeType::Hypersimplex: return {surface(true, true, true)};
        case PolytopeType::K9: return {chart12_curve(missing[0], true)};
        case PolytopeType::K8: return {point(k8_point(missing[0], missing[1]))};
        case PolytopeType::K7:
        case PolytopeType::Prism6: {
            // The distinguished pair is the apex of the pyramid, equivalently the two-element side of the prism.
            std::vector<int> apex;
            for (auto& block : config->blocks)
                if (block.size() <= 2)
                    for (int r : block) apex.push_back(r);
            return {chart12_curve(Pair(apex[0], apex[1]), false)};
        }
        case PolytopeType::Octahedron: {
            int zero = config->zero_rows.front();
            if (zero >= 3) return {surface(zero == 5, zero == 4, zero == 3)};
            std::vector<VirtualPiece> out{surface(true, true, true)};
            for (int r = 1; r <= 5; ++r)
                if (r != zero) out.push_back(chart12_curve(Pair(zero, r), true));
            return out;
        }
        default:
            throw Error(ErrorKind::Unsupported, "virtual spaces are tabulated for the hypersimplex, K9, K8, K7, octahedra and prisms");
    }
}

}  // namespace

VirtualFamily virtual_space(const AdmissibleSet& sigma, const Pair& chart) {
    if (sigma.n != 5 || !is_admissible(5, sigma.pairs)) throw Error(ErrorKind::NotAdmissible, "expected an admissible set for n = 5");
    VirtualFamily family;
    family.sigma = sigma;
    family.chart = chart;
    auto image = chart_relabeling(chart);
    AdmissibleSet local{5, {}};
    for (auto& p : sigma.pairs) local.pairs.emplace(image[p.i - 1], image[p.j - 1]);
    family.type = classify(polytope_of(sigma));
    family.pieces = chart12_pieces(local, family.type);
    return family;
}

int euler_characteristic_universal() {
    // Blowing up a point raises the Euler characteristic by one.
    const int from_quadric = 4 + 3;  // CP^1 x CP^1 blown up at three points
    const int from_plane = 3 + 4;    // CP^2 blown up at four points
    if (from_quadric != from_plane) throw Error(ErrorKind::InexactSequence, "blowup models disagree");
    return from_quadric;
}

}  // namespace torus
