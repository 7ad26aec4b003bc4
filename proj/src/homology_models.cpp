#include "torus/error.hpp"
#include "torus/homology.hpp"
#include "torus/polytope.hpp"
#include "torus/strata.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <set>

namespace torus {

namespace {

constexpr int kN = 5;

std::string digits(const Pair& p) { return std::to_string(p.i) + std::to_string(p.j); }

std::vector<int> complement(std::initializer_list<int> used) {
    std::vector<int> out;
    for (int r = 1; r <= kN; ++r)
        if (std::find(used.begin(), used.end(), r) == used.end()) out.push_back(r);
    return out;
}

AdmissibleSet from_blocks(std::vector<int> zero, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return pairs_of(kN, Configuration{std::move(zero), std::move(blocks)});
}

// Named admissible polytopes of the interior of the hypersimplex and of its boundary.
AdmissibleSet k7_set(const Pair& p) { return from_blocks({}, {{p.i}, {p.j}, complement({p.i, p.j})}); }
AdmissibleSet k8_set(const Pair& a, const Pair& b) {
    return from_blocks({}, {{a.i, a.j}, {b.i, b.j}, complement({a.i, a.j, b.i, b.j})});
}
AdmissibleSet k9_set(const Pair& p) {
    std::vector<std::vector<int>> blocks{{p.i, p.j}};
    for (int r : complement({p.i, p.j})) blocks.push_back({r});
    return from_blocks({}, blocks);
}
AdmissibleSet octahedron_set(int r) {
    std::vector<std::vector<int>> blocks;
    for (int s : complement({r})) blocks.push_back({s});
    return from_blocks({r}, blocks);
}
AdmissibleSet tetrahedron_set(int r) { return from_blocks({}, {{r}, complement({r})}); }

std::vector<WeightVector> points_of(const AdmissibleSet& s) {
    std::vector<WeightVector> out;
    for (auto& p : s.pairs) out.push_back(weight_vector(kN, p));
    return out;
}

std::set<Pair> pairs_of_face(const LatticePolytope& poly, const VertexSet& face) {
    std::set<Pair> out;
    for (int v : face) {
        const auto& w = poly.vertices()[static_cast<size_t>(v)];
        std::vector<int> ones;
        for (int r = 0; r < kN; ++r)
            if (w(r) == 1) ones.push_back(r + 1);
        out.emplace(ones[0], ones[1]);
    }
    return out;
}

// Facet incidence of `facet` in the 4-cell `cell`, both oriented: 4-cells by the hypersimplex frame,
// lower cells by their own canonical frame.
int facet_sign(const AdmissibleSet& cell, const AdmissibleSet& facet) {
    static const RatMatrix frame = canonical_orientation(hypersimplex(kN, 2).vertices());
    auto fp = points_of(facet);
    return incidence(points_of(cell), frame, fp, canonical_orientation(fp));
}

bool has_facet(const AdmissibleSet& cell, const AdmissibleSet& facet) {
    auto poly = polytope_of(cell);
    for (auto& f : poly.facets())
        if (pairs_of_face(poly, f.vertices) == facet.pairs) return true;
    return false;
}

// Sign relating the orientation a 4-cell induces on a boundary facet of the hypersimplex to the
// orientation induced by the hypersimplex itself.
int boundary_agreement(const AdmissibleSet& cell, const AdmissibleSet& facet) {
    return facet_sign(cell, facet) * facet_sign(full_set(kN), facet);
}

std::string prism_name(const Pair& p) { return "P_" + digits(p); }
std::string k7_name(const Pair& p) { return "K7_" + digits(p); }
std::string k8_name(Pair a, Pair b) {
    if (b < a) std::swap(a, b);
    return "K8_" + digits(a) + "," + digits(b);
}
std::string f_name(const Pair& p, int l) { return "f" + std::to_string(l) + "_" + digits(p); }
std::string e_name(const Pair& p) { return "e_" + digits(p); }
std::string s_name(int r) { return "S_" + std::to_string(r); }

struct K8Cell {
    Pair a, b;
};

std::vector<K8Cell> k8_cells() {
    std::vector<K8Cell> out;
    for (auto& a : all_pairs(kN))
        for (auto& b : all_pairs(kN))
            if (a < b && !a.contains(b.i) && !a.contains(b.j)) out.push_back({a, b});
    return out;
}

// Boundary of an interior 4-cell inside L2: its facets that are interior prisms.
Chain interior_boundary(const AdmissibleSet& cell) {
    auto poly = polytope_of(cell);
    Chain out;
    for (auto& f : poly.facets()) {
        auto pairs = pairs_of_face(poly, f.vertices);
        bool on_boundary = false;
        for (int r = 1; r <= kN && !on_boundary; ++r) {
            bool all_in = true, all_out = true;
            for (auto& p : pairs) (p.contains(r) ? all_out : all_in) = false;
            on_boundary = all_in || all_out;
        }
        if (on_boundary) continue;
        AdmissibleSet facet{kN, pairs};
        auto cfg = configuration_of(facet);
        if (!cfg || cfg->blocks.size() != 2 || cfg->blocks[0].size() + cfg->blocks[1].size() != kN || !cfg->zero_rows.empty())
            throw Error(ErrorKind::Unclassifiable, "interior facet " + render(facet) + " is not a prism");
        const auto& two = cfg->blocks[0].size() == 2 ? cfg->blocks[0] : cfg->blocks[1];
        Pair p(two[0], two[1]);
        out[prism_name(p)] += facet_sign(cell, facet);
    }
    return out;
}

// The twenty 5-cells f_ij^l: each bounds K_{ij,kl} + K_{ij,mn} + K_kl(7) + K_mn(7) mod 2.
struct FList {
    Pair cell;
    int path;
    Pair first, second;
};

const std::vector<FList>& f_lists() {
    static const std::vector<FList> lists = [] {
        const int table[20][4] = {
            {12, 1, 34, 45}, {12, 2, 45, 35}, {13, 1, 24, 45}, {13, 2, 45, 25}, {14, 1, 23, 35},
            {14, 2, 35, 25}, {15, 1, 23, 34}, {15, 2, 34, 24}, {23, 1, 15, 45}, {23, 2, 45, 14},
            {24, 1, 15, 35}, {24, 2, 35, 13}, {25, 1, 14, 34}, {25, 2, 34, 13}, {34, 1, 15, 12},
            {34, 2, 12, 25}, {35, 1, 14, 12}, {35, 2, 12, 24}, {45, 1, 23, 12}, {45, 2, 12, 13},
        };
        std::vector<FList> out;
        for (auto& row : table)
            out.push_back({Pair(row[0] / 10, row[0] % 10), row[1], Pair(row[2] / 10, row[2] % 10),
                           Pair(row[3] / 10, row[3] % 10)});
        return out;
    }();
    return lists;
}

// Coefficients in {+1,-1} on the given cells (first one +1) that make the chain a cycle.
std::vector<Chain> signed_cycles(const ChainComplex& c, const std::vector<std::string>& cells) {
    std::vector<Chain> out;
    const size_t k = cells.size();
    for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        Chain z;
        z[cells[0]] = 1;
        for (size_t i = 1; i < k; ++i) z[cells[i]] = (mask >> (i - 1)) & 1u ? -1 : 1;
        if (c.boundary_of(z).empty()) out.push_back(z);
    }
    return out;
}

Chain unique_signed_cycle(const ChainComplex& c, const std::vector<std::string>& cells) {
    auto found = signed_cycles(c, cells);
    if (found.size() != 1)
        throw Error(ErrorKind::InexactSequence,
                    "expected one signed cycle on '" + cells[0] + "'..., found " + std::to_string(found.size()));
    return found[0];
}

struct Models {
    ChainComplex v1, l1, l2, v21_rel, v21, v2, v32, v3;
    Attaching f_attaching, v2_attaching, v3_attaching;
    std::map<std::string, Chain> g_cycles;  // keyed by K8 name
    ConnectingChoices choices;
};


ChainComplex build_v1() {
    std::vector<Cell> cells{{"v", 0, {}}, {"dDelta", 3, {}}};
    for (int r = 1; r <= kN; ++r) cells.push_back({s_name(r), 5, {}});
    return ChainComplex(cells);
}

std::vector<Cell> l1_cells() {
    std::vector<Cell> cells{{kBasepoint, 0, {}}};
    for (auto& p : all_pairs(kN)) cells.push_back({prism_name(p), 3, {}});
    return cells;
}

std::vector<Cell> l2_cells() {
    auto cells = l1_cells();
    for (auto& p : all_pairs(kN)) cells.push_back({k7_name(p), 4, interior_boundary(k7_set(p))});
    for (auto& k : k8_cells()) cells.push_back({k8_name(k.a, k.b), 4, interior_boundary(k8_set(k.a, k.b))});
    return cells;
}

ChainComplex build_v21_rel() {
    std::vector<Cell> cells{{kBasepoint, 0, {}}};
    for (auto& f : f_lists()) cells.push_back({f_name(f.cell, f.path), 5, {}});
    for (auto& p : all_pairs(kN)) cells.push_back({e_name(p), 6, {}});
    return ChainComplex(cells);
}

// Minimal model of V3/V2 on the named generators; the simplicial parameter model justifies it.
ChainComplex build_v32() {
    std::vector<Cell> cells{{kBasepoint, 0, {}}};
    for (auto n : {"p11", "p12", "p21", "p22", "c1", "c2"}) cells.push_back({n, 6, {}});
    for (auto n : {"m11", "m21", "m12", "m22", "mD"}) cells.push_back({n, 7, {}});
    cells.push_back({"top", 8, {}});
    return ChainComplex(cells);
}

Chain e_chain(std::initializer_list<int> pairs) {
    Chain out;
    for (int p : pairs) out[e_name(Pair(p / 10, p % 10))] = 1;
    return out;
}

std::vector<std::string> names(const Chain& c) {
    std::vector<std::string> out;
    for (auto& [k, v] : c) {
        (void)v;
        out.push_back(k);
    }
    return out;
}

std::vector<std::string> f_names(std::initializer_list<std::pair<int, int>> cells) {
    std::vector<std::string> out;
    for (auto& [p, l] : cells) out.push_back(f_name(Pair(p / 10, p % 10), l));
    return out;
}

// Enumerates chains with coefficients in {-1,0,1} on `support` (ordered), shortest first.
std::vector<Chain> small_chains(const std::vector<std::string>& support, const Chain& fixed) {
    std::vector<Chain> out;
    const size_t k = support.size();
    std::vector<int> digit(k, 0);
    const int values[3] = {0, 1, -1};
    for (;;) {
        Chain z = fixed;
        for (size_t i = 0; i < k; ++i)
            if (digit[i]) z[support[i]] = values[digit[i]];
        out.push_back(z);
        size_t i = 0;
        while (i < k && digit[i] == 2) digit[i++] = 0;
        if (i == k) break;
        ++digit[i];
    }
    std::stable_sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) { return a.size() < b.size(); });
    return out;
}

Models build_models() {
    Models m;
    m.v1 = build_v1();
    m.l1 = ChainComplex(l1_cells());
    m.l2 = ChainComplex(l2_cells());
    m.v21_rel = build_v21_rel();

    for (auto& k : k8_cells())
        m.g_cycles[k8_name(k.a, k.b)] = unique_signed_cycle(m.l2, {k8_name(k.a, k.b), k7_name(k.a), k7_name(k.b)});
    for (auto& f : f_lists())
        m.f_attaching[f_name(f.cell, f.path)] = unique_signed_cycle(
            m.l2, {k8_name(f.cell, f.first), k8_name(f.cell, f.second), k7_name(f.first), k7_name(f.second)});
    m.v21 = total_complex(m.l2, m.v21_rel, m.f_attaching);

    const auto t1 = tetrahedron_set(1);
    for (auto& p : all_pairs(kN))
        if (has_facet(k7_set(p), t1)) m.v2_attaching[k7_name(p)]["dDelta"] = boundary_agreement(k7_set(p), t1);
    for (auto& k : k8_cells())
        if (has_facet(k8_set(k.a, k.b), t1))
            m.v2_attaching[k8_name(k.a, k.b)]["dDelta"] = boundary_agreement(k8_set(k.a, k.b), t1);
    for (auto& p : all_pairs(kN))
        for (int r : {p.i, p.j}) {
            if (!has_facet(k9_set(p), octahedron_set(r)))
                throw Error(ErrorKind::Unclassifiable, "octahedron missing from a 9-vertex polytope");
            m.v2_attaching[e_name(p)][s_name(r)] = boundary_agreement(k9_set(p), octahedron_set(r));
        }
    m.v2 = total_complex(m.v1, m.v21, m.v2_attaching);

    m.v32 = build_v32();
    Attaching& a = m.v3_attaching;
    a["m11"] = unique_signed_cycle(m.v2, names(e_chain({15, 35, 23, 12})));
    a["m21"] = unique_signed_cycle(m.v2, names(e_chain({35, 12, 25, 13})));
    a["m12"] = unique_signed_cycle(m.v2, names(e_chain({14, 34, 23, 12})));
    a["m22"] = unique_signed_cycle(m.v2, names(e_chain({12, 13, 24, 34})));
    a["p11"] = unique_signed_cycle(m.v2, f_names({{14, 1}, {23, 1}, {23, 2}, {15, 1}, {34, 1}, {35, 1}, {12, 1}, {12, 2}}));
    a["p12"] = unique_signed_cycle(m.v2, f_names({{14, 2}, {25, 1}, {34, 2}, {35, 1}, {12, 1}, {12, 2}}));
    a["p22"] = unique_signed_cycle(m.v2, f_names({{34, 2}, {35, 2}, {12, 1}, {12, 2}, {13, 1}, {13, 2}, {24, 2}, {25, 2}}));
    a["p21"] = unique_signed_cycle(m.v2, f_names({{15, 2}, {35, 2}, {34, 1}, {12, 1}, {12, 2}, {24, 1}}));

    const auto v2_groups = cycle_groups(m.v2, Coefficients::Integers);
    auto coords = [&](int dim, const Chain& z) {
        return cycle_coordinates(m.v2, v2_groups[static_cast<size_t>(dim)], dim, m.v2.vector_of(z, dim));
    };
    // Generator of the diagonal class: a 6-cycle through e_45, chosen so the degree-7 connecting
    // map is onto the integral 6-cycles of V2.
    {
        std::vector<std::string> others;
        for (auto& p : all_pairs(kN))
            if (p != Pair(4, 5)) others.push_back(e_name(p));
        const auto& g6 = v2_groups[6];
        bool found = false;
        for (auto& z : small_chains(others, {{e_name(Pair(4, 5)), 1}})) {
            if (!m.v2.boundary_of(z).empty()) continue;
            IntMatrix img(g6.cycles.cols(), 5);
            int col = 0;
            for (auto n : {"m11", "m21", "m12", "m22"}) img.col(col++) = coords(6, a[n]);
            img.col(4) = coords(6, z);
            if (Presentation{Coefficients::Integers, img.rows(), img}.group().trivial() && img.rows() == 5) {
                m.choices.c_delta = z;
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorKind::InexactSequence, "no diagonal 6-cycle makes the connecting map onto");
        a["mD"] = m.choices.c_delta;
    }
    // Boundaries of the two diagonal 6-cells: 5-cycles with f45^l as a summand, chosen so the
    // degree-6 connecting map leaves exactly the octahedral torsion.
    {
        const auto free_cells = f_names({{12, 1}, {12, 2}, {13, 1}, {13, 2}, {14, 1}, {14, 2}});
        std::vector<std::string> all_f;
        for (auto& f : f_lists()) all_f.push_back(f_name(f.cell, f.path));
        IntMatrix sys(m.v2.count(4), static_cast<Eigen::Index>(all_f.size()));
        for (size_t j = 0; j < all_f.size(); ++j)
            sys.col(static_cast<Eigen::Index>(j)) = m.v2.vector_of(m.v2.boundary_of({{all_f[j], 1}}), 4);
        IntMatrix kernel = integer_kernel(sys);
        IntMatrix proj(static_cast<Eigen::Index>(free_cells.size()), kernel.cols());
        for (size_t i = 0; i < free_cells.size(); ++i) {
            auto pos = std::find(all_f.begin(), all_f.end(), free_cells[i]) - all_f.begin();
            proj.row(static_cast<Eigen::Index>(i)) = kernel.row(pos);
        }
        std::vector<Chain> small;
        for (auto& v : small_chains(free_cells, {})) {
            IntVector target = m.v2.vector_of({}, 5).head(0);
            target = IntVector::Zero(proj.rows());
            for (size_t i = 0; i < free_cells.size(); ++i)
                if (auto it = v.find(free_cells[i]); it != v.end()) target(static_cast<Eigen::Index>(i)) = it->second;
            RatVector y;
            if (!solve_rational(proj.cast<Rational>(), target.cast<Rational>(), y)) continue;
            RatVector z = kernel.cast<Rational>() * y;
            Chain chain;
            bool ok = true;
            for (Eigen::Index i = 0; i < z.size() && ok; ++i) {
                if (z(i) == 0) continue;
                if (z(i) != 1 && z(i) != -1) ok = false;
                else chain[all_f[static_cast<size_t>(i)]] = z(i) == 1 ? 1 : -1;
            }
            if (ok && !chain.empty()) small.push_back(chain);
        }
        std::stable_sort(small.begin(), small.end(), [](const Chain& x, const Chain& y) { return x.size() < y.size(); });
        auto with = [&](int path) {
            std::vector<Chain> out;
            const std::string own = f_name(Pair(4, 5), path), other = f_name(Pair(4, 5), 3 - path);
            for (auto& z : small)
                if (z.count(own) && z.at(own) == 1 && !z.count(other)) out.push_back(z);
            return out;
        };
        const auto& g5 = v2_groups[5];
        IntMatrix base(g5.cycles.cols(), 4);
        int col = 0;
        for (auto n : {"p11", "p12", "p21", "p22"}) base.col(col++) = coords(5, a[n]);
        const Eigen::Index rel_rank = smith_normal_form(g5.presentation.relations).rank;
        bool found = false;
        for (auto& c1 : with(1)) {
            for (auto& c2 : with(2)) {
                IntMatrix img(base.rows(), g5.presentation.relations.cols() + 6);
                img << g5.presentation.relations, base, coords(5, c1), coords(5, c2);
                Group left = Presentation{Coefficients::Integers, img.rows(), img}.group();
                if (left == free_group(0, {2}) && smith_normal_form(img).rank == rel_rank + 6) {
                    m.choices.c1 = c1;
                    m.choices.c2 = c2;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw Error(ErrorKind::InexactSequence, "no diagonal 5-cycles leave exactly the octahedral torsion");
        a["c1"] = m.choices.c1;
        a["c2"] = m.choices.c2;
    }
    m.v3 = total_complex(m.v2, m.v32, a);
    return m;
}

const Models& models() {
    static const Models m = build_models();
    return m;
}

}  // namespace

std::string render(Stage s) {
    switch (s) {
        case Stage::V1: return "V1";
        case Stage::L1: return "L1";
        case Stage::L2: return "L2";
        case Stage::V21_rel_L2: return "V21_rel_L2";
        case Stage::V21: return "V21";
        case Stage::V32: return "V32";
        case Stage::V2: return "V2";
        case Stage::V3: return "V3";
    }
    return "?";
}

Stage parse_stage(const std::string& text) {
    for (Stage s : {Stage::V1, Stage::L1, Stage::L2, Stage::V21_rel_L2, Stage::V21, Stage::V32, Stage::V2, Stage::V3})
        if (render(s) == text) return s;
    throw Error(ErrorKind::Parse, "unknown stage '" + text + "'");
}

ChainComplex curated_complex(Stage s) {
    const Models& m = models();
    switch (s) {
        case Stage::V1: return m.v1;
        case Stage::L1: return m.l1;
        case Stage::L2: return m.l2;
        case Stage::V21_rel_L2: return m.v21_rel;
        case Stage::V21: return m.v21;
        case Stage::V32: return m.v32;
        case Stage::V2: return m.v2;
        case Stage::V3: return m.v3;
    }
    throw Error(ErrorKind::OutOfRange, "unknown stage");
}

PairAssembly v21_assembly(Coefficients c) { return pair_assembly(models().l2, models().v21_rel, models().f_attaching, c); }
PairAssembly v2_assembly(Coefficients c) { return pair_assembly(models().v1, models().v21, models().v2_attaching, c); }
PairAssembly v3_assembly(Coefficients c) { return pair_assembly(models().v2, models().v32, models().v3_attaching, c); }

HomologyProfile stage_homology(Stage s, Coefficients c) {
    switch (s) {
        case Stage::V2: return assemble_pair(v2_assembly(c));
        case Stage::V3: return assemble_pair(v3_assembly(c));
        default: return homology(curated_complex(s), c);
    }
}

const ConnectingChoices& connecting_choices() { return models().choices; }

IntMatrix f_cell_system() {
    const Models& m = models();
    auto k8 = k8_cells();
    IntMatrix out = IntMatrix::Zero(static_cast<Eigen::Index>(k8.size()), static_cast<Eigen::Index>(f_lists().size()));
    for (size_t j = 0; j < f_lists().size(); ++j) {
        const Chain& bd = m.f_attaching.at(f_name(f_lists()[j].cell, f_lists()[j].path));
        for (size_t i = 0; i < k8.size(); ++i) {
            auto name = k8_name(k8[i].a, k8[i].b);
            if (auto it = bd.find(name); it != bd.end())
                out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = it->second * m.g_cycles.at(name).at(name);
        }
    }
    return out;
}

IntMatrix k5_incidence_system() {
    const Models& m = models();
    auto pairs = all_pairs(kN);
    IntMatrix out = IntMatrix::Zero(kN, static_cast<Eigen::Index>(pairs.size()));
    for (size_t j = 0; j < pairs.size(); ++j)
        for (auto& [name, coeff] : m.v2_attaching.at(e_name(pairs[j])))
            out(std::stoi(name.substr(2)) - 1, static_cast<Eigen::Index>(j)) = coeff;
    return out;
}

// ------------------------------------------------------------------------------------------------
// Simplicial model of the parameter quotient (CP^1 x CP^1) / (A x CP^1 u CP^1 x A u diagonal).

namespace {

using Simplex = std::vector<int>;  // increasing vertex ids, id = 4 * first + second

constexpr int kSphereVertices = 4;
const std::set<int> kSpecial{0, 1, 2};  // (0:1), (1:1), (1:0)

Simplex product_vertex_path(const Simplex& u, const Simplex& v, const std::vector<int>& moves) {
    Simplex out;
    size_t a = 0, b = 0;
    out.push_back(u[0] * kSphereVertices + v[0]);
    for (int step : moves) {
        (step == 0 ? a : b) += 1;
        out.push_back(u[a] * kSphereVertices + v[b]);
    }
    return out;
}

// Shuffle product of two ordered simplices in the staircase triangulation.
std::map<Simplex, Integer> shuffle(const Simplex& u, const Simplex& v) {
    const size_t p = u.size() - 1, q = v.size() - 1;
    std::vector<int> moves(p + q, 1);
    std::fill(moves.begin(), moves.begin() + static_cast<long>(p), 0);
    std::map<Simplex, Integer> out;
    do {
        long inversions = 0, seen_second = 0;
        for (int step : moves) {
            if (step == 1) ++seen_second;
            else inversions += seen_second;
        }
        out[product_vertex_path(u, v, moves)] += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(moves.begin(), moves.end()));
    return out;
}

using SimplicialChain = std::map<Simplex, Integer>;

SimplicialChain product(const SimplicialChain& a, const SimplicialChain& b) {
    SimplicialChain out;
    for (auto& [u, x] : a)
        for (auto& [v, y] : b)
            for (auto& [s, c] : shuffle(u, v)) out[s] += x * y * c;
    return out;
}

bool in_special_part(const Simplex& s) {
    bool first_const = true, second_const = true, diagonal = true;
    for (int id : s) {
        if (id / kSphereVertices != s[0] / kSphereVertices) first_const = false;
        if (id % kSphereVertices != s[0] % kSphereVertices) second_const = false;
        if (id / kSphereVertices != id % kSphereVertices) diagonal = false;
    }
    return (first_const && kSpecial.count(s[0] / kSphereVertices)) ||
           (second_const && kSpecial.count(s[0] % kSphereVertices)) || diagonal;
}

std::string simplex_name(const Simplex& s) {
    std::string out = "s";
    for (int id : s) out += ":" + std::to_string(id / kSphereVertices) + std::to_string(id % kSphereVertices);
    return out;
}

Chain project(const SimplicialChain& c) {
    Chain out;
    for (auto& [s, x] : c)
        if (x != 0 && !in_special_part(s)) out[simplex_name(s)] += x;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

ParameterQuotient parameter_quotient() {
    std::vector<Simplex> triangles;
    for (int skip = kSphereVertices - 1; skip >= 0; --skip) {
        Simplex t;
        for (int x = 0; x < kSphereVertices; ++x)
            if (x != skip) t.push_back(x);
        triangles.push_back(t);
    }
    std::set<Simplex> all;
    for (auto& u : triangles)
        for (auto& v : triangles)
            for (auto& [top, sign] : shuffle(u, v)) {
                (void)sign;
                const int k = static_cast<int>(top.size());
                for (unsigned mask = 1; mask < (1u << k); ++mask) {
                    Simplex face;
                    for (int i = 0; i < k; ++i)
                        if (mask >> i & 1u) face.push_back(top[static_cast<size_t>(i)]);
                    all.insert(face);
                }
            }
    std::vector<Simplex> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    std::vector<Cell> cells{{kBasepoint, 0, {}}};
    for (auto& s : ordered) {
        if (in_special_part(s)) continue;
        Chain bd;
        for (size_t i = 0; i < s.size() && s.size() > 1; ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<long>(i));
            const int sign = i % 2 ? -1 : 1;
            if (!in_special_part(face)) bd[simplex_name(face)] += sign;
            else if (face.size() == 1) bd[kBasepoint] += sign;
        }
        cells.push_back({simplex_name(s), static_cast<int>(s.size()) - 1, bd});
    }

    SimplicialChain sphere;
    for (int skip = 0; skip < kSphereVertices; ++skip) {
        Simplex t;
        for (int x = 0; x < kSphereVertices; ++x)
            if (x != skip) t.push_back(x);
        sphere[t] += skip % 2 ? -1 : 1;
    }
    const SimplicialChain path1{{{0, 1}, 1}}, path2{{{1, 2}, 1}};
    auto half_square = [](int a, int b) {
        return SimplicialChain{{{a * kSphereVertices + a, a * kSphereVertices + b, b * kSphereVertices + b}, 1}};
    };

    ParameterQuotient out{ChainComplex(std::move(cells)), {}};
    out.named["m11"] = project(product(sphere, path1));
    out.named["m21"] = project(product(sphere, path2));
    out.named["m12"] = project(product(path1, sphere));
    out.named["m22"] = project(product(path2, sphere));
    out.named["p11"] = project(product(path1, path1));
    out.named["p12"] = project(product(path1, path2));
    out.named["p21"] = project(product(path2, path1));
    out.named["p22"] = project(product(path2, path2));
    out.named["c1"] = project(half_square(0, 1));
    out.named["c2"] = project(half_square(1, 2));
    out.named["top"] = project(product(sphere, sphere));
    return out;
}

// ------------------------------------------------------------------------------------------------

namespace {

// Oriented face complex of the boundary of the octahedron Delta(4,2).
ChainComplex octahedron_boundary() {
    auto delta = hypersimplex(4, 2);
    std::vector<Cell> cells;
    std::map<VertexSet, std::string> label;
    for (int d = 0; d <= 2; ++d) {
        for (auto& face : delta.faces()[static_cast<size_t>(d)]) {
            std::string name = "F";
            for (int v : face) name += ":" + std::to_string(v);
            label[face] = name;
            Chain bd;
            if (d > 0) {
                auto pts = delta.points(face);
                auto frame = canonical_orientation(pts);
                for (auto& sub : delta.faces()[static_cast<size_t>(d - 1)]) {
                    if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
                    auto sp = delta.points(sub);
                    bd[label.at(sub)] = incidence(pts, frame, sp, canonical_orientation(sp));
                }
            }
            cells.push_back({name, d, bd});
        }
    }
    return ChainComplex(std::move(cells));
}

ChainComplex tetrahedron_boundary() {
    std::vector<Cell> cells;
    auto name = [](const std::vector<int>& s) {
        std::string out = "t";
        for (int x : s) out += std::to_string(x);
        return out;
    };
    for (int k = 1; k <= 3; ++k) {
        for (unsigned mask = 0; mask < 16u; ++mask) {
            std::vector<int> s;
            for (int x = 0; x < 4; ++x)
                if (mask >> x & 1u) s.push_back(x);
            if (static_cast<int>(s.size()) != k) continue;
            Chain bd;
            for (size_t i = 0; k > 1 && i < s.size(); ++i) {
                auto f = s;
                f.erase(f.begin() + static_cast<long>(i));
                bd[name(f)] = i % 2 ? -1 : 1;
            }
            cells.push_back({name(s), k - 1, bd});
        }
    }
    return ChainComplex(std::move(cells));
}

}  // namespace

HomologyProfile orbit_space_homology(int n, Coefficients c) {
    if (n == 4) return homology(join(octahedron_boundary(), tetrahedron_boundary()), c);
    if (n == 5) return assemble_pair(v3_assembly(c));
    throw Error(ErrorKind::Unsupported, "orbit-space homology is available for n = 4 and n = 5");
}

HomologyProfile quotient_by_g42_homology(Coefficients c) {
    return homology(collapse(models().v3, {"v", s_name(5)}), c);
}

HomologyProfile join_comparator_homology(Coefficients c) {
    return homology(join(sphere_complex(3), projective_plane_complex()), c);
}

}  // namespace torus
