#pragma once

#include "torus/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torus {

enum class Coefficients { Integers, Mod2 };
std::string render(Coefficients c);  // "z" or "z2"
Coefficients parse_coefficients(const std::string& text);

// A finitely generated abelian group Z^rank + Z/t1 + ... (t1 | t2 | ...), or a Z/2 vector space of
// dimension `rank` when the coefficients are Z/2.
struct Group {
    Eigen::Index rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const Group&, const Group&) = default;
};

Group free_group(Eigen::Index rank, std::vector<Integer> torsion = {});

struct HomologyProfile {
    Coefficients coefficients = Coefficients::Integers;
    std::vector<Group> groups;  // indexed by degree, trailing trivial groups trimmed

    Group at(int degree) const;
    int top_degree() const { return static_cast<int>(groups.size()) - 1; }
    long euler_characteristic() const;
    std::string render() const;  // "Z@0 Z^6+Z/2@5"
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile make_profile(Coefficients c, const std::map<int, Group>& groups);
// Parses the render() format; "0" is the trivial profile.
HomologyProfile parse_profile(Coefficients c, const std::string& text);
std::ostream& operator<<(std::ostream& os, const HomologyProfile& p);

// Universal coefficients: the Z/2 profile determined by an integral one.
HomologyProfile mod2_from_integral(const HomologyProfile& integral);

using Chain = std::map<std::string, Integer>;

struct Cell {
    std::string name;
    int dim = 0;
    Chain boundary;
};

// Named cells graded by dimension with integral boundaries. Construction rejects unknown faces,
// faces of the wrong dimension and boundaries that do not square to zero.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(std::vector<Cell> cells);

    int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    Eigen::Index count(int dim) const;
    const std::vector<std::string>& cells(int dim) const;
    const std::vector<Cell>& all_cells() const { return cells_; }
    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    const Cell& cell(const std::string& name) const;
    Eigen::Index position(const std::string& name) const;  // index within its dimension

    // Rows index (dim-1)-cells, columns index dim-cells.
    IntMatrix boundary(int dim) const;
    IntVector vector_of(const Chain& chain, int dim) const;
    Chain chain_of(const IntVector& v, int dim) const;
    Chain boundary_of(const Chain& chain) const;
    long euler_characteristic() const;

private:
    std::vector<Cell> cells_;
    std::map<std::string, size_t> index_;
    std::vector<std::vector<std::string>> by_dim_;
};

HomologyProfile homology(const ChainComplex& c, Coefficients coefficients);

// Z^generators / im(relations); over Z/2 everything is read mod 2.
struct Presentation {
    Coefficients coefficients = Coefficients::Integers;
    Eigen::Index generators = 0;
    IntMatrix relations;  // generators x m

    Group group() const;
};

// Homology in one degree with cycle representatives: H = Z^k / im(relations), where the k generators
// are the columns of `cycles`.
struct CycleGroup {
    IntMatrix cycles;  // cells x k
    Presentation presentation;
};

std::vector<CycleGroup> cycle_groups(const ChainComplex& c, Coefficients coefficients);
// Generator coordinates of a cycle; throws InexactSequence when the chain is not a cycle.
IntVector cycle_coordinates(const ChainComplex& c, const CycleGroup& g, int dim, const IntVector& cycle);

// Long exact sequence data of a pair (X, A).
struct PairAssembly {
    Coefficients coefficients = Coefficients::Integers;
    std::vector<Presentation> sub;       // H_d(A)
    std::vector<Presentation> relative;  // H_d(X, A)
    std::vector<IntMatrix> connecting;   // [d]: H_d(X, A) -> H_{d-1}(A), on generators
};

// Homology of X: for each d, 0 -> coker(connecting[d+1]) -> H_d(X) -> ker(connecting[d]) -> 0.
// Splits when the kernel is free (or the cokernel vanishes); otherwise AmbiguousExtension.
HomologyProfile assemble_pair(const PairAssembly& a);

// A quotient complex X/A carries a basepoint 0-cell named "*"; the remaining cells are the
// relative cells. `attaching` sends each relative cell to its boundary part inside A.
using Attaching = std::map<std::string, Chain>;
inline const std::string kBasepoint = "*";

ChainComplex total_complex(const ChainComplex& sub, const ChainComplex& quotient, const Attaching& attaching);
PairAssembly pair_assembly(const ChainComplex& sub, const ChainComplex& quotient, const Attaching& attaching,
                           Coefficients coefficients);
// Quotient of a complex by a subcomplex spanned by the listed cells (collapsed to "*").
ChainComplex collapse(const ChainComplex& c, const std::vector<std::string>& subcomplex);

// Join of two complexes that have a single 0-cell each: reduced chains shift by one.
ChainComplex join(const ChainComplex& a, const ChainComplex& b);
ChainComplex sphere_complex(int dim);                   // one 0-cell and one dim-cell
ChainComplex projective_plane_complex();                // CP^2: cells in dims 0, 2, 4

// Stages of the filtration V1 c V2 c V3 of the orbit space of G(5,2).
enum class Stage { V1, L1, L2, V21_rel_L2, V21, V32, V2, V3 };
std::string render(Stage s);
Stage parse_stage(const std::string& text);

ChainComplex curated_complex(Stage s);
HomologyProfile stage_homology(Stage s, Coefficients coefficients);

// The L2 -> V21 step through its long exact sequence.
PairAssembly v21_assembly(Coefficients coefficients);
PairAssembly v2_assembly(Coefficients coefficients);
PairAssembly v3_assembly(Coefficients coefficients);

HomologyProfile orbit_space_homology(int n, Coefficients coefficients);
HomologyProfile quotient_by_g42_homology(Coefficients coefficients = Coefficients::Integers);
HomologyProfile join_comparator_homology(Coefficients coefficients = Coefficients::Integers);

// f-cell boundary system: rows are the fifteen 4-cycles g_{ij,kl} of L2, columns the twenty f-cells.
IntMatrix f_cell_system();
// Octahedral boundary of the ten 6-cells e_ij: rows S_1..S_5, columns e_12..e_45.
IntMatrix k5_incidence_system();

// Parameter-level model of the main stratum: CP^1 x CP^1 relative to the three special lines
// and the diagonal, triangulated as a product of tetrahedron boundaries.
struct ParameterQuotient {
    ChainComplex complex;        // with basepoint "*"
    std::map<std::string, Chain> named;  // relative cycles for the named generators
};
ParameterQuotient parameter_quotient();

// Connecting choices made for V3 (kept for reporting).
struct ConnectingChoices {
    Chain c_delta;
    Chain c1;
    Chain c2;
};
const ConnectingChoices& connecting_choices();

}  // namespace torus
