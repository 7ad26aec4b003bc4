#pragma once

#include "torus/strata.hpp"

#include <string>
#include <vector>

namespace torus {

using WeightVector = Eigen::VectorXi;
using VertexSet = std::vector<int>;  // sorted vertex indices

WeightVector weight_vector(int n, const std::vector<int>& subset);
WeightVector weight_vector(int n, const Pair& p);

enum class PolytopeType {
    Hypersimplex,
    K9,
    K8,
    K7,
    Octahedron,
    Prism6,
    Pyramid5,
    Tetrahedron,
    Square,
    Triangle,
    Edge,
    Vertex,
};

const std::vector<PolytopeType>& all_polytope_types();
std::string tag(PolytopeType t);

struct Facet {
    VertexSet vertices;
    Vector<Integer> normal;  // in the chart coordinates of the affine hull
    Integer offset;          // normal . y <= offset on the polytope
};

class LatticePolytope {
public:
    LatticePolytope() = default;
    explicit LatticePolytope(std::vector<WeightVector> vertices);

    int ambient_dim() const { return ambient_; }
    int affine_dim() const { return dim_; }
    const std::vector<WeightVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    // faces()[d] lists the d-dimensional faces; the top entry is the polytope itself.
    const std::vector<std::vector<VertexSet>>& faces() const { return faces_; }
    std::vector<int> f_vector() const;
    int vertex_degree(int v) const;

    std::vector<WeightVector> points(const VertexSet& s) const;
    bool strictly_inside_by_facets(const RatVector& x) const;

private:
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<WeightVector> vertices_;
    std::vector<int> chart_rows_;  // coordinates that parametrize the affine hull
    std::vector<Facet> facets_;
    std::vector<std::vector<VertexSet>> faces_;
};

LatticePolytope hypersimplex(int n, int k);
LatticePolytope polytope_of(const AdmissibleSet& sigma);
int affine_dim(const std::vector<WeightVector>& points);
PolytopeType classify(const LatticePolytope& p);
int nonsimple_vertex_count(const LatticePolytope& p);
bool relative_interior_contains(const LatticePolytope& p, const RatVector& x);
bool relative_interior_contains(const std::vector<WeightVector>& vertices, const RatVector& x);

// Ordered basis of the direction space of the affine hull, chosen greedily from vertex differences.
RatMatrix canonical_orientation(const std::vector<WeightVector>& points);
// Incidence number of an oriented facet in the boundary of an oriented cell (outward normal first).
int incidence(const std::vector<WeightVector>& cell, const RatMatrix& cell_orientation,
              const std::vector<WeightVector>& facet, const RatMatrix& facet_orientation);

}  // namespace torus
