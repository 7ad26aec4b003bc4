#include "torus/polytope.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>

namespace torus {

WeightVector weight_vector(int n, const std::vector<int>& subset) {
    WeightVector w = WeightVector::Zero(n);
    for (int i : subset) w(i - 1) = 1;
    return w;
}

WeightVector weight_vector(int n, const Pair& p) { return weight_vector(n, std::vector<int>{p.i, p.j}); }

const std::vector<PolytopeType>& all_polytope_types() {
    static const std::vector<PolytopeType> types = {
        PolytopeType::Hypersimplex, PolytopeType::K9,          PolytopeType::K8,     PolytopeType::K7,
        PolytopeType::Octahedron,   PolytopeType::Prism6,      PolytopeType::Pyramid5, PolytopeType::Tetrahedron,
        PolytopeType::Square,       PolytopeType::Triangle,    PolytopeType::Edge,   PolytopeType::Vertex,
    };
    return types;
}

std::string tag(PolytopeType t) {
    switch (t) {
        case PolytopeType::Hypersimplex: return "HYPERSIMPLEX";
        case PolytopeType::K9: return "K9";
        case PolytopeType::K8: return "K8";
        case PolytopeType::K7: return "K7";
        case PolytopeType::Octahedron: return "OCTAHEDRON";
        case PolytopeType::Prism6: return "PRISM6";
        case PolytopeType::Pyramid5: return "PYRAMID5";
        case PolytopeType::Tetrahedron: return "TETRAHEDRON";
        case PolytopeType::Square: return "SQUARE";
        case PolytopeType::Triangle: return "TRIANGLE";
        case PolytopeType::Edge: return "EDGE";
        case PolytopeType::Vertex: return "VERTEX";
    }
    return "?";
}

namespace {

IntMatrix differences(const std::vector<WeightVector>& points) {
    const Eigen::Index n = points.empty() ? 0 : points[0].size();
    IntMatrix d(n, points.empty() ? 0 : static_cast<Eigen::Index>(points.size()) - 1);
    for (size_t k = 1; k < points.size(); ++k)
        for (Eigen::Index r = 0; r < n; ++r) d(r, k - 1) = points[k](r) - points[0](r);
    return d;
}

}  // namespace

int affine_dim(const std::vector<WeightVector>& points) {
    if (points.size() < 2) return 0;
    return static_cast<int>(rank(differences(points)));
}

LatticePolytope::LatticePolytope(std::vector<WeightVector> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(ErrorKind::OutOfRange, "polytope needs at least one vertex");
    ambient_ = static_cast<int>(vertices_[0].size());
    dim_ = torus::affine_dim(vertices_);
    const int count = static_cast<int>(vertices_.size());

    IntMatrix diffs = differences(vertices_);
    for (int r = 0; r < ambient_ && static_cast<int>(chart_rows_.size()) < dim_; ++r) {
        std::vector<int> trial = chart_rows_;
        trial.push_back(r);
        IntMatrix sub(static_cast<Eigen::Index>(trial.size()), diffs.cols());
        for (size_t k = 0; k < trial.size(); ++k) sub.row(k) = diffs.row(trial[k]);
        if (rank(sub) == static_cast<Eigen::Index>(trial.size())) chart_rows_ = trial;
    }
    auto chart = [&](int v) {
        Vector<Integer> y(dim_);
        for (int k = 0; k < dim_; ++k) y(k) = vertices_[v](chart_rows_[k]);
        return y;
    };

    std::set<VertexSet> seen;
    if (dim_ >= 1) {
        std::vector<int> pick(dim_);
        std::function<void(int, int)> choose = [&](int slot, int from) {
            if (slot == dim_) {
                IntMatrix m(dim_ - 1, dim_);
                for (int k = 1; k < dim_; ++k) m.row(k - 1) = (chart(pick[k]) - chart(pick[0])).transpose();
                Vector<Integer> normal(dim_);
                for (int c = 0; c < dim_; ++c) {
                    IntMatrix minor(dim_ - 1, dim_ - 1);
                    for (int j = 0, jj = 0; j < dim_; ++j)
                        if (j != c) minor.col(jj++) = m.col(j);
                    Integer det = determinant(minor);
                    normal(c) = c % 2 == 0 ? det : Integer(-det);
                }
                if (normal.isZero()) return;
                Integer base = normal.dot(chart(pick[0]));
                bool above = false, below = false;
                VertexSet on;
                for (int v = 0; v < count; ++v) {
                    Integer s = normal.dot(chart(v)) - base;
                    if (s > 0) above = true;
                    if (s < 0) below = true;
                    if (s == 0) on.push_back(v);
                }
                if (above && below) return;
                if (above) {
                    normal = -normal;
                    base = -base;
                }
                if (seen.insert(on).second) facets_.push_back({on, normal, base});
                return;
            }
            for (int v = from; v < count; ++v) {
                pick[slot] = v;
                choose(slot + 1, v + 1);
            }
        };
        choose(0, 0);
    }

    // Faces are the nonempty intersections of facets, together with the polytope itself.
    std::set<VertexSet> all(seen.begin(), seen.end());
    std::vector<VertexSet> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (auto& a : frontier)
            for (auto& f : facets_) {
                VertexSet meet;
                std::set_intersection(a.begin(), a.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(meet));
                if (!meet.empty() && all.insert(meet).second) next.push_back(meet);
            }
        frontier = std::move(next);
    }
    VertexSet everything(count);
    for (int v = 0; v < count; ++v) everything[v] = v;
    all.insert(everything);
    faces_.assign(dim_ + 1, {});
    for (auto& s : all) faces_[torus::affine_dim(points(s))].push_back(s);
}

std::vector<int> LatticePolytope::f_vector() const {
    std::vector<int> f;
    for (int d = 0; d < dim_; ++d) f.push_back(static_cast<int>(faces_[d].size()));
    return f;
}

int LatticePolytope::vertex_degree(int v) const {
    if (dim_ == 0) return 0;
    int degree = 0;
    for (auto& e : faces_[1])
        if (std::binary_search(e.begin(), e.end(), v)) ++degree;
    return degree;
}

std::vector<WeightVector> LatticePolytope::points(const VertexSet& s) const {
    std::vector<WeightVector> out;
    for (int v : s) out.push_back(vertices_[v]);
    return out;
}

bool LatticePolytope::strictly_inside_by_facets(const RatVector& x) const {
    RatMatrix hull(ambient_, static_cast<Eigen::Index>(vertices_.size()));
    for (size_t k = 0; k < vertices_.size(); ++k) hull.col(k) = (vertices_[k].cast<Integer>() - vertices_[0].cast<Integer>()).cast<Rational>();
    RatVector offset = x - vertices_[0].cast<Integer>().cast<Rational>();
    RatVector coeffs;
    if (!solve_rational(hull, offset, coeffs)) return false;
    for (auto& f : facets_) {
        Rational value = 0;
        for (int k = 0; k < dim_; ++k) value += Rational(f.normal(k)) * x(chart_rows_[k]);
        if (value >= Rational(f.offset)) return false;
    }
    return true;
}

LatticePolytope hypersimplex(int n, int k) {
    if (k < 1 || k >= n) throw Error(ErrorKind::OutOfRange, "hypersimplex needs 1 <= k < n");
    std::vector<WeightVector> vs;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) subset.push_back(i + 1);
        vs.push_back(weight_vector(n, subset));
    }
    std::sort(vs.begin(), vs.end(), [](const WeightVector& a, const WeightVector& b) {
        return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
    });
    return LatticePolytope(std::move(vs));
}

LatticePolytope polytope_of(const AdmissibleSet& sigma) {
    std::vector<WeightVector> vs;
    for (auto& p : sigma.pairs) vs.push_back(weight_vector(sigma.n, p));
    return LatticePolytope(std::move(vs));
}

PolytopeType classify(const LatticePolytope& p) {
    struct Row {
        PolytopeType type;
        int dim;
        std::vector<int> f;
    };
    static const std::vector<Row> table = {
        {PolytopeType::Hypersimplex, 4, {10, 30, 30, 10}},
        {PolytopeType::K9, 4, {9, 0, 0, 0}},
        {PolytopeType::K8, 4, {8, 0, 0, 0}},
        {PolytopeType::K7, 4, {7, 0, 0, 0}},
        {PolytopeType::Octahedron, 3, {6, 12, 8}},
        {PolytopeType::Prism6, 3, {6, 9, 5}},
        {PolytopeType::Pyramid5, 3, {5, 8, 5}},
        {PolytopeType::Tetrahedron, 3, {4, 6, 4}},
        {PolytopeType::Square, 2, {4, 4}},
        {PolytopeType::Triangle, 2, {3, 3}},
        {PolytopeType::Edge, 1, {2}},
        {PolytopeType::Vertex, 0, {}},
    };
    if (p.ambient_dim() != 5) throw Error(ErrorKind::Unsupported, "classification is defined for n = 5");
    auto f = p.f_vector();
    for (auto& row : table) {
        if (row.dim != p.affine_dim() || row.f.size() != f.size()) continue;
        bool match = true;
        for (size_t k = 0; k < f.size(); ++k)
            if (row.f[k] != 0 && row.f[k] != f[k]) match = false;
        if (match) return row.type;
    }
    throw Error(ErrorKind::Unclassifiable, "no type matches the face numbers");
}

int nonsimple_vertex_count(const LatticePolytope& p) {
    int count = 0;
    for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
        if (p.vertex_degree(v) > p.affine_dim()) ++count;
    return count;
}

bool relative_interior_contains(const std::vector<WeightVector>& vertices, const RatVector& x) {
    // x = sum (1 + b_v) v / s with b_v >= 0, s >= 0, written as a nonnegativity system in (b, s).
    const Eigen::Index n = x.size(), count = static_cast<Eigen::Index>(vertices.size());
    RatMatrix a(n + 1, count + 1);
    RatVector rhs = RatVector::Zero(n + 1);
    for (Eigen::Index v = 0; v < count; ++v) {
        for (Eigen::Index r = 0; r < n; ++r) {
            a(r, v) = vertices[v](r);
            rhs(r) -= vertices[v](r);
        }
        a(n, v) = 1;
        rhs(n) -= 1;
    }
    for (Eigen::Index r = 0; r < n; ++r) a(r, count) = -x(r);
    a(n, count) = -1;
    return feasible_nonnegative(a, rhs);
}

bool relative_interior_contains(const LatticePolytope& p, const RatVector& x) {
    return relative_interior_contains(p.vertices(), x);
}

RatMatrix canonical_orientation(const std::vector<WeightVector>& points) {
    const Eigen::Index n = points.empty() ? 0 : points[0].size();
    std::vector<RatVector> basis;
    for (size_t k = 1; k < points.size(); ++k) {
        RatVector d = (points[k] - points[0]).cast<Integer>().cast<Rational>();
        RatMatrix trial(n, static_cast<Eigen::Index>(basis.size()) + 1);
        for (size_t b = 0; b < basis.size(); ++b) trial.col(b) = basis[b];
        trial.col(basis.size()) = d;
        if (rank(trial) == trial.cols()) basis.push_back(d);
    }
    RatMatrix out(n, static_cast<Eigen::Index>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) out.col(b) = basis[b];
    return out;
}

namespace {

RatVector barycenter(const std::vector<WeightVector>& points) {
    RatVector c = RatVector::Zero(points[0].size());
    for (auto& p : points) c += p.cast<Integer>().cast<Rational>();
    return c / Rational(static_cast<long>(points.size()));
}

}  // namespace

int incidence(const std::vector<WeightVector>& cell, const RatMatrix& cell_orientation,
              const std::vector<WeightVector>& facet, const RatMatrix& facet_orientation) {
    const Eigen::Index k = cell_orientation.cols();
    RatMatrix frame(cell_orientation.rows(), k);
    frame.col(0) = barycenter(facet) - barycenter(cell);
    for (Eigen::Index c = 1; c < k; ++c) frame.col(c) = facet_orientation.col(c - 1);
    RatMatrix coords(k, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        RatVector x;
        if (!solve_rational(cell_orientation, frame.col(c), x))
            throw Error(ErrorKind::OutOfRange, "facet does not lie in the cell's affine hull");
        coords.col(c) = x;
    }
    Rational det = determinant(coords);
    if (det == 0) throw Error(ErrorKind::OutOfRange, "degenerate facet frame");
    return det > 0 ? 1 : -1;
}

}  // namespace torus
