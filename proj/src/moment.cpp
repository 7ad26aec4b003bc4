#include "torus/moment.hpp"

#include "torus/error.hpp"

namespace torus {

MomentPoint moment(const PluckerVector& p) {
    MomentPoint x = MomentPoint::Zero(p.n());
    Rational total = 0;
    for (auto& [pair, z] : p.coords()) {
        Rational w = z.norm2();
        x(pair.i - 1) += w;
        x(pair.j - 1) += w;
        total += w;
    }
    return x / total;
}

int dmu_rank(const PluckerVector& p) { return polytope_of({p.n(), support(p)}).affine_dim(); }

bool is_regular_point(const PluckerVector& p) { return dmu_rank(p) == p.n() - 1; }

bool in_open_hypersimplex(const RatVector& x, int k) {
    Rational sum = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) <= 0 || x(i) >= 1) return false;
        sum += x(i);
    }
    return sum == k;
}

namespace {

const std::vector<LatticePolytope>& prisms() {
    static const std::vector<LatticePolytope> cache = [] {
        std::vector<LatticePolytope> out;
        for (auto& s : enumerate_admissible_sets(5)) {
            auto p = polytope_of(s);
            if (classify(p) == PolytopeType::Prism6) out.push_back(std::move(p));
        }
        return out;
    }();
    return cache;
}

}  // namespace

bool is_regular_value(const MomentPoint& x) {
    if (x.size() != 5) throw Error(ErrorKind::Unsupported, "regular values are classified for n = 5 only");
    if (!in_open_hypersimplex(x)) throw Error(ErrorKind::OutsideOpenHypersimplex, "point is not in the open hypersimplex");
    for (auto& prism : prisms())
        if (relative_interior_contains(prism, x)) return false;
    return true;
}

}  // namespace torus
