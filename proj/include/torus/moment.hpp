#pragma once

#include "torus/polytope.hpp"

namespace torus {

using MomentPoint = RatVector;

MomentPoint moment(const PluckerVector& p);
int dmu_rank(const PluckerVector& p);
bool is_regular_point(const PluckerVector& p);

bool in_open_hypersimplex(const RatVector& x, int k = 2);
// Interior values of the n = 5 moment map that lie on no open prism.
bool is_regular_value(const MomentPoint& x);

}  // namespace torus
