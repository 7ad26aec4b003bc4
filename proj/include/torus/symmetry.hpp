#pragma once

#include "torus/polytope.hpp"

#include <string>
#include <vector>

namespace torus {

// image[k-1] is the image of k.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
bool is_permutation(const Permutation& s);

AdmissibleSet act(const Permutation& s, const AdmissibleSet& sigma);

struct Orbit {
    std::vector<AdmissibleSet> members;  // sorted; members.front() is the generator
    long stabilizer_order = 0;
};

std::vector<Orbit> orbit_partition(int n);

struct FundamentalRow {
    int p = 0;    // vertex count
    int m_p = 0;  // strata with p vertices
    int q_p = 0;  // orbits with p vertices
    AdmissibleSet generator;
    PolytopeType type = PolytopeType::Vertex;
    long orbit_size = 0;
    long stabilizer_order = 0;
};

struct FundamentalTable {
    std::vector<FundamentalRow> rows;  // one per orbit, p descending
    std::string tsv() const;
};

FundamentalTable fundamental_table(int n);

}  // namespace torus
