#pragma once

#include "torus/plucker.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torus {

struct AdmissibleSet {
    int n = 0;
    std::set<Pair> pairs;
    auto operator<=>(const AdmissibleSet&) const = default;
};

// Zero rows and a partition of the remaining rows into collinearity blocks.
struct Configuration {
    std::vector<int> zero_rows;
    std::vector<std::vector<int>> blocks;  // each block sorted, blocks ordered by first element
};

struct StratumRecord {
    AdmissibleSet sigma;
    PlaneMatrix representative;
    int stabilizer_dim = 0;
    int defect = 0;
    int polytope_dim = 0;
    int param_dim = 0;
};

AdmissibleSet full_set(int n);
AdmissibleSet pairs_of(int n, const Configuration& c);
std::optional<Configuration> configuration_of(const AdmissibleSet& sigma);

bool is_admissible(int n, const std::set<Pair>& pairs);
std::vector<AdmissibleSet> enumerate_admissible_sets(int n);

PlaneMatrix representative(const AdmissibleSet& sigma);
int polytope_dim(const AdmissibleSet& sigma);
int stabilizer_dim(const AdmissibleSet& sigma);
int defect(const AdmissibleSet& sigma);
int param_dim(const AdmissibleSet& sigma);
StratumRecord stratum_record(const AdmissibleSet& sigma);

std::string render(const AdmissibleSet& sigma);  // [[1,2],[1,3]]

}  // namespace torus
