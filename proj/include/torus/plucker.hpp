#pragma once

#include "torus/exact.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace torus {

// Unordered index pair {i, j}, stored with i < j, indices 1-based.
struct Pair {
    int i = 0;
    int j = 0;
    Pair() = default;
    Pair(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}
    bool contains(int x) const { return i == x || j == x; }
    auto operator<=>(const Pair&) const = default;
};

std::string render(const Pair& p);  // "12"; uses two digits separated by '-' when n > 9
Pair parse_pair(const std::string& text);
std::vector<Pair> all_pairs(int n);

using PlaneMatrix = Eigen::Matrix<Gaussian, Eigen::Dynamic, 2>;

PlaneMatrix make_plane(const std::vector<std::pair<Gaussian, Gaussian>>& rows);

class PluckerVector {
public:
    PluckerVector() = default;
    PluckerVector(int n, std::map<Pair, Gaussian> coords);

    int n() const { return n_; }
    // Signed coordinate P^{ab}, antisymmetric in (a, b).
    Gaussian operator()(int a, int b) const;
    Gaussian at(const Pair& p) const;
    const std::map<Pair, Gaussian>& coords() const { return coords_; }

    // Projective equality.
    friend bool operator==(const PluckerVector& a, const PluckerVector& b);
    PluckerVector scaled(const Gaussian& s) const;
    PluckerVector relabeled(const std::vector<int>& image) const;  // image[k-1] = new label of k

private:
    int n_ = 0;
    std::map<Pair, Gaussian> coords_;  // nonzero entries only
};

PluckerVector plucker_coordinates(const PlaneMatrix& m);
std::set<Pair> support(const PluckerVector& p);
bool verify_relations(const PluckerVector& p);

}  // namespace torus
