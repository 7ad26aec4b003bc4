#include "torus/plucker.hpp"

#include "torus/error.hpp"

namespace torus {

std::string render(const Pair& p) {
    if (p.j <= 9) return std::to_string(p.i) + std::to_string(p.j);
    return std::to_string(p.i) + "-" + std::to_string(p.j);
}

Pair parse_pair(const std::string& text) {
    auto dash = text.find('-');
    try {
        if (dash != std::string::npos) return Pair(std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1)));
        if (text.size() == 2 && std::isdigit(text[0]) && std::isdigit(text[1]))
            return Pair(text[0] - '0', text[1] - '0');
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::Parse, "malformed index pair '" + text + "'");
}

std::vector<Pair> all_pairs(int n) {
    std::vector<Pair> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

PlaneMatrix make_plane(const std::vector<std::pair<Gaussian, Gaussian>>& rows) {
    PlaneMatrix m(static_cast<Eigen::Index>(rows.size()), 2);
    for (size_t r = 0; r < rows.size(); ++r) {
        m(r, 0) = rows[r].first;
        m(r, 1) = rows[r].second;
    }
    return m;
}

PluckerVector::PluckerVector(int n, std::map<Pair, Gaussian> coords) : n_(n) {
    for (auto& [pair, value] : coords) {
        if (pair.i < 1 || pair.j > n || pair.i == pair.j)
            throw Error(ErrorKind::OutOfRange, "pair " + render(pair) + " outside 1.." + std::to_string(n));
        if (!value.is_zero()) coords_.emplace(pair, value);
    }
    if (coords_.empty()) throw Error(ErrorKind::RankDeficient, "all Plucker coordinates vanish");
}

Gaussian PluckerVector::operator()(int a, int b) const {
    if (a == b) return Gaussian();
    Gaussian v = at(Pair(a, b));
    return a < b ? v : -v;
}

Gaussian PluckerVector::at(const Pair& p) const {
    auto it = coords_.find(p);
    return it == coords_.end() ? Gaussian() : it->second;
}

bool operator==(const PluckerVector& a, const PluckerVector& b) {
    if (a.n_ != b.n_ || a.coords_.size() != b.coords_.size()) return false;
    auto anchor = a.coords_.begin()->first;
    Gaussian bv = b.at(anchor);
    if (bv.is_zero()) return false;
    Gaussian av = a.coords_.begin()->second;
    for (auto& [pair, value] : a.coords_)
        if (value * bv != b.at(pair) * av) return false;
    return true;
}

PluckerVector PluckerVector::scaled(const Gaussian& s) const {
    std::map<Pair, Gaussian> out;
    for (auto& [pair, value] : coords_) out.emplace(pair, value * s);
    return {n_, out};
}

PluckerVector PluckerVector::relabeled(const std::vector<int>& image) const {
    std::map<Pair, Gaussian> out;
    for (auto& [pair, value] : coords_) {
        int a = image[pair.i - 1], b = image[pair.j - 1];
        out.emplace(Pair(a, b), a < b ? value : -value);
    }
    return {n_, out};
}

PluckerVector plucker_coordinates(const PlaneMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::map<Pair, Gaussian> coords;
    for (auto& p : all_pairs(n)) {
        Gaussian minor = m(p.i - 1, 0) * m(p.j - 1, 1) - m(p.i - 1, 1) * m(p.j - 1, 0);
        if (!minor.is_zero()) coords.emplace(p, minor);
    }
    if (coords.empty()) throw Error(ErrorKind::RankDeficient, "matrix has rank below 2");
    return {n, coords};
}

std::set<Pair> support(const PluckerVector& p) {
    std::set<Pair> out;
    for (auto& entry : p.coords()) out.insert(entry.first);
    return out;
}

bool verify_relations(const PluckerVector& p) {
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (p(i, j) * p(k, l) + p(j, k) * p(i, l) != p(i, k) * p(j, l)) return false;
    return true;
}

}  // namespace torus
