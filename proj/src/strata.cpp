#include "torus/strata.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace torus {

AdmissibleSet full_set(int n) {
    auto v = all_pairs(n);
    return {n, {v.begin(), v.end()}};
}

AdmissibleSet pairs_of(int n, const Configuration& c) {
    AdmissibleSet out{n, {}};
    for (size_t a = 0; a < c.blocks.size(); ++a)
        for (size_t b = a + 1; b < c.blocks.size(); ++b)
            for (int x : c.blocks[a])
                for (int y : c.blocks[b]) out.pairs.emplace(x, y);
    return out;
}

std::optional<Configuration> configuration_of(const AdmissibleSet& sigma) {
    if (sigma.pairs.empty()) return std::nullopt;
    const int n = sigma.n;
    std::vector<bool> used(n + 1, false);
    for (auto& p : sigma.pairs) {
        if (p.i < 1 || p.j > n) return std::nullopt;
        used[p.i] = used[p.j] = true;
    }
    Configuration c;
    std::vector<int> block_of(n + 1, -1);
    for (int r = 1; r <= n; ++r) {
        if (!used[r]) { c.zero_rows.push_back(r); continue; }
        for (size_t b = 0; b < c.blocks.size(); ++b)
            if (!sigma.pairs.count(Pair(r, c.blocks[b].front()))) { block_of[r] = static_cast<int>(b); break; }
        if (block_of[r] < 0) {
            block_of[r] = static_cast<int>(c.blocks.size());
            c.blocks.push_back({});
        }
        c.blocks[block_of[r]].push_back(r);
    }
    if (c.blocks.size() < 2 || pairs_of(n, c).pairs != sigma.pairs) return std::nullopt;
    return c;
}

bool is_admissible(int n, const std::set<Pair>& pairs) { return configuration_of({n, pairs}).has_value(); }

namespace {

void for_each_partition(const std::vector<int>& items, const std::function<void(std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(size_t)> place = [&](size_t k) {
        if (k == items.size()) { visit(blocks); return; }
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(items[k]);
            place(k + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({items[k]});
        place(k + 1);
        blocks.pop_back();
    };
    place(0);
}

}  // namespace

std::vector<AdmissibleSet> enumerate_admissible_sets(int n) {
    if (n < 3 || n > 7) throw Error(ErrorKind::OutOfRange, "n must lie in 3..7");
    std::vector<AdmissibleSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Configuration c;
        std::vector<int> rest;
        for (int r = 1; r <= n; ++r) (mask >> (r - 1) & 1u ? c.zero_rows : rest).push_back(r);
        if (rest.size() < 2) continue;
        for_each_partition(rest, [&](std::vector<std::vector<int>>& blocks) {
            if (blocks.size() < 2) return;
            c.blocks = blocks;
            out.push_back(pairs_of(n, c));
        });
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleSet& a, const AdmissibleSet& b) {
        return std::lexicographical_compare(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end());
    });
    return out;
}

PlaneMatrix representative(const AdmissibleSet& sigma) {
    auto c = configuration_of(sigma);
    if (!c) throw Error(ErrorKind::NotAdmissible, "pair set is not admissible");
    PlaneMatrix m = PlaneMatrix::Constant(sigma.n, 2, Gaussian());
    for (size_t b = 0; b < c->blocks.size(); ++b)
        for (int r : c->blocks[b]) {
            m(r - 1, 0) = Gaussian(1);
            m(r - 1, 1) = Gaussian(static_cast<long>(b));
        }
    if (support(plucker_coordinates(m)) != sigma.pairs)
        throw Error(ErrorKind::NotAdmissible, "representative does not realize the pair set");
    return m;
}

int polytope_dim(const AdmissibleSet& sigma) {
    std::vector<Pair> v(sigma.pairs.begin(), sigma.pairs.end());
    IntMatrix diffs = IntMatrix::Zero(sigma.n, static_cast<Eigen::Index>(v.size()));
    for (size_t k = 1; k < v.size(); ++k) {
        diffs(v[k].i - 1, k) += 1;
        diffs(v[k].j - 1, k) += 1;
        diffs(v[0].i - 1, k) -= 1;
        diffs(v[0].j - 1, k) -= 1;
    }
    return static_cast<int>(rank(diffs));
}

int stabilizer_dim(const AdmissibleSet& sigma) { return sigma.n - polytope_dim(sigma); }

int defect(const AdmissibleSet& sigma) { return sigma.n - 1 - polytope_dim(sigma); }

int param_dim(const AdmissibleSet& sigma) {
    auto c = configuration_of(sigma);
    if (!c) throw Error(ErrorKind::NotAdmissible, "pair set is not admissible");
    return std::max(static_cast<int>(c->blocks.size()) - 3, 0);
}

StratumRecord stratum_record(const AdmissibleSet& sigma) {
    StratumRecord r;
    r.sigma = sigma;
    r.representative = representative(sigma);
    r.polytope_dim = polytope_dim(sigma);
    r.stabilizer_dim = sigma.n - r.polytope_dim;
    r.defect = r.stabilizer_dim - 1;
    r.param_dim = param_dim(sigma);
    return r;
}

std::string render(const AdmissibleSet& sigma) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (auto& p : sigma.pairs) {
        out << (first ? "" : ",") << '[' << p.i << ',' << p.j << ']';
        first = false;
    }
    out << ']';
    return out.str();
}

}  // namespace torus
