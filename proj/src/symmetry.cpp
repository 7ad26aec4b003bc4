#include "torus/symmetry.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace torus {

Permutation identity_permutation(int n) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k] - 1];
    return out;
}

bool is_permutation(const Permutation& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return sorted == identity_permutation(static_cast<int>(s.size()));
}

AdmissibleSet act(const Permutation& s, const AdmissibleSet& sigma) {
    if (static_cast<int>(s.size()) != sigma.n || !is_permutation(s))
        throw Error(ErrorKind::OutOfRange, "permutation does not act on this index set");
    AdmissibleSet out{sigma.n, {}};
    for (auto& p : sigma.pairs) out.pairs.emplace(s[p.i - 1], s[p.j - 1]);
    return out;
}

std::vector<Orbit> orbit_partition(int n) {
    const auto all = enumerate_admissible_sets(n);
    Permutation swap = identity_permutation(n), cycle(n);
    std::swap(swap[0], swap[1]);
    for (int k = 0; k < n; ++k) cycle[k] = k + 2 > n ? 1 : k + 2;

    long order = 1;
    for (int k = 2; k <= n; ++k) order *= k;

    std::set<AdmissibleSet> placed;
    std::vector<Orbit> orbits;
    for (auto& start : all) {
        if (placed.count(start)) continue;
        std::set<AdmissibleSet> orbit{start};
        std::vector<AdmissibleSet> frontier{start};
        while (!frontier.empty()) {
            std::vector<AdmissibleSet> next;
            for (auto& s : frontier)
                for (auto* g : {&swap, &cycle}) {
                    auto image = act(*g, s);
                    if (orbit.insert(image).second) next.push_back(image);
                }
            frontier = std::move(next);
        }
        placed.insert(orbit.begin(), orbit.end());
        Orbit o;
        o.members.assign(orbit.begin(), orbit.end());
        std::sort(o.members.begin(), o.members.end(), [](const AdmissibleSet& a, const AdmissibleSet& b) {
            return std::lexicographical_compare(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end());
        });
        o.stabilizer_order = order / static_cast<long>(o.members.size());
        orbits.push_back(std::move(o));
    }
    return orbits;
}

FundamentalTable fundamental_table(int n) {
    if (n != 5) throw Error(ErrorKind::Unsupported, "the fundamental table is tabulated for n = 5");
    auto orbits = orbit_partition(n);
    std::map<int, int> strata, orbit_count;
    for (auto& o : orbits) {
        int p = static_cast<int>(o.members.front().pairs.size());
        strata[p] += static_cast<int>(o.members.size());
        orbit_count[p] += 1;
    }
    FundamentalTable table;
    for (auto& o : orbits) {
        FundamentalRow row;
        row.generator = o.members.front();
        row.p = static_cast<int>(row.generator.pairs.size());
        row.m_p = strata[row.p];
        row.q_p = orbit_count[row.p];
        row.type = classify(polytope_of(row.generator));
        row.orbit_size = static_cast<long>(o.members.size());
        row.stabilizer_order = o.stabilizer_order;
        table.rows.push_back(std::move(row));
    }
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const FundamentalRow& a, const FundamentalRow& b) {
        if (a.p != b.p) return a.p > b.p;
        return static_cast<int>(a.type) < static_cast<int>(b.type);
    });
    return table;
}

std::string FundamentalTable::tsv() const {
    std::ostringstream out;
    out << "p\tm_p\tq_p\tgenerator\n";
    for (auto& r : rows) out << r.p << '\t' << r.m_p << '\t' << r.q_p << '\t' << render(r.generator) << '\n';
    return out.str();
}

}  // namespace torus
