#include "torus/homology.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace torus {

std::string render(Coefficients c) { return c == Coefficients::Integers ? "z" : "z2"; }

Coefficients parse_coefficients(const std::string& text) {
    if (text == "z" || text == "Z") return Coefficients::Integers;
    if (text == "z2" || text == "Z2") return Coefficients::Mod2;
    throw Error(ErrorKind::Parse, "unknown coefficients '" + text + "'");
}

namespace {

bool is_mod2(Coefficients c) { return c == Coefficients::Mod2; }

IntMatrix to_int(const Mod2Matrix& m) { return m.cast<long>().cast<Integer>(); }

IntVector reduce(const IntVector& v, Coefficients c) {
    if (!is_mod2(c)) return v;
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = mp::abs(v(i)) % 2;
    return out;
}

bool is_zero(const IntVector& v, Coefficients c) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (is_mod2(c) ? mp::abs(v(i)) % 2 != 0 : v(i) != 0) return false;
    return true;
}


IntMatrix kernel_in(const IntMatrix& m, Coefficients c) {
    return is_mod2(c) ? to_int(nullspace_mod2(m)) : integer_kernel(m);
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), a.cols() + b.cols());
    if (a.cols()) out.leftCols(a.cols()) = a;
    if (b.cols()) out.rightCols(b.cols()) = b;
    return out;
}

// Unique solution of basis * y = v for a basis with independent columns; nullopt when v is outside
// the span (over Q or Z/2) or the solution is not integral.
std::optional<IntVector> solve_in(const IntMatrix& basis, const IntVector& v, Coefficients c) {
    const Eigen::Index k = basis.cols();
    if (is_mod2(c)) {
        Mod2Matrix a(basis.rows(), k + 1);
        a << reduce_mod2(basis), reduce_mod2(v);
        std::vector<Eigen::Index> pivots;
        Eigen::Index r = 0;
        for (Eigen::Index col = 0; col < k && r < a.rows(); ++col) {
            Eigen::Index p = r;
            while (p < a.rows() && a(p, col) == 0) ++p;
            if (p == a.rows()) continue;
            a.row(p).swap(a.row(r));
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (i != r && a(i, col)) a.row(i) = (a.row(i) + a.row(r)).unaryExpr([](int x) { return x & 1; });
            pivots.push_back(col);
            ++r;
        }
        for (Eigen::Index i = r; i < a.rows(); ++i)
            if (a(i, k)) return std::nullopt;
        IntVector y = IntVector::Zero(k);
        for (size_t p = 0; p < pivots.size(); ++p) y(pivots[p]) = a(static_cast<Eigen::Index>(p), k);
        return y;
    }
    RatVector x;
    if (!solve_rational(basis.cast<Rational>(), v.cast<Rational>(), x)) return std::nullopt;
    IntVector y(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (mp::denominator(x(i)) != 1) return std::nullopt;
        y(i) = Integer(mp::numerator(x(i)));
    }
    return y;
}

bool in_span(const IntMatrix& relations, const IntVector& v, Coefficients c) {
    if (is_zero(v, c)) return true;
    if (relations.cols() == 0) return false;
    if (is_mod2(c)) return rank_mod2(relations) == rank_mod2(hcat(relations, v));
    auto dec = smith_decomposition(relations);
    IntVector y = dec.left * v;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (i < dec.form.rank) {
            if (y(i) % dec.form.diagonal[i] != 0) return false;
        } else if (y(i) != 0) {
            return false;
        }
    }
    return true;
}

// Basis of the submodule spanned by the columns of g.
IntMatrix span_basis(const IntMatrix& g, Coefficients c) {
    if (g.cols() == 0) return IntMatrix(g.rows(), 0);
    if (is_mod2(c)) {
        std::vector<Eigen::Index> keep;
        IntMatrix acc(g.rows(), 0);
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            IntMatrix trial = hcat(acc, g.col(j));
            if (rank_mod2(trial) > static_cast<Eigen::Index>(keep.size())) {
                keep.push_back(j);
                acc = trial;
            }
        }
        return to_int(reduce_mod2(acc));
    }
    auto dec = smith_decomposition(g);
    return (g * dec.right).leftCols(dec.form.rank);
}

std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders) {
    if (orders.empty()) return {};
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(orders.size()), static_cast<Eigen::Index>(orders.size()));
    for (size_t i = 0; i < orders.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = orders[i];
    std::vector<Integer> out;
    for (auto& x : smith_normal_form(d).diagonal)
        if (x > 1) out.push_back(x);
    return out;
}

Group direct_sum(const Group& a, const Group& b) {
    std::vector<Integer> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return {a.rank + b.rank, normalize_torsion(t)};
}

void trim(HomologyProfile& p) {
    while (!p.groups.empty() && p.groups.back().trivial()) p.groups.pop_back();
}

std::string render_group(const Group& g, Coefficients c) {
    if (g.trivial()) return "0";
    std::vector<std::string> terms;
    const std::string base = is_mod2(c) ? "Z2" : "Z";
    if (g.rank == 1) terms.push_back(base);
    if (g.rank > 1) terms.push_back(base + "^" + std::to_string(g.rank));
    for (auto& t : g.torsion) terms.push_back("Z/" + t.str());
    std::string out;
    for (size_t k = 0; k < terms.size(); ++k) out += (k ? "+" : "") + terms[k];
    return out;
}

}  // namespace

Group free_group(Eigen::Index rank, std::vector<Integer> torsion) { return {rank, normalize_torsion(torsion)}; }

Group HomologyProfile::at(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(groups.size())) return {};
    return groups[static_cast<size_t>(degree)];
}

long HomologyProfile::euler_characteristic() const {
    long chi = 0;
    for (size_t d = 0; d < groups.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(groups[d].rank);
    return chi;
}

std::string HomologyProfile::render() const {
    std::string out;
    for (size_t d = 0; d < groups.size(); ++d) {
        if (groups[d].trivial()) continue;
        if (!out.empty()) out += ' ';
        out += render_group(groups[d], coefficients) + "@" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const HomologyProfile& p) { return os << p.render(); }

HomologyProfile make_profile(Coefficients c, const std::map<int, Group>& groups) {
    HomologyProfile p{c, {}};
    for (auto& [d, g] : groups) {
        if (d < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
        if (static_cast<int>(p.groups.size()) <= d) p.groups.resize(static_cast<size_t>(d) + 1);
        p.groups[static_cast<size_t>(d)] = {g.rank, normalize_torsion(g.torsion)};
    }
    trim(p);
    return p;
}

namespace {

long parse_count(const std::string& text) {
    long value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 0)
        throw Error(ErrorKind::Parse, "bad number '" + text + "'");
    return value;
}

}  // namespace

HomologyProfile parse_profile(Coefficients c, const std::string& text) {
    std::map<int, Group> groups;
    std::istringstream in(text);
    std::string token;
    const std::string base = is_mod2(c) ? "Z2" : "Z";
    while (in >> token) {
        if (token == "0") continue;
        auto at = token.find('@');
        if (at == std::string::npos) throw Error(ErrorKind::Parse, "missing degree in '" + token + "'");
        int degree = static_cast<int>(parse_count(token.substr(at + 1)));
        Group g;
        std::istringstream terms(token.substr(0, at));
        std::string term;
        while (std::getline(terms, term, '+')) {
            if (term.rfind("Z/", 0) == 0) {
                const long t = parse_count(term.substr(2));
                if (t < 2) throw Error(ErrorKind::Parse, "torsion order must exceed 1");
                g.torsion.push_back(Integer(t));
            } else if (term == base) {
                g.rank += 1;
            } else if (term.rfind(base + "^", 0) == 0) {
                g.rank += parse_count(term.substr(base.size() + 1));
            } else {
                throw Error(ErrorKind::Parse, "bad group term '" + term + "'");
            }
        }
        groups[degree] = direct_sum(groups[degree], g);
    }
    return make_profile(c, groups);
}

HomologyProfile mod2_from_integral(const HomologyProfile& integral) {
    if (is_mod2(integral.coefficients)) throw Error(ErrorKind::Unsupported, "profile is already mod 2");
    auto even = [](const Group& g) {
        Eigen::Index k = 0;
        for (auto& t : g.torsion)
            if (t % 2 == 0) ++k;
        return k;
    };
    std::map<int, Group> out;
    for (int d = 0; d <= integral.top_degree() + 1; ++d)
        out[d] = {integral.at(d).rank + even(integral.at(d)) + even(integral.at(d - 1)), {}};
    return make_profile(Coefficients::Mod2, out);
}

// ---------------------------------------------------------------------------------------------

ChainComplex::ChainComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (size_t k = 0; k < cells_.size(); ++k) {
        const Cell& c = cells_[k];
        if (c.dim < 0) throw Error(ErrorKind::OutOfRange, "cell '" + c.name + "' has negative dimension");
        if (!index_.emplace(c.name, k).second) throw Error(ErrorKind::OutOfRange, "duplicate cell '" + c.name + "'");
        if (static_cast<int>(by_dim_.size()) <= c.dim) by_dim_.resize(static_cast<size_t>(c.dim) + 1);
        by_dim_[static_cast<size_t>(c.dim)].push_back(c.name);
    }
    for (auto& c : cells_) {
        for (auto it = c.boundary.begin(); it != c.boundary.end();) {
            auto face = index_.find(it->first);
            if (face == index_.end())
                throw Error(ErrorKind::OutOfRange, "cell '" + c.name + "' has unknown face '" + it->first + "'");
            if (cells_[face->second].dim != c.dim - 1)
                throw Error(ErrorKind::OutOfRange, "face '" + it->first + "' of '" + c.name + "' has wrong dimension");
            it = it->second == 0 ? c.boundary.erase(it) : std::next(it);
        }
    }
    for (auto& c : cells_) {
        if (!boundary_of(c.boundary).empty())
            throw Error(ErrorKind::BoundaryNotSquareZero, "boundary of '" + c.name + "' is not a cycle");
    }
}

Eigen::Index ChainComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return 0;
    return static_cast<Eigen::Index>(by_dim_[static_cast<size_t>(dim)].size());
}

const std::vector<std::string>& ChainComplex::cells(int dim) const {
    static const std::vector<std::string> none;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<size_t>(dim)];
}

const Cell& ChainComplex::cell(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::OutOfRange, "unknown cell '" + name + "'");
    return cells_[it->second];
}

Eigen::Index ChainComplex::position(const std::string& name) const {
    const auto& list = cells(cell(name).dim);
    return std::find(list.begin(), list.end(), name) - list.begin();
}

IntMatrix ChainComplex::boundary(int dim) const {
    IntMatrix m = IntMatrix::Zero(count(dim - 1), count(dim));
    const auto& list = cells(dim);
    for (size_t j = 0; j < list.size(); ++j)
        for (auto& [face, coeff] : cell(list[j]).boundary) m(position(face), static_cast<Eigen::Index>(j)) = coeff;
    return m;
}

IntVector ChainComplex::vector_of(const Chain& chain, int dim) const {
    IntVector v = IntVector::Zero(count(dim));
    for (auto& [name, coeff] : chain) {
        if (cell(name).dim != dim) throw Error(ErrorKind::OutOfRange, "cell '" + name + "' has the wrong dimension");
        v(position(name)) += coeff;
    }
    return v;
}

Chain ChainComplex::chain_of(const IntVector& v, int dim) const {
    Chain out;
    const auto& list = cells(dim);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) out[list[static_cast<size_t>(i)]] = v(i);
    return out;
}

Chain ChainComplex::boundary_of(const Chain& chain) const {
    Chain out;
    for (auto& [name, coeff] : chain)
        for (auto& [face, c] : cell(name).boundary) out[face] += coeff * c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

long ChainComplex::euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= top_dimension(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(count(d));
    return chi;
}

HomologyProfile homology(const ChainComplex& c, Coefficients coefficients) {
    const int top = c.top_dimension();
    std::vector<Eigen::Index> ranks(static_cast<size_t>(top) + 2, 0);
    std::vector<std::vector<Integer>> factors(static_cast<size_t>(top) + 2);
    for (int d = 1; d <= top; ++d) {
        IntMatrix b = c.boundary(d);
        if (b.size() == 0) continue;
        if (is_mod2(coefficients)) {
            ranks[static_cast<size_t>(d)] = rank_mod2(b);
        } else {
            auto form = smith_normal_form(b);
            ranks[static_cast<size_t>(d)] = form.rank;
            for (auto& x : form.diagonal)
                if (x > 1) factors[static_cast<size_t>(d)].push_back(x);
        }
    }
    HomologyProfile p{coefficients, {}};
    for (int d = 0; d <= top; ++d) {
        Group g;
        g.rank = c.count(d) - ranks[static_cast<size_t>(d)] - ranks[static_cast<size_t>(d) + 1];
        g.torsion = factors[static_cast<size_t>(d) + 1];
        p.groups.push_back(g);
    }
    trim(p);
    return p;
}

Group Presentation::group() const {
    if (relations.cols() == 0) return {generators, {}};
    if (is_mod2(coefficients)) return {generators - rank_mod2(relations), {}};
    auto form = smith_normal_form(relations);
    Group g{generators - form.rank, {}};
    for (auto& x : form.diagonal)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

std::vector<CycleGroup> cycle_groups(const ChainComplex& c, Coefficients coefficients) {
    std::vector<CycleGroup> out;
    for (int d = 0; d <= c.top_dimension(); ++d) {
        CycleGroup g;
        g.cycles = kernel_in(c.boundary(d), coefficients);
        IntMatrix next = c.boundary(d + 1);
        g.presentation = {coefficients, g.cycles.cols(), IntMatrix(g.cycles.cols(), next.cols())};
        for (Eigen::Index j = 0; j < next.cols(); ++j) {
            auto y = solve_in(g.cycles, next.col(j), coefficients);
            if (!y) throw Error(ErrorKind::BoundaryNotSquareZero, "boundary outside the cycle lattice");
            g.presentation.relations.col(j) = *y;
        }
        out.push_back(std::move(g));
    }
    return out;
}

IntVector cycle_coordinates(const ChainComplex& c, const CycleGroup& g, int dim, const IntVector& cycle) {
    if (!is_zero(c.boundary(dim) * cycle, g.presentation.coefficients))
        throw Error(ErrorKind::InexactSequence, "connecting image is not a cycle");
    auto y = solve_in(g.cycles, reduce(cycle, g.presentation.coefficients), g.presentation.coefficients);
    if (!y) throw Error(ErrorKind::InexactSequence, "cycle outside the cycle lattice");
    return *y;
}

HomologyProfile assemble_pair(const PairAssembly& a) {
    const Coefficients c = a.coefficients;
    const size_t top = std::max({a.sub.size(), a.relative.size(), a.connecting.size()});
    auto sub = [&](long d) {
        return d >= 0 && static_cast<size_t>(d) < a.sub.size() ? a.sub[static_cast<size_t>(d)] : Presentation{c, 0, {}};
    };
    auto rel = [&](long d) {
        return d >= 0 && static_cast<size_t>(d) < a.relative.size() ? a.relative[static_cast<size_t>(d)]
                                                                     : Presentation{c, 0, {}};
    };
    auto delta = [&](long d) -> IntMatrix {
        Eigen::Index rows = sub(d - 1).generators, cols = rel(d).generators;
        if (d >= 0 && static_cast<size_t>(d) < a.connecting.size()) {
            const IntMatrix& m = a.connecting[static_cast<size_t>(d)];
            if (m.rows() != rows || m.cols() != cols)
                throw Error(ErrorKind::InexactSequence, "connecting map of degree " + std::to_string(d) + " has the wrong shape");
            return m;
        }
        return IntMatrix::Zero(rows, cols);
    };
    auto fix = [&](Presentation p) {
        if (p.relations.rows() != p.generators) p.relations = IntMatrix(p.generators, 0);
        return p;
    };

    HomologyProfile out{c, {}};
    for (long d = 0; d <= static_cast<long>(top); ++d) {
        Presentation a_d = fix(sub(d)), a_prev = fix(sub(d - 1)), q_d = fix(rel(d));
        IntMatrix into = delta(d), from = delta(d + 1);

        IntMatrix image = into * q_d.relations;
        for (Eigen::Index j = 0; j < image.cols(); ++j)
            if (!in_span(a_prev.relations, image.col(j), c))
                throw Error(ErrorKind::InexactSequence, "connecting map of degree " + std::to_string(d) + " is not well defined");

        Presentation coker{c, a_d.generators, hcat(a_d.relations, from)};

        IntMatrix gens = kernel_in(hcat(into, a_prev.relations), c).topRows(q_d.generators);
        IntMatrix basis = span_basis(gens, c);
        Presentation ker{c, basis.cols(), IntMatrix(basis.cols(), q_d.relations.cols())};
        for (Eigen::Index j = 0; j < q_d.relations.cols(); ++j) {
            auto y = solve_in(basis, q_d.relations.col(j), c);
            if (!y) throw Error(ErrorKind::InexactSequence, "relative relations escape the kernel");
            ker.relations.col(j) = *y;
        }

        Group left = coker.group(), right = ker.group();
        if (!is_mod2(c) && !right.torsion.empty() && !left.trivial())
            throw Error(ErrorKind::AmbiguousExtension,
                        "degree " + std::to_string(d) + ": torsion quotient over a nontrivial subgroup");
        out.groups.push_back(direct_sum(left, right));
    }
    trim(out);
    return out;
}

namespace {

ChainComplex relative_part(const ChainComplex& quotient) {
    std::vector<Cell> cells;
    for (auto c : quotient.all_cells()) {
        if (c.name == kBasepoint) continue;
        c.boundary.erase(kBasepoint);
        cells.push_back(std::move(c));
    }
    return ChainComplex(std::move(cells));
}

}  // namespace

ChainComplex total_complex(const ChainComplex& sub, const ChainComplex& quotient, const Attaching& attaching) {
    if (!quotient.contains(kBasepoint)) throw Error(ErrorKind::OutOfRange, "quotient complex lacks a basepoint");
    std::vector<Cell> cells = sub.all_cells();
    for (auto& [name, chain] : attaching) {
        if (name == kBasepoint || !quotient.contains(name))
            throw Error(ErrorKind::OutOfRange, "attaching data for unknown relative cell '" + name + "'");
        for (auto& [face, coeff] : chain) {
            (void)coeff;
            if (!sub.contains(face) || sub.cell(face).dim != quotient.cell(name).dim - 1)
                throw Error(ErrorKind::OutOfRange, "attaching face '" + face + "' is not a cell of the subspace");
        }
    }
    for (auto c : quotient.all_cells()) {
        if (c.name == kBasepoint) continue;
        if (sub.contains(c.name)) throw Error(ErrorKind::OutOfRange, "cell '" + c.name + "' occurs in both complexes");
        c.boundary.erase(kBasepoint);
        if (auto it = attaching.find(c.name); it != attaching.end())
            for (auto& [face, coeff] : it->second) c.boundary[face] += coeff;
        cells.push_back(std::move(c));
    }
    try {
        return ChainComplex(std::move(cells));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BoundaryNotSquareZero)
            throw Error(ErrorKind::InexactSequence, std::string("attaching data is not a chain map: ") + e.what());
        throw;
    }
}

PairAssembly pair_assembly(const ChainComplex& sub, const ChainComplex& quotient, const Attaching& attaching,
                           Coefficients coefficients) {
    total_complex(sub, quotient, attaching);  // validates the chain-map condition
    ChainComplex rel = relative_part(quotient);
    auto sub_groups = cycle_groups(sub, coefficients);
    auto rel_groups = cycle_groups(rel, coefficients);

    PairAssembly out{coefficients, {}, {}, {}};
    for (auto& g : sub_groups) out.sub.push_back(g.presentation);
    for (auto& g : rel_groups) out.relative.push_back(g.presentation);
    for (int d = 0; d <= rel.top_dimension(); ++d) {
        const auto& z = rel_groups[static_cast<size_t>(d)].cycles;
        if (d == 0 || d - 1 > sub.top_dimension()) {
            out.connecting.push_back(IntMatrix::Zero(0, z.cols()));
            continue;
        }
        const auto& target = sub_groups[static_cast<size_t>(d - 1)];
        IntMatrix m(target.cycles.cols(), z.cols());
        for (Eigen::Index j = 0; j < z.cols(); ++j) {
            IntVector image = IntVector::Zero(sub.count(d - 1));
            const auto& names = rel.cells(d);
            for (size_t k = 0; k < names.size(); ++k) {
                if (z(static_cast<Eigen::Index>(k), j) == 0) continue;
                auto it = attaching.find(names[k]);
                if (it != attaching.end()) image += z(static_cast<Eigen::Index>(k), j) * sub.vector_of(it->second, d - 1);
            }
            m.col(j) = cycle_coordinates(sub, target, d - 1, image);
        }
        out.connecting.push_back(m);
    }
    return out;
}

ChainComplex collapse(const ChainComplex& c, const std::vector<std::string>& subcomplex) {
    std::set<std::string> sub(subcomplex.begin(), subcomplex.end());
    for (auto& name : sub)
        for (auto& [face, coeff] : c.cell(name).boundary) {
            (void)coeff;
            if (!sub.count(face)) throw Error(ErrorKind::OutOfRange, "'" + name + "' has a face outside the subcomplex");
        }
    if (c.contains(kBasepoint) && !sub.count(kBasepoint))
        throw Error(ErrorKind::OutOfRange, "complex already has a basepoint");
    std::vector<Cell> cells{{kBasepoint, 0, {}}};
    for (auto cell : c.all_cells()) {
        if (sub.count(cell.name)) continue;
        Chain b;
        for (auto& [face, coeff] : cell.boundary) {
            if (!sub.count(face)) b[face] += coeff;
            else if (cell.dim == 1) b[kBasepoint] += coeff;
        }
        cell.boundary = b;
        cells.push_back(std::move(cell));
    }
    return ChainComplex(std::move(cells));
}

ChainComplex join(const ChainComplex& a, const ChainComplex& b) {
    // Augmented cells: the empty cell has dimension -1 and bounds every 0-cell.
    struct Aug {
        std::string name;
        int dim;
        Chain boundary;
    };
    auto augment = [](const ChainComplex& c, const std::string& tag) {
        std::vector<Aug> out{{"", -1, {}}};
        for (auto& cell : c.all_cells()) {
            Chain bd;
            if (cell.dim == 0) bd[""] = 1;
            for (auto& [face, coeff] : cell.boundary) bd[tag + face] = coeff;
            out.push_back({tag + cell.name, cell.dim, bd});
        }
        return out;
    };
    auto left = augment(a, "a:"), right = augment(b, "b:");
    auto name = [](const std::string& x, const std::string& y) {
        if (x.empty()) return y;
        if (y.empty()) return x;
        return x + "*" + y;
    };
    std::vector<Cell> cells;
    for (auto& x : left)
        for (auto& y : right) {
            if (x.dim < 0 && y.dim < 0) continue;
            Chain bd;
            for (auto& [fx, cx] : x.boundary)
                if (!(fx.empty() && y.dim < 0)) bd[name(fx, y.name)] += cx;
            const int sign = (x.dim + 1) % 2 == 0 ? 1 : -1;
            for (auto& [fy, cy] : y.boundary)
                if (!(fy.empty() && x.dim < 0)) bd[name(x.name, fy)] += sign * cy;
            cells.push_back({name(x.name, y.name), x.dim + y.dim + 1, bd});
        }
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& p, const Cell& q) { return p.dim < q.dim; });
    return ChainComplex(std::move(cells));
}

ChainComplex sphere_complex(int dim) {
    if (dim < 1) throw Error(ErrorKind::OutOfRange, "sphere dimension must be positive");
    return ChainComplex({{"v", 0, {}}, {"s" + std::to_string(dim), dim, {}}});
}

ChainComplex projective_plane_complex() {
    return ChainComplex({{"v", 0, {}}, {"cp1", 2, {}}, {"cp2", 4, {}}});
}

}  // namespace torus
