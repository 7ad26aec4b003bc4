#include "torus/exact.hpp"

#include "torus/error.hpp"

#include <algorithm>
#include <utility>

namespace torus {

std::string render(const Integer& z) { return z.str(); }

std::string render(const Rational& q) {
    if (mp::denominator(q) == 1) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string render(const Gaussian& z) {
    if (z.im == 0) return render(z.re);
    std::string out = render(z.re);
    out += z.im < 0 ? "-" : "+";
    out += render(Rational(mp::abs(z.im)));
    out += "i";
    return out;
}

namespace {

bool is_integer_text(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

Gaussian parse_gaussian(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ') text += c;
    if (text.empty()) throw Error(ErrorKind::Parse, "empty number");
    if (text.back() != 'i') return Gaussian(parse_rational(text));
    text.pop_back();
    size_t split = std::string::npos;
    for (size_t i = text.size(); i-- > 1;)
        if (text[i] == '+' || text[i] == '-') { split = i; break; }
    std::string re = split == std::string::npos ? "0" : text.substr(0, split);
    std::string im = split == std::string::npos ? text : text.substr(split);
    if (im.empty() || im == "+" || im == "-") im += "1";
    return Gaussian(parse_rational(re), parse_rational(im));
}

namespace {

template <bool Track>
void smith_impl(IntMatrix& d, IntMatrix* left, IntMatrix* right) {
    const Eigen::Index rows = d.rows(), cols = d.cols();
    auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        d.row(a).swap(d.row(b));
        if constexpr (Track) left->row(a).swap(left->row(b));
    };
    auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        d.col(a).swap(d.col(b));
        if constexpr (Track) right->col(a).swap(right->col(b));
    };
    // row[target] -= q * row[source]
    auto add_row = [&](Eigen::Index target, Eigen::Index source, const Integer& q) {
        for (Eigen::Index j = 0; j < cols; ++j)
            if (d(source, j) != 0) d(target, j) -= q * d(source, j);
        if constexpr (Track)
            for (Eigen::Index j = 0; j < rows; ++j)
                if ((*left)(source, j) != 0) (*left)(target, j) -= q * (*left)(source, j);
    };
    auto add_col = [&](Eigen::Index target, Eigen::Index source, const Integer& q) {
        for (Eigen::Index i = 0; i < rows; ++i)
            if (d(i, source) != 0) d(i, target) -= q * d(i, source);
        if constexpr (Track)
            for (Eigen::Index i = 0; i < cols; ++i)
                if ((*right)(i, source) != 0) (*right)(i, target) -= q * (*right)(i, source);
    };

    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            Eigen::Index pr = -1, pc = -1;
            Integer best = 0;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (d(i, j) != 0 && (pr < 0 || mp::abs(d(i, j)) < best)) {
                        best = mp::abs(d(i, j));
                        pr = i;
                        pc = j;
                        if (best == 1) goto found;
                    }
        found:
            if (pr < 0) return;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                add_row(i, t, q);
                if (d(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                add_col(j, t, q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) { bad = i; break; }
            if (bad < 0) break;
            add_row(t, bad, Integer(-1));
        }
        if (d(t, t) < 0) {
            d.row(t) *= Integer(-1);
            if constexpr (Track) left->row(t) *= Integer(-1);
        }
    }
}

SmithForm read_diagonal(const IntMatrix& d) {
    SmithForm out;
    for (Eigen::Index t = 0; t < std::min(d.rows(), d.cols()); ++t) {
        out.diagonal.push_back(d(t, t));
        if (d(t, t) != 0) ++out.rank;
    }
    return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix d = m;
    smith_impl<false>(d, nullptr, nullptr);
    return read_diagonal(d);
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix left = IntMatrix::Identity(m.rows(), m.rows());
    IntMatrix right = IntMatrix::Identity(m.cols(), m.cols());
    smith_impl<true>(d, &left, &right);
    return {read_diagonal(d), std::move(left), std::move(right)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
    auto dec = smith_decomposition(m);
    const Eigen::Index r = dec.form.rank;
    return dec.right.rightCols(m.cols() - r);
}

Mod2Matrix reduce_mod2(const IntMatrix& m) {
    Mod2Matrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mp::abs(m(i, j)) % 2 == 1 ? 1 : 0;
    return out;
}

namespace {

// Reduced row echelon form over Z/2; returns pivot columns.
std::vector<Eigen::Index> rref_mod2(Mod2Matrix& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Eigen::Index p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(r));
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != r && a(i, c)) a.row(i) = (a.row(i) + a.row(r)).unaryExpr([](int v) { return v & 1; });
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Eigen::Index rank_mod2(const IntMatrix& m) {
    Mod2Matrix a = reduce_mod2(m);
    return static_cast<Eigen::Index>(rref_mod2(a).size());
}

Mod2Matrix nullspace_mod2(const IntMatrix& m) {
    Mod2Matrix a = reduce_mod2(m);
    auto pivots = rref_mod2(a);
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0, k = 0; c < a.cols(); ++c) {
        if (k < static_cast<Eigen::Index>(pivots.size()) && pivots[k] == c) { ++k; continue; }
        free.push_back(c);
    }
    Mod2Matrix basis = Mod2Matrix::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
    for (size_t f = 0; f < free.size(); ++f) {
        basis(free[f], f) = 1;
        for (size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], f) = a(k, free[f]);
    }
    return basis;
}

bool solve_rational(const RatMatrix& m, const RatVector& b, RatVector& x) {
    RatMatrix a(m.rows(), m.cols() + 1);
    a << m, b;
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < m.cols() && r < a.rows(); ++c) {
        Eigen::Index p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.row(p).swap(a.row(r));
        Rational inv = Rational(1) / a(r, c);
        a.row(r) *= inv;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            Rational factor = a(i, c);
            if (i != r && factor != 0) a.row(i) -= factor * a.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    for (Eigen::Index i = r; i < a.rows(); ++i)
        if (a(i, m.cols()) != 0) return false;
    x = RatVector::Zero(m.cols());
    for (size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = a(static_cast<Eigen::Index>(k), m.cols());
    return true;
}

bool feasible_nonnegative(const RatMatrix& a, const RatVector& b) {
    const Eigen::Index m = a.rows(), n = a.cols();
    // tableau columns: n originals, m artificials, rhs
    RatMatrix t = RatMatrix::Zero(m + 1, n + m + 1);
    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        Rational sign = b(i) < 0 ? Rational(-1) : Rational(1);
        t.block(i, 0, 1, n) = a.row(i) * sign;
        t(i, n + i) = 1;
        t(i, n + m) = b(i) * sign;
        basis[i] = n + i;
    }
    for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
    for (Eigen::Index j = n; j < n + m; ++j) t(m, j) = 0;
    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n + m; ++j)
            if (t(m, j) < 0) { enter = j; break; }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        Rational best;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (t(i, enter) <= 0) continue;
            Rational ratio = t(i, n + m) / t(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) break;
        Rational pivot = t(leave, enter);
        t.row(leave) /= pivot;
        for (Eigen::Index i = 0; i <= m; ++i) {
            Rational factor = t(i, enter);
            if (i != leave && factor != 0) t.row(i) -= factor * t.row(leave);
        }
        basis[leave] = enter;
    }
    return t(m, n + m) == 0;
}

}  // namespace torus
