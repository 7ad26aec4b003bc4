#include "doctest.h"
#include "torus/exact.hpp"

#include <numeric>
#include <random>

using namespace torus;

namespace {

// Plain Gauss-Jordan over Q, independent of the fraction-free routine.
Eigen::Index naive_rank(RatMatrix m) {
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Eigen::Index p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.row(p).swap(m.row(r));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

IntMatrix random_int(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
    const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    std::vector<Integer> divisors{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<int> rs(k), cs(k);
        std::function<void(int, int)> pick_rows, pick_cols;
        pick_cols = [&](int slot, int from) {
            if (slot == k) {
                IntMatrix sub(k, k);
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
                g = gcd(g, abs(determinant(sub)));
                return;
            }
            for (int c = from; c < cols; ++c) { cs[slot] = c; pick_cols(slot + 1, c + 1); }
        };
        pick_rows = [&](int slot, int from) {
            if (slot == k) { pick_cols(0, 0); return; }
            for (int r = from; r < rows; ++r) { rs[slot] = r; pick_rows(slot + 1, r + 1); }
        };
        pick_rows(0, 0);
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

std::vector<Integer> nonzero(const SmithForm& s) {
    std::vector<Integer> out;
    for (auto& d : s.diagonal)
        if (d != 0) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("rational rank") {
    CHECK(rank(RatMatrix::Identity(2, 2)) == 2);
    CHECK(rank(RatMatrix::Zero(3, 4)) == 0);
    IntMatrix lambdas(10, 5);
    int row = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            lambdas.row(row).setZero();
            lambdas(row, i) = lambdas(row, j) = 1;
            ++row;
        }
    CHECK(rank(lambdas) == 5);
}

TEST_CASE("rank agrees with naive elimination and with the transpose") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
        IntMatrix m = random_int(rng, rows, cols, -2, 2);
        if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * Integer(3);
        RatMatrix q = m.cast<Rational>();
        CHECK(rank(q) == naive_rank(q));
        CHECK(rank(q) == rank(RatMatrix(q.transpose())));
        CHECK(rank(m) == naive_rank(q));
    }
}

TEST_CASE("determinant matches cofactor expansion on 3x3") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = random_int(rng, 3, 3, -5, 5);
        Integer expected = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(determinant(m) == expected);
    }
}

TEST_CASE("smith normal form fixtures") {
    IntMatrix d(2, 2);
    d << 2, 0, 0, 3;
    CHECK(nonzero(smith_normal_form(d)) == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix(0, 0)).diagonal.empty());
    IntMatrix rp2(1, 1);
    rp2 << 2;
    CHECK(nonzero(smith_normal_form(rp2)) == std::vector<Integer>{2});
}

TEST_CASE("smith normal form against determinantal divisors") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        IntMatrix m = random_int(rng, rows, cols, -6, 6);
        auto snf = smith_normal_form(m);
        CHECK(nonzero(snf) == invariant_factors_by_minors(m));
        CHECK(snf.rank == rank(m));
        for (size_t k = 1; k < snf.diagonal.size(); ++k)
            if (snf.diagonal[k] != 0) CHECK(snf.diagonal[k] % snf.diagonal[k - 1] == 0);
    }
}

TEST_CASE("smith decomposition transforms") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = random_int(rng, 2 + trial % 4, 2 + (trial / 4) % 4, -4, 4);
        auto dec = smith_decomposition(m);
        IntMatrix diag = dec.left * m * dec.right;
        for (Eigen::Index i = 0; i < diag.rows(); ++i)
            for (Eigen::Index j = 0; j < diag.cols(); ++j) {
                if (i == j && static_cast<size_t>(i) < dec.form.diagonal.size())
                    CHECK(diag(i, j) == dec.form.diagonal[i]);
                else
                    CHECK(diag(i, j) == 0);
            }
        CHECK(abs(determinant(dec.left)) == 1);
        CHECK(abs(determinant(dec.right)) == 1);
        IntMatrix kernel = integer_kernel(m);
        CHECK(kernel.cols() == m.cols() - rank(m));
        if (kernel.cols() > 0) CHECK((m * kernel).isZero());
    }
}

TEST_CASE("mod 2 nullspace against brute force") {
    CHECK(nullspace_mod2(IntMatrix::Identity(3, 3)).cols() == 0);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 8;
        IntMatrix m = random_int(rng, rows, cols, -3, 3);
        int solutions = 0;
        for (unsigned x = 0; x < (1u << cols); ++x) {
            bool zero = true;
            for (int i = 0; i < rows && zero; ++i) {
                Integer s = 0;
                for (int j = 0; j < cols; ++j)
                    if (x >> j & 1u) s += m(i, j);
                if (s % 2 != 0) zero = false;
            }
            solutions += zero;
        }
        auto basis = nullspace_mod2(m);
        CHECK((1 << basis.cols()) == solutions);
        CHECK(rank_mod2(m) + basis.cols() == cols);
        Mod2Matrix product = reduce_mod2(m) * basis;
        for (Eigen::Index i = 0; i < product.size(); ++i) CHECK(product(i) % 2 == 0);
    }
}

TEST_CASE("rational solve and feasibility") {
    RatMatrix a(2, 2);
    a << 1, 1, 1, -1;
    RatVector b(2);
    b << 3, 1;
    RatVector x;
    REQUIRE(solve_rational(a, b, x));
    CHECK(x(0) == 2);
    CHECK(x(1) == 1);
    RatMatrix singular(2, 2);
    singular << 1, 1, 2, 2;
    RatVector rhs(2);
    rhs << 1, 3;
    CHECK_FALSE(solve_rational(singular, rhs, x));

    RatMatrix row(1, 2);
    row << 1, 1;
    RatVector one(1);
    one << 1;
    CHECK(feasible_nonnegative(row, one));
    one << -1;
    CHECK_FALSE(feasible_nonnegative(row, one));
    RatMatrix two(2, 2);
    two << 1, -1, 1, 1;
    RatVector target(2);
    target << 3, 1;  // x = 2, y = -1
    CHECK_FALSE(feasible_nonnegative(two, target));
    target << 1, 3;
    CHECK(feasible_nonnegative(two, target));
}

TEST_CASE("render and parse round trips") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-50, 50), pos(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        Rational q(d(rng), pos(rng));
        CHECK(parse_rational(render(q)) == q);
        Gaussian z(Rational(d(rng), pos(rng)), Rational(d(rng), pos(rng)));
        CHECK(parse_gaussian(render(z)) == z);
    }
    CHECK(render(Rational(3, 1)) == "3");
    CHECK(render(Rational(-6, 4)) == "-3/2");
    CHECK(render(Gaussian(Rational(2), Rational(1))) == "2+1i");
    CHECK(render(Gaussian(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4i");
}
