#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <ostream>
#include <string>
#include <vector>

namespace torus {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

// Complex number over an exact real field.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r) {}
    Complex(long r) : re(r) {}
    Complex(long long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Real norm2() const { return re * re + im * im; }
    Complex conj() const { return {re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.norm2();
        Complex n = a * b.conj();
        return {n.re / d, n.im / d};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

using Gaussian = Complex<Rational>;

std::string render(const Integer& z);
std::string render(const Rational& q);
std::string render(const Gaussian& z);
Rational parse_rational(const std::string& text);
Gaussian parse_gaussian(const std::string& text);
inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << render(z); }

// Rank over the fraction field by fraction-free (Bareiss) elimination.
template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> m = input;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Scalar prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = r;
        while (pivot < rows && m(pivot, c) == Scalar(0)) ++pivot;
        if (pivot == rows) continue;
        m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = Scalar(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

// Determinant by fraction-free elimination.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> m = input;
    const Eigen::Index n = m.rows();
    Scalar prev(1), sign(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != k) {
            m.row(pivot).swap(m.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n == 0 ? Scalar(1) : sign * m(n - 1, n - 1);
}

struct SmithForm {
    std::vector<Integer> diagonal;  // invariant factors d1 | d2 | ..., zeros last
    Eigen::Index rank = 0;
};

struct SmithDecomposition {
    SmithForm form;
    IntMatrix left;   // unimodular, left * m * right = diag
    IntMatrix right;  // unimodular
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_decomposition(const IntMatrix& m);

// Z-basis of the integer kernel, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

using Mod2Matrix = Matrix<int>;
Mod2Matrix reduce_mod2(const IntMatrix& m);
Eigen::Index rank_mod2(const IntMatrix& m);
// Basis of the kernel of m over Z/2, as columns with entries 0/1.
Mod2Matrix nullspace_mod2(const IntMatrix& m);

// Exact rational solution of m x = b when one exists.
bool solve_rational(const RatMatrix& m, const RatVector& b, RatVector& x);

// True iff {x >= 0 : a x = b} is nonempty, by exact phase-one simplex with Bland's rule.
bool feasible_nonnegative(const RatMatrix& a, const RatVector& b);

}  // namespace torus

namespace Eigen {
template <>
struct NumTraits<torus::Gaussian> : GenericNumTraits<torus::Gaussian> {
    using Real = torus::Rational;
    using NonInteger = torus::Gaussian;
    using Nested = torus::Gaussian;
    using Literal = torus::Gaussian;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 16,
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
