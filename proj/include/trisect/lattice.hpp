#pragma once

// Homology lattices of the torus (rank 2) and of the genus-2 surface (rank 4,
// symplectic basis alpha1, beta1, alpha2, beta2). Everything here is a free
// function over fixed-size Eigen integer matrices, templated on the scalar.

#include "trisect/integer.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace trisect {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

using Vector2i = Vector2<Integer>;
using Vector4i = Vector4<Integer>;
using Matrix2i = Matrix2<Integer>;
using Matrix4i = Matrix4<Integer>;

enum class LatticeErrorKind { NonPrimitive, ZeroVector };

class LatticeError : public std::domain_error {
 public:
  LatticeError(LatticeErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  LatticeErrorKind kind() const { return kind_; }

 private:
  LatticeErrorKind kind_;
};

namespace detail {
template <typename Derived>
constexpr void check_even_vector() {
  static_assert(Derived::ColsAtCompileTime == 1, "expected a column vector");
  static_assert(Derived::RowsAtCompileTime == 2 || Derived::RowsAtCompileTime == 4,
                "intersection pairing is defined on rank 2 and rank 4 lattices");
}
}  // namespace detail

/// Algebraic intersection number. On the torus this is the determinant
/// v.x*w.y - v.y*w.x; on the genus-2 lattice it is the sum over the two
/// symplectic blocks.
template <typename Derived1, typename Derived2>
typename Derived1::Scalar intersection(const Eigen::MatrixBase<Derived1>& v,
                                       const Eigen::MatrixBase<Derived2>& w) {
  detail::check_even_vector<Derived1>();
  static_assert(Derived1::RowsAtCompileTime == Derived2::RowsAtCompileTime);
  using Scalar = typename Derived1::Scalar;
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < v.size(); i += 2) {
    sum += v(i) * w(i + 1) - v(i + 1) * w(i);
  }
  return sum;
}

/// Dehn twist action on homology: x + k * (core . x) * core.
/// k = +1 is the right-handed twist t_core(x) = x - (x . core) core.
template <typename Derived1, typename Derived2>
typename Derived2::PlainObject transvection(const Eigen::MatrixBase<Derived1>& core,
                                            const typename Derived1::Scalar& k,
                                            const Eigen::MatrixBase<Derived2>& x) {
  using Scalar = typename Derived1::Scalar;
  const Scalar coefficient = k * intersection(core, x);
  typename Derived2::PlainObject result = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) result(i) += coefficient * core(i);
  return result;
}

/// Matrix of transvection(core, k, .) acting on column vectors.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, Derived::RowsAtCompileTime>
transvection_matrix(const Eigen::MatrixBase<Derived>& core, const typename Derived::Scalar& k) {
  using Scalar = typename Derived::Scalar;
  constexpr int n = Derived::RowsAtCompileTime;
  Eigen::Matrix<Scalar, n, n> m;
  for (int j = 0; j < n; ++j) {
    Eigen::Matrix<Scalar, n, 1> e = Eigen::Matrix<Scalar, n, 1>::Zero();
    e(j) = 1;
    m.col(j) = transvection(core, k, e);
  }
  return m;
}

/// gcd of the absolute values of the entries (0 for the zero vector).
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, Scalar(v(i)));
  return g;
}

template <typename Derived>
bool is_primitive(const Eigen::MatrixBase<Derived>& v) {
  return content(v) == 1;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <typename Scalar>
Scalar determinant(const Matrix2<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Inverse of a unimodular 2x2 matrix (det = +1 or -1).
template <typename Scalar>
Matrix2<Scalar> unimodular_inverse(const Matrix2<Scalar>& m) {
  const Scalar det = determinant(m);
  if (abs_value(det) != 1) throw std::invalid_argument("matrix is not unimodular");
  Matrix2<Scalar> inv;
  inv << m(1, 1) * det, -m(0, 1) * det, -m(1, 0) * det, m(0, 0) * det;
  return inv;
}

template <typename Scalar>
Matrix2<Scalar> upper_shear(const Scalar& j) {
  Matrix2<Scalar> s;
  s << 1, j, 0, 1;
  return s;
}

/// Completes a primitive v = (x, y) to M in SL(2,Z) with M v = (1, 0).
///
/// The second row is forced to (-y, x). The first row (s, t) solves
/// s x + t y = 1 and is canonicalized by reducing s into [0, |y|); any other
/// completion differs from this one by an upper shear.
template <typename Scalar>
Matrix2<Scalar> sl2_complete(const Vector2<Scalar>& v) {
  const Scalar& x = v(0);
  const Scalar& y = v(1);
  if (x == 0 && y == 0) throw LatticeError(LatticeErrorKind::ZeroVector, "sl2_complete: zero vector");
  Matrix2<Scalar> m;
  if (y == 0) {
    if (abs_value(x) != 1) throw LatticeError(LatticeErrorKind::NonPrimitive, "sl2_complete: vector is not primitive");
    m << x, 0, 0, x;
    return m;
  }
  const auto bz = extended_gcd(x, y);
  if (bz.gcd != 1) throw LatticeError(LatticeErrorKind::NonPrimitive, "sl2_complete: vector is not primitive");
  const Scalar s = floor_mod(bz.s, abs_value(y));
  const Scalar t = (Scalar(1) - s * x) / y;
  m << s, t, -y, x;
  return m;
}

/// Row Hermite normal form: row echelon form with positive pivots and the
/// entries above each pivot reduced into [0, pivot). Returns the rank.
template <typename Scalar, int Rows, int Cols>
int hermite_normal_form(Eigen::Matrix<Scalar, Rows, Cols>& a) {
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (int i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const auto bz = extended_gcd(Scalar(a(row, col)), Scalar(a(i, col)));
      const Scalar p = a(row, col) / bz.gcd;
      const Scalar q = a(i, col) / bz.gcd;
      for (int j = 0; j < a.cols(); ++j) {
        const Scalar top = a(row, j);
        const Scalar bottom = a(i, j);
        a(row, j) = bz.s * top + bz.t * bottom;
        a(i, j) = p * bottom - q * top;
      }
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) a.row(row) = -a.row(row);
    const Scalar pivot = a(row, col);
    for (int i = 0; i < row; ++i) {
      const Scalar factor = floor_div(Scalar(a(i, col)), pivot);
      if (factor != 0)
        for (int j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    ++row;
  }
  return row;
}

/// Symplectic basis (alpha1', beta1', alpha2', beta2') of the rank-4 lattice
/// whose first vector is a prescribed primitive class a. The complement block
/// (alpha2', beta2') is the homology of the surface surgered along a.
template <typename Scalar>
struct SymplecticBasis {
  Matrix4<Scalar> columns;  // alpha1', beta1', alpha2', beta2'

  Vector4<Scalar> alpha1() const { return columns.col(0); }
  Vector4<Scalar> beta1() const { return columns.col(1); }
  Vector4<Scalar> alpha2() const { return columns.col(2); }
  Vector4<Scalar> beta2() const { return columns.col(3); }

  /// Coordinates of w in this basis.
  Vector4<Scalar> coordinates(const Vector4<Scalar>& w) const {
    Vector4<Scalar> c;
    c << -intersection(beta1(), w), intersection(alpha1(), w), -intersection(beta2(), w),
        intersection(alpha2(), w);
    return c;
  }

  /// Class of w on the surgered torus. Well defined on a-orthogonal classes
  /// and independent of adding multiples of a.
  Vector2<Scalar> project(const Vector4<Scalar>& w) const {
    return Vector2<Scalar>(-intersection(beta2(), w), intersection(alpha2(), w));
  }

  /// Inverse of project on the complement block.
  Vector4<Scalar> lift(const Vector2<Scalar>& v) const { return v(0) * alpha2() + v(1) * beta2(); }
};

/// Builds a deterministic symplectic basis with alpha1' = a.
template <typename Scalar>
SymplecticBasis<Scalar> symplectic_reduce(const Vector4<Scalar>& a) {
  if (!is_primitive(a)) throw LatticeError(LatticeErrorKind::NonPrimitive, "symplectic_reduce: class is not primitive");

  // beta1': any w with a . w = 1, found by chaining extended gcds over the
  // coefficients of the functional w -> a . w.
  Vector4<Scalar> functional;
  for (int j = 0; j < 4; ++j) {
    Vector4<Scalar> e = Vector4<Scalar>::Zero();
    e(j) = 1;
    functional(j) = intersection(a, e);
  }
  Vector4<Scalar> beta = Vector4<Scalar>::Zero();
  Scalar g = 0;
  for (int j = 0; j < 4; ++j) {
    if (functional(j) == 0) continue;
    const auto bz = extended_gcd(g, Scalar(functional(j)));
    beta *= bz.s;
    beta(j) += bz.t;
    g = bz.gcd;
  }

  // Orthogonal complement of the hyperbolic plane <a, beta>: project the
  // standard basis and extract a lattice basis from the generators.
  Matrix4<Scalar> generators;
  for (int j = 0; j < 4; ++j) {
    Vector4<Scalar> e = Vector4<Scalar>::Zero();
    e(j) = 1;
    const Vector4<Scalar> p = e + intersection(beta, e) * a - intersection(a, e) * beta;
    generators.row(j) = p.transpose();
  }
  hermite_normal_form(generators);
  Vector4<Scalar> alpha2 = generators.row(0).transpose();
  Vector4<Scalar> beta2 = generators.row(1).transpose();
  if (intersection(alpha2, beta2) < 0) beta2 = -beta2;

  SymplecticBasis<Scalar> basis;
  basis.columns.col(0) = a;
  basis.columns.col(1) = beta;
  basis.columns.col(2) = alpha2;
  basis.columns.col(3) = beta2;
  return basis;
}

template <typename Derived>
std::string format_vector(const Eigen::MatrixBase<Derived>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(typename Derived::Scalar(v(i)));
  }
  return out + ")";
}

}  // namespace trisect
