#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <iterator>
#include <string>
#include <type_traits>

// Boost 1.74 probes every constructor argument with is_byte_container, which
// hard-errors on Eigen expressions (their const_iterator is void). Make the
// probe SFINAE-friendly: no iterator value_type means not a byte container.
namespace boost::multiprecision::detail {
template <class C>
struct is_byte_container_imp<C, true> {
 private:
  template <class T>
  static constexpr bool probe(typename std::iterator_traits<typename T::const_iterator>::value_type*) {
    using V = std::remove_cv_t<typename std::iterator_traits<typename T::const_iterator>::value_type>;
    return std::is_integral_v<V> && sizeof(V) == 1;
  }
  template <class T>
  static constexpr bool probe(...) {
    return false;
  }

 public:
  static const bool value = probe<C>(nullptr);
};
}  // namespace boost::multiprecision::detail

namespace trisect {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer used throughout the library.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Fixed 128-bit integer that throws std::overflow_error instead of wrapping.
using CheckedInt128 = mp::checked_int128_t;

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
int sign_of(const Scalar& a) {
  return a > 0 ? 1 : (a < 0 ? -1 : 0);
}

/// Representative of a modulo m in [0, m); m must be positive.
template <typename Scalar>
Scalar floor_mod(const Scalar& a, const Scalar& m) {
  Scalar r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor division for positive divisor.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& m) {
  return (a - floor_mod(a, m)) / m;
}

template <typename Scalar>
struct Bezout {
  Scalar gcd;  // always >= 0
  Scalar s;
  Scalar t;
};

/// Extended Euclid: s*a + t*b = gcd(a, b) with gcd >= 0.
template <typename Scalar>
Bezout<Scalar> extended_gcd(const Scalar& a, const Scalar& b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (r != 0) {
    const Scalar quotient = old_r / r;
    Scalar tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {Scalar(-old_r), Scalar(-old_s), Scalar(-old_t)};
  return {old_r, old_s, old_t};
}

template <typename Scalar>
Scalar gcd(const Scalar& a, const Scalar& b) {
  return extended_gcd(a, b).gcd;
}

/// Inverse of a modulo m (m >= 2, gcd(a, m) = 1), in [0, m).
template <typename Scalar>
Scalar mod_inverse(const Scalar& a, const Scalar& m) {
  const auto bz = extended_gcd(floor_mod(a, m), m);
  return floor_mod(bz.s, m);
}

template <typename Scalar>
std::string to_string(const Scalar& a) {
  if constexpr (std::is_integral_v<Scalar>) {
    return std::to_string(a);
  } else {
    return a.str();
  }
}

}  // namespace trisect
