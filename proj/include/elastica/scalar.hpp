#ifndef ELASTICA_SCALAR_HPP
#define ELASTICA_SCALAR_HPP

// Scalar abstraction: the library is generic over the component type.
// Supported scalars are `double` (runtime) and `Exact` (Q(sqrt2), used by the
// oracle-grade tests and by the CLI --exact mode).

#include <cmath>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "exact.hpp"

namespace elastica {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double frac(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double sqrt2() { return 1.4142135623730951; }
  static double from_exact(const Exact& x) { return x.to_double(); }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarTraits<Exact> {
  static constexpr bool is_exact = true;
  static Exact zero() { return Exact(0); }
  static Exact one() { return Exact(1); }
  static Exact frac(long long p, long long q) { return Exact::rational(p, q); }
  static Exact sqrt2() { return Exact::sqrt2(); }
  static Exact from_exact(const Exact& x) { return x; }
  static double to_double(const Exact& x) { return x.to_double(); }
  static Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }
  static bool is_zero(const Exact& x) { return x.is_zero(); }
};

// Convenience shorthands used throughout.
template <class T>
T frac(long long p, long long q) {
  return ScalarTraits<T>::frac(p, q);
}

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

}  // namespace elastica

#endif  // ELASTICA_SCALAR_HPP
