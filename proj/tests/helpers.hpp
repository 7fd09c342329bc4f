#ifndef ELASTICA_TESTS_HELPERS_HPP
#define ELASTICA_TESTS_HELPERS_HPP

#include <random>

#include "elastica/covariants.hpp"
#include "elastica/harmonic.hpp"
#include "elastica/normal_forms.hpp"
#include "elastica/rotation.hpp"

namespace testing {

using elastica::Exact;
using elastica::Mat3;
using elastica::SymTensor;

template <class T>
T random_scalar(std::mt19937_64& rng) {
  if constexpr (elastica::ScalarTraits<T>::is_exact) {
    auto num = static_cast<long long>(rng() % 19) - 9;
    auto den = static_cast<long long>(rng() % 9) + 1;
    return Exact::rational(num, den);
  } else {
    return -2.0 + 4.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
}

template <class T>
SymTensor<T> random_sym_tensor(int order, std::mt19937_64& rng) {
  SymTensor<T> s(order);
  for (int k = 0; k < s.size(); ++k) s[k] = random_scalar<T>(rng);
  return s;
}

template <class T>
Mat3<T> random_sym2(std::mt19937_64& rng) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T v = random_scalar<T>(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

template <class T>
elastica::Harm4<T> random_harm4(std::mt19937_64& rng) {
  return elastica::Harm4<T>(
      elastica::harmonic_part_sym4(random_sym_tensor<T>(4, rng)), 1e-8);
}

template <class T>
elastica::Harm2<T> random_harm2(std::mt19937_64& rng) {
  return elastica::Harm2<T>(elastica::deviator(random_sym2<T>(rng)), 1e-8);
}

template <class T>
elastica::ElasticityTensor<T> random_elasticity(std::mt19937_64& rng) {
  elastica::Mat6<T> v;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      T x = random_scalar<T>(rng);
      v(p, q) = x;
      v(q, p) = x;
    }
  return elastica::ElasticityTensor<T>::from_voigt(v);
}

// Unit projector deviator t = (n (x) n)' from a random axis (double only).
inline elastica::Harm2<double> random_projector_deviator(std::mt19937_64& rng) {
  double x = random_scalar<double>(rng), y = random_scalar<double>(rng),
         z = random_scalar<double>(rng) + 0.1;
  double n = std::sqrt(x * x + y * y + z * z);
  x /= n;
  y /= n;
  z /= n;
  Mat3<double> p;
  double v[3] = {x, y, z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) = v[i] * v[j];
  return elastica::Harm2<double>(elastica::deviator(p));
}

inline bool close_rel(double a, double b, double rel = 1e-9) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= rel * scale;
}

}  // namespace testing

#endif  // ELASTICA_TESTS_HELPERS_HPP
