#ifndef ELASTICA_ELASTICITY_HPP
#define ELASTICA_ELASTICITY_HPP

// Harmonic (traceless symmetric) tensor wrappers and the elasticity tensor
// with its Kelvin 6x6 representation.
//
// Kelvin convention (pair order 11, 22, 33, 23, 13, 12): entries scale the
// raw components by f_P f_Q with f = (1, 1, 1, sqrt2, sqrt2, sqrt2), so the
// 6x6 Frobenius norm matches the fourth-order tensor norm.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "linalg.hpp"
#include "rotation.hpp"
#include "scalar.hpp"
#include "sym_tensor.hpp"

namespace elastica {

inline constexpr std::array<std::array<int, 2>, 6> kVoigtPairs = {
    {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};

inline int voigt_index(int i, int j) {
  if (i == j) return i;
  int s = i + j;         // 0+1 -> 5, 0+2 -> 4, 1+2 -> 3
  return (s == 3) ? 3 : (s == 2 ? 4 : 5);
}

template <class T>
T kelvin_factor(int p) {
  return p < 3 ? ScalarTraits<T>::one() : ScalarTraits<T>::sqrt2();
}

// f_P * f_Q computed without the sqrt2 * sqrt2 rounding artifact.
template <class T>
T kelvin_factor_product(int p, int q) {
  int n = (p >= 3 ? 1 : 0) + (q >= 3 ? 1 : 0);
  if (n == 0) return ScalarTraits<T>::one();
  if (n == 1) return ScalarTraits<T>::sqrt2();
  return T(2);
}

// ---------------------------------------------------------------------------

// `scale2` is an absolute squared-norm floor for the traceless check, used
// when the tensor is a small piece of a larger computation (e.g. a deviator
// extracted from a big elasticity tensor); defaults to the tensor's own norm.

template <class T>
class Harm2 {
 public:
  Harm2() : a_(2) {}
  explicit Harm2(const SymTensor<T>& a, double tol = 1e-10, double scale2 = 0.0)
      : a_(a) {
    if (a.order() != 2) throw std::invalid_argument("Harm2: order != 2");
    if constexpr (ScalarTraits<T>::is_exact) {
      if (!ScalarTraits<T>::is_zero(trace_sym2(a)))
        throw std::invalid_argument("Harm2: trace != 0");
    } else {
      double t = to_double(trace_sym2(a));
      double floor2 = std::max(scale2, to_double(elastica::norm2(a))) + 1e-300;
      if (t * t > tol * tol * floor2)
        throw std::invalid_argument("Harm2: not traceless");
    }
  }
  explicit Harm2(const Mat3<T>& m, double tol = 1e-10, double scale2 = 0.0)
      : Harm2(sym2_from_mat(m), tol, scale2) {}

  const SymTensor<T>& tensor() const { return a_; }
  Mat3<T> mat() const { return mat_from_sym2(a_); }
  T norm2() const { return elastica::norm2(a_); }

 private:
  SymTensor<T> a_;
};

template <class T>
class Harm4 {
 public:
  Harm4() : h_(4) {}
  explicit Harm4(const SymTensor<T>& h, double tol = 1e-10, double scale2 = 0.0)
      : h_(h) {
    if (h.order() != 4) throw std::invalid_argument("Harm4: order != 4");
    T r2 = elastica::norm2(trace_contract(h));
    if constexpr (ScalarTraits<T>::is_exact) {
      if (!ScalarTraits<T>::is_zero(r2)) throw std::invalid_argument("Harm4: trace != 0");
    } else {
      double floor2 = std::max(scale2, to_double(elastica::norm2(h))) + 1e-300;
      if (to_double(r2) > tol * tol * floor2)
        throw std::invalid_argument("Harm4: not traceless");
    }
  }

  const SymTensor<T>& tensor() const { return h_; }
  T norm2() const { return elastica::norm2(h_); }

  const T& at(std::initializer_list<int> idx) const { return h_.at(idx); }

 private:
  SymTensor<T> h_;
};

template <class T>
Harm2<T> rotate(const Rotation<T>& g, const Harm2<T>& a) {
  return Harm2<T>(rotate(g, a.tensor()));
}
template <class T>
Harm4<T> rotate(const Rotation<T>& g, const Harm4<T>& h) {
  return Harm4<T>(rotate(g, h.tensor()));
}

// ---------------------------------------------------------------------------
// Kelvin matrix of a fourth-order harmonic tensor, and its validated inverse.

template <class T>
Mat6<T> kelvin_matrix(const Harm4<T>& h) {
  Mat6<T> m;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      auto [i, j] = kVoigtPairs[static_cast<std::size_t>(p)];
      auto [k, l] = kVoigtPairs[static_cast<std::size_t>(q)];
      m(p, q) = kelvin_factor_product<T>(p, q) * h.at({i, j, k, l});
    }
  return m;
}

// Rebuilds a Harm4 from its Kelvin matrix. Rejects asymmetric matrices and
// matrices violating total symmetry / the harmonic trace relations.
template <class T>
Harm4<T> harm4_from_kelvin(const Mat6<T>& m, double tol = 1e-9) {
  double scale2 = 1e-300;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) scale2 += to_double(m(p, q) * m(p, q));
  auto close = [&](const T& x, const T& y) {
    if constexpr (ScalarTraits<T>::is_exact) {
      return x == y;
    } else {
      double d = to_double(x - y);
      return d * d <= tol * tol * scale2;
    }
  };
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      if (!close(m(p, q), m(q, p)))
        throw std::invalid_argument("harm4_from_kelvin: matrix not symmetric");

  const T s2 = ScalarTraits<T>::sqrt2();
  const T two = T(2);
  SymTensor<T> h(4);
  h.set({0, 0, 1, 1}, m(0, 1));
  h.set({0, 0, 2, 2}, m(0, 2));
  h.set({1, 1, 2, 2}, m(1, 2));
  h.set({0, 0, 0, 0}, -(m(0, 1) + m(0, 2)));
  h.set({1, 1, 1, 1}, -(m(0, 1) + m(1, 2)));
  h.set({2, 2, 2, 2}, -(m(0, 2) + m(1, 2)));
  h.set({0, 0, 1, 2}, m(0, 3) / s2);
  h.set({1, 1, 1, 2}, m(1, 3) / s2);
  h.set({0, 1, 1, 2}, m(1, 4) / s2);
  h.set({0, 1, 2, 2}, m(2, 5) / s2);
  h.set({0, 2, 2, 2}, m(2, 4) / s2);
  h.set({0, 0, 0, 1}, m(0, 5) / s2);
  h.set({1, 2, 2, 2}, -(m(0, 3) / s2 + m(1, 3) / s2));
  h.set({0, 0, 0, 2}, -(m(1, 4) / s2 + m(2, 4) / s2));
  h.set({0, 1, 1, 1}, -(m(0, 5) / s2 + m(2, 5) / s2));

  // Redundant slots must agree with the rebuilt tensor.
  struct Check {
    int p, q;
    std::array<int, 4> idx;
    bool sqrt2;  // true: entry = sqrt2 * comp; false: entry = 2 * comp
  };
  static const Check checks[] = {
      {3, 3, {1, 1, 2, 2}, false}, {4, 4, {0, 0, 2, 2}, false},
      {5, 5, {0, 0, 1, 1}, false}, {3, 4, {0, 1, 2, 2}, false},
      {3, 5, {0, 1, 1, 2}, false}, {4, 5, {0, 0, 1, 2}, false},
      {0, 0, {0, 0, 0, 0}, false}, {1, 1, {1, 1, 1, 1}, false},
      {2, 2, {2, 2, 2, 2}, false}, {2, 3, {1, 2, 2, 2}, true},
      {0, 4, {0, 0, 0, 2}, true},  {1, 5, {0, 1, 1, 1}, true},
  };
  for (const auto& c : checks) {
    T comp = h.at(std::span<const int>(c.idx.data(), 4));
    T expect = c.sqrt2 ? s2 * comp
                       : ((c.p < 3 && c.q < 3) ? comp : two * comp);
    if (!close(m(c.p, c.q), expect))
      throw std::invalid_argument(
          "harm4_from_kelvin: matrix violates the harmonic relations");
  }
  return Harm4<T>(h, tol * 10, scale2);
}

// ---------------------------------------------------------------------------

template <class T>
class ElasticityTensor {
 public:
  ElasticityTensor() = default;

  // 6x6 Kelvin matrix (with the sqrt2 / 2 factors already applied).
  static ElasticityTensor from_kelvin(const Mat6<T>& m, double tol = 1e-9) {
    check_symmetric(m, tol);
    ElasticityTensor e;
    e.k_ = symmetrized(m);
    return e;
  }

  // 6x6 matrix of raw components E_ijkl (no factors).
  static ElasticityTensor from_voigt(const Mat6<T>& m, double tol = 1e-9) {
    check_symmetric(m, tol);
    Mat6<T> k = symmetrized(m);
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q)
        k(p, q) = kelvin_factor_product<T>(p, q) * k(p, q);
    ElasticityTensor e;
    e.k_ = k;
    return e;
  }

  static ElasticityTensor embed(const Harm4<T>& h) {
    ElasticityTensor e;
    e.k_ = kelvin_matrix(h);
    return e;
  }

  const Mat6<T>& kelvin() const { return k_; }
  Mat6<T> voigt() const {
    Mat6<T> m = k_;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q)
        m(p, q) = m(p, q) / (kelvin_factor_product<T>(p, q));
    return m;
  }

  // Component accessor honouring minor and major symmetries.
  T operator()(int i, int j, int k, int l) const {
    int p = voigt_index(i, j), q = voigt_index(k, l);
    return k_(p, q) / (kelvin_factor_product<T>(p, q));
  }

  // Dilatation trace d_ij = E_kkij.
  Mat3<T> dilatation() const {
    Mat3<T> d;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        T acc = ScalarTraits<T>::zero();
        for (int k = 0; k < 3; ++k) acc += (*this)(k, k, i, j);
        d(i, j) = acc;
        d(j, i) = acc;
      }
    return d;
  }

  // Voigt trace v_ij = E_kikj.
  Mat3<T> voigt_trace() const {
    Mat3<T> v;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        T acc = ScalarTraits<T>::zero();
        for (int k = 0; k < 3; ++k) acc += (*this)(k, i, k, j);
        v(i, j) = acc;
        v(j, i) = acc;
      }
    return v;
  }

  // Totally symmetric part E^s.
  SymTensor<T> symmetric_part() const {
    SymTensor<T> out(4);
    std::array<int, kMaxOrder> p{};
    for (int s = 0; s < out.size(); ++s) {
      p = out.tuple(s);
      T acc = ScalarTraits<T>::zero();
      int count = 0;
      do {
        acc += (*this)(p[0], p[1], p[2], p[3]);
        ++count;
      } while (std::next_permutation(p.begin(), p.begin() + 4));
      out[s] = frac<T>(1, count) * acc;
    }
    return out;
  }

  // Squared Frobenius norm of the fourth-order tensor; the Kelvin matrix is
  // an isometry so this is just its matrix norm.
  T norm2() const {
    T acc = ScalarTraits<T>::zero();
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) acc += k_(p, q) * k_(p, q);
    return acc;
  }

  friend ElasticityTensor operator+(const ElasticityTensor& a, const ElasticityTensor& b) {
    ElasticityTensor r;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) r.k_(p, q) = a.k_(p, q) + b.k_(p, q);
    return r;
  }
  friend ElasticityTensor operator-(const ElasticityTensor& a, const ElasticityTensor& b) {
    ElasticityTensor r;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) r.k_(p, q) = a.k_(p, q) - b.k_(p, q);
    return r;
  }
  friend ElasticityTensor operator*(const T& c, const ElasticityTensor& a) {
    ElasticityTensor r;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) r.k_(p, q) = c * a.k_(p, q);
    return r;
  }

 private:
  static void check_symmetric(const Mat6<T>& m, double tol) {
    double scale2 = 1e-300;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) scale2 += to_double(m(p, q) * m(p, q));
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        T d = m(p, q) - m(q, p);
        if constexpr (ScalarTraits<T>::is_exact) {
          if (!ScalarTraits<T>::is_zero(d))
            throw std::invalid_argument("ElasticityTensor: matrix not symmetric");
        } else {
          double dd = to_double(d);
          if (dd * dd > tol * tol * scale2)
            throw std::invalid_argument("ElasticityTensor: matrix not symmetric");
        }
      }
  }
  static Mat6<T> symmetrized(const Mat6<T>& m) {
    Mat6<T> r;
    const T half = frac<T>(1, 2);
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) r(p, q) = half * (m(p, q) + m(q, p));
    return r;
  }

  Mat6<T> k_;
};

template <class T>
ElasticityTensor<T> rotate(const Rotation<T>& g, const ElasticityTensor<T>& e) {
  Mat6<T> k;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      auto [i, j] = kVoigtPairs[static_cast<std::size_t>(p)];
      auto [k2, l] = kVoigtPairs[static_cast<std::size_t>(q)];
      T acc = ScalarTraits<T>::zero();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
              T w = g(i, a) * g(j, b) * g(k2, c) * g(l, d);
              acc += w * e(a, b, c, d);
            }
      T v = kelvin_factor_product<T>(p, q) * acc;
      k(p, q) = v;
      k(q, p) = v;
    }
  ElasticityTensor<T> out = ElasticityTensor<T>::from_kelvin(k, 1.0);
  return out;
}

}  // namespace elastica

#endif  // ELASTICA_ELASTICITY_HPP
