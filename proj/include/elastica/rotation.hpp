#ifndef ELASTICA_ROTATION_HPP
#define ELASTICA_ROTATION_HPP

// Proper rotations of R^3 and their action on symmetric tensors.
//
// Floating-point rotations come from Rodrigues' formula or Haar-uniform
// sampling (Shoemake's quaternion method).  Exact-mode rotations come from
// the Cayley transform of a rational skew matrix, which is exactly orthogonal
// with determinant +1 in Q(sqrt2).

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "linalg.hpp"
#include "sym_tensor.hpp"

namespace elastica {

template <class T>
class Rotation {
 public:
  // Validates g^T g = I and det g = +1 within `tol` (exact for Exact scalars).
  explicit Rotation(const Mat3<T>& g, double tol = 1e-9) : g_(g) {
    Mat3<T> gtg = g.transposed() * g;
    Mat3<T> id = Mat3<T>::identity();
    T dev2 = (gtg - id).frobenius2();
    T det_err = g.det() - ScalarTraits<T>::one();
    if constexpr (ScalarTraits<T>::is_exact) {
      if (!ScalarTraits<T>::is_zero(dev2) || !ScalarTraits<T>::is_zero(det_err))
        throw std::invalid_argument("Rotation: matrix is not a proper rotation");
    } else {
      if (to_double(dev2) > tol * tol || std::fabs(to_double(det_err)) > tol)
        throw std::invalid_argument("Rotation: matrix is not a proper rotation");
    }
  }

  static Rotation identity() { return Rotation(Mat3<T>::identity()); }

  const Mat3<T>& matrix() const { return g_; }
  const T& operator()(int i, int j) const { return g_(i, j); }

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(a.g_ * b.g_);
  }
  Rotation inverse() const { return Rotation(g_.transposed()); }

 private:
  Mat3<T> g_;
};

// Rodrigues rotation about `axis` (need not be unit, must be nonzero).
inline Rotation<double> rotation_from_axis_angle(const Vec3<double>& axis, double theta) {
  double n2 = to_double(axis.norm2());
  if (n2 <= 0.0) throw std::invalid_argument("rotation_from_axis_angle: zero axis");
  double inv = 1.0 / std::sqrt(n2);
  double x = axis[0] * inv, y = axis[1] * inv, z = axis[2] * inv;
  double c = std::cos(theta), s = std::sin(theta), k = 1.0 - c;
  Mat3<double> g;
  g(0, 0) = c + x * x * k;
  g(0, 1) = x * y * k - z * s;
  g(0, 2) = x * z * k + y * s;
  g(1, 0) = y * x * k + z * s;
  g(1, 1) = c + y * y * k;
  g(1, 2) = y * z * k - x * s;
  g(2, 0) = z * x * k - y * s;
  g(2, 1) = z * y * k + x * s;
  g(2, 2) = c + z * z * k;
  return Rotation<double>(g);
}

// Cayley transform of the skew matrix with axial vector w:
// R = (I - A)(I + A)^{-1}. Exactly proper-orthogonal for any scalar field.
template <class T>
Rotation<T> rotation_from_cayley(const Vec3<T>& w) {
  Mat3<T> a;  // skew(w)
  a(0, 1) = -w[2];
  a(1, 0) = w[2];
  a(0, 2) = w[1];
  a(2, 0) = -w[1];
  a(1, 2) = -w[0];
  a(2, 1) = w[0];
  Mat3<T> id = Mat3<T>::identity();
  return Rotation<T>((id - a) * (id + a).inverse());
}

namespace detail {

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Deterministic Haar-uniform rotation (double) / random Cayley rotation
// (exact mode) drawn from the seed.
template <class T = double>
Rotation<T> random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  if constexpr (ScalarTraits<T>::is_exact) {
    Vec3<T> w;
    for (int i = 0; i < 3; ++i) {
      auto num = static_cast<long long>(rng() % 17) - 8;
      auto den = static_cast<long long>(rng() % 7) + 1;
      w[i] = frac<T>(num, den);
    }
    return rotation_from_cayley(w);
  } else {
    const double two_pi = 6.283185307179586;
    double u1 = detail::unit_double(rng);
    double u2 = detail::unit_double(rng);
    double u3 = detail::unit_double(rng);
    double qw = std::sqrt(1.0 - u1) * std::sin(two_pi * u2);
    double qx = std::sqrt(1.0 - u1) * std::cos(two_pi * u2);
    double qy = std::sqrt(u1) * std::sin(two_pi * u3);
    double qz = std::sqrt(u1) * std::cos(two_pi * u3);
    Mat3<double> g;
    g(0, 0) = 1 - 2 * (qy * qy + qz * qz);
    g(0, 1) = 2 * (qx * qy - qz * qw);
    g(0, 2) = 2 * (qx * qz + qy * qw);
    g(1, 0) = 2 * (qx * qy + qz * qw);
    g(1, 1) = 1 - 2 * (qx * qx + qz * qz);
    g(1, 2) = 2 * (qy * qz - qx * qw);
    g(2, 0) = 2 * (qx * qz - qy * qw);
    g(2, 1) = 2 * (qy * qz + qx * qw);
    g(2, 2) = 1 - 2 * (qx * qx + qy * qy);
    return Rotation<double>(g);
  }
}

// ---------------------------------------------------------------------------
// Group action

template <class T>
Vec3<T> rotate(const Rotation<T>& g, const Vec3<T>& v) {
  return g.matrix() * v;
}

template <class T>
Mat3<T> rotate(const Rotation<T>& g, const Mat3<T>& a) {
  return g.matrix() * a * g.matrix().transposed();
}

template <class T>
SymTensor<T> rotate(const Rotation<T>& g, const SymTensor<T>& s) {
  const int n = s.order();
  if (n == 0) return s;
  SymTensor<T> out(n);
  std::array<int, kMaxOrder> j{};
  for (int slot = 0; slot < out.size(); ++slot) {
    auto tup = s.tuple(slot);
    T acc = ScalarTraits<T>::zero();
    // Sum over all 3^n source tuples.
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int k = n - 1; k >= 0; --k) {
        j[static_cast<std::size_t>(k)] = static_cast<int>(c % 3);
        c /= 3;
      }
      T w = ScalarTraits<T>::one();
      for (int k = 0; k < n; ++k)
        w *= g(tup[static_cast<std::size_t>(k)], j[static_cast<std::size_t>(k)]);
      acc += w * s.at(std::span<const int>(j.data(), static_cast<std::size_t>(n)));
    }
    out[slot] = acc;
  }
  return out;
}

}  // namespace elastica

#endif  // ELASTICA_ROTATION_HPP
