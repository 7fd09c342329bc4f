#ifndef ELASTICA_LINALG_HPP
#define ELASTICA_LINALG_HPP

// Small fixed-size vector/matrix helpers over a generic scalar. Nothing here
// knows about tensors; it is plain 3x3 / 6x6 bookkeeping.

#include <array>
#include <stdexcept>

#include "scalar.hpp"

namespace elastica {

template <class T>
struct Vec3 {
  std::array<T, 3> v{ScalarTraits<T>::zero(), ScalarTraits<T>::zero(),
                     ScalarTraits<T>::zero()};

  T& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec3 operator*(const T& s, const Vec3& a) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = s * a[i];
    return r;
  }
  T dot(const Vec3& o) const { return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2]; }
  T norm2() const { return dot(*this); }
  Vec3 cross(const Vec3& o) const {
    Vec3 r;
    r[0] = v[1] * o.v[2] - v[2] * o.v[1];
    r[1] = v[2] * o.v[0] - v[0] * o.v[2];
    r[2] = v[0] * o.v[1] - v[1] * o.v[0];
    return r;
  }
};

template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};

  Mat3() {
    for (auto& row : m)
      for (auto& x : row) x = ScalarTraits<T>::zero();
  }

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r(i, i) = ScalarTraits<T>::one();
    return r;
  }
  static Mat3 diag(const T& a, const T& b, const T& c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }

  T& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const T& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
  }
  friend Mat3 operator*(const T& s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
    return r;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = ScalarTraits<T>::zero();
        for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Vec3<T> operator*(const Mat3& a, const Vec3<T>& x) {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i) {
      T s = ScalarTraits<T>::zero();
      for (int k = 0; k < 3; ++k) s += a(i, k) * x[k];
      r[i] = s;
    }
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return r;
  }
  T trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  T frobenius2() const {
    T s = ScalarTraits<T>::zero();
    for (const auto& row : m)
      for (const auto& x : row) s += x * x;
    return s;
  }

  Mat3 inverse() const {
    T d = det();
    if (ScalarTraits<T>::is_zero(d)) throw std::domain_error("Mat3: singular matrix");
    Mat3 adj;
    adj(0, 0) = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj(0, 1) = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj(0, 2) = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj(1, 0) = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj(1, 1) = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj(1, 2) = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj(2, 0) = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj(2, 1) = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj(2, 2) = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T inv_d = ScalarTraits<T>::one() / d;
    return inv_d * adj;
  }
};

// Commutator [a, b] = ab - ba.
template <class T>
Mat3<T> commutator(const Mat3<T>& a, const Mat3<T>& b) {
  return a * b - b * a;
}

// (eps : M)_i = eps_ijk M_jk -- extracts twice the axial vector of skew(M).
template <class T>
Vec3<T> epsilon_contract(const Mat3<T>& m) {
  Vec3<T> r;
  r[0] = m(1, 2) - m(2, 1);
  r[1] = m(2, 0) - m(0, 2);
  r[2] = m(0, 1) - m(1, 0);
  return r;
}

template <class T>
struct Mat6 {
  std::array<std::array<T, 6>, 6> m{};

  Mat6() {
    for (auto& row : m)
      for (auto& x : row) x = ScalarTraits<T>::zero();
  }

  T& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const T& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  friend Mat6 operator*(const Mat6& a, const Mat6& b) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        T s = ScalarTraits<T>::zero();
        for (int k = 0; k < 6; ++k) s += a(i, k) * b(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend bool operator==(const Mat6& a, const Mat6& b) { return a.m == b.m; }

  T trace() const {
    T s = ScalarTraits<T>::zero();
    for (int i = 0; i < 6; ++i) s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return s;
  }
  bool is_symmetric_exact() const {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
};

}  // namespace elastica

#endif  // ELASTICA_LINALG_HPP
