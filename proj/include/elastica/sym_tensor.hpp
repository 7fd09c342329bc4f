#ifndef ELASTICA_SYM_TENSOR_HPP
#define ELASTICA_SYM_TENSOR_HPP

// Totally symmetric tensors over R^3 up to order 6, stored densely on
// canonical non-decreasing multi-indices (1, 3, 6, 10, 15, 21, 28 components
// for orders 0..6). Component lookup accepts any index permutation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace elastica {

inline constexpr int kMaxOrder = 6;
inline constexpr int kMaxSlots = 28;  // C(6+2, 2)

namespace detail {

struct MultisetTables {
  struct PerOrder {
    int count = 0;
    // Sorted index tuple per slot (only the first `order` entries are used).
    std::array<std::array<std::int8_t, kMaxOrder>, kMaxSlots> tuple{};
    // Number of distinct arrangements of the tuple: order! / prod(counts!).
    std::array<int, kMaxSlots> mult{};
    // Slot lookup from occurrence counts of indices 0 and 1.
    std::array<std::array<std::int8_t, kMaxOrder + 1>, kMaxOrder + 1> slot{};
  };

  std::array<PerOrder, kMaxOrder + 1> order;

  MultisetTables() {
    for (int n = 0; n <= kMaxOrder; ++n) {
      auto& po = order[static_cast<std::size_t>(n)];
      for (auto& row : po.slot) row.fill(-1);
      std::array<std::int8_t, kMaxOrder> idx{};
      build(po, n, 0, 0, idx);
    }
  }

  static const MultisetTables& get() {
    static const MultisetTables tables;
    return tables;
  }

 private:
  static void build(PerOrder& po, int n, int pos, int min_v,
                    std::array<std::int8_t, kMaxOrder>& idx) {
    if (pos == n) {
      int c0 = 0, c1 = 0;
      for (int k = 0; k < n; ++k) {
        if (idx[static_cast<std::size_t>(k)] == 0) ++c0;
        if (idx[static_cast<std::size_t>(k)] == 1) ++c1;
      }
      int s = po.count++;
      po.tuple[static_cast<std::size_t>(s)] = idx;
      po.mult[static_cast<std::size_t>(s)] =
          factorial(n) / (factorial(c0) * factorial(c1) * factorial(n - c0 - c1));
      po.slot[static_cast<std::size_t>(c0)][static_cast<std::size_t>(c1)] =
          static_cast<std::int8_t>(s);
      return;
    }
    for (int v = min_v; v < 3; ++v) {
      idx[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(v);
      build(po, n, pos + 1, v, idx);
    }
  }

  static int factorial(int n) {
    int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
  }
};

inline constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;  // even cyclic of (0,1,2) -> +1
}

}  // namespace detail

template <class T>
class SymTensor {
 public:
  explicit SymTensor(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("SymTensor: unsupported order");
    components_.fill(ScalarTraits<T>::zero());
  }

  int order() const { return order_; }
  int size() const { return tables().count; }

  T& operator[](int slot) { return components_[static_cast<std::size_t>(slot)]; }
  const T& operator[](int slot) const {
    return components_[static_cast<std::size_t>(slot)];
  }

  int slot_of(std::span<const int> idx) const {
    int c0 = 0, c1 = 0;
    for (int v : idx) {
      if (v < 0 || v > 2) throw std::out_of_range("SymTensor: index out of range");
      if (v == 0) ++c0;
      if (v == 1) ++c1;
    }
    return tables().slot[static_cast<std::size_t>(c0)][static_cast<std::size_t>(c1)];
  }

  const T& at(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw std::invalid_argument("SymTensor: wrong index count");
    return components_[static_cast<std::size_t>(slot_of(idx))];
  }
  const T& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  void set(std::initializer_list<int> idx, const T& v) {
    std::span<const int> s(idx.begin(), idx.size());
    if (static_cast<int>(s.size()) != order_)
      throw std::invalid_argument("SymTensor: wrong index count");
    components_[static_cast<std::size_t>(slot_of(s))] = v;
  }

  // Sorted canonical tuple and arrangement count for a slot.
  std::array<int, kMaxOrder> tuple(int slot) const {
    std::array<int, kMaxOrder> t{};
    const auto& src = tables().tuple[static_cast<std::size_t>(slot)];
    for (int k = 0; k < order_; ++k) t[static_cast<std::size_t>(k)] = src[static_cast<std::size_t>(k)];
    return t;
  }
  int multiplicity(int slot) const { return tables().mult[static_cast<std::size_t>(slot)]; }

  friend SymTensor operator+(const SymTensor& a, const SymTensor& b) {
    a.check_same_order(b);
    SymTensor r(a.order_);
    for (int s = 0; s < a.size(); ++s) r[s] = a[s] + b[s];
    return r;
  }
  friend SymTensor operator-(const SymTensor& a, const SymTensor& b) {
    a.check_same_order(b);
    SymTensor r(a.order_);
    for (int s = 0; s < a.size(); ++s) r[s] = a[s] - b[s];
    return r;
  }
  friend SymTensor operator*(const T& c, const SymTensor& a) {
    SymTensor r(a.order_);
    for (int s = 0; s < a.size(); ++s) r[s] = c * a[s];
    return r;
  }
  SymTensor operator-() const {
    SymTensor r(order_);
    for (int s = 0; s < size(); ++s) r[s] = -components_[static_cast<std::size_t>(s)];
    return r;
  }

 private:
  const detail::MultisetTables::PerOrder& tables() const {
    return detail::MultisetTables::get().order[static_cast<std::size_t>(order_)];
  }
  void check_same_order(const SymTensor& o) const {
    if (order_ != o.order_) throw std::invalid_argument("SymTensor: order mismatch");
  }

  int order_;
  std::array<T, kMaxSlots> components_;
};

// ---------------------------------------------------------------------------
// Constants and conversions

template <class T>
SymTensor<T> metric_q() {
  SymTensor<T> q(2);
  q.set({0, 0}, ScalarTraits<T>::one());
  q.set({1, 1}, ScalarTraits<T>::one());
  q.set({2, 2}, ScalarTraits<T>::one());
  return q;
}

template <class T>
SymTensor<T> sym2_from_mat(const Mat3<T>& m) {
  SymTensor<T> a(2);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) a.set({i, j}, m(i, j));
  return a;
}

template <class T>
Mat3<T> mat_from_sym2(const SymTensor<T>& a) {
  if (a.order() != 2) throw std::invalid_argument("mat_from_sym2: order != 2");
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a.at({i, j});
  return m;
}

template <class T>
SymTensor<T> sym_from_vec(const Vec3<T>& v) {
  SymTensor<T> a(1);
  for (int i = 0; i < 3; ++i) a.set({i}, v[i]);
  return a;
}

// ---------------------------------------------------------------------------
// Core operations

// Total symmetrization of a dense order-n tensor given in row-major layout
// (index tuple (i1..in) at offset sum i_k 3^(n-1-k)).
template <class T>
SymTensor<T> symmetrize(int order, std::span<const T> dense) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("symmetrize: unsupported order");
  std::size_t expect = 1;
  for (int k = 0; k < order; ++k) expect *= 3;
  if (dense.size() != expect) throw std::invalid_argument("symmetrize: wrong size");

  SymTensor<T> out(order);
  for (int s = 0; s < out.size(); ++s) {
    auto tup = out.tuple(s);
    T acc = ScalarTraits<T>::zero();
    int count = 0;
    std::array<int, kMaxOrder> p = tup;
    do {
      std::size_t off = 0;
      for (int k = 0; k < order; ++k) off = off * 3 + static_cast<std::size_t>(p[static_cast<std::size_t>(k)]);
      acc += dense[off];
      ++count;
    } while (std::next_permutation(p.begin(), p.begin() + order));
    out[s] = frac<T>(1, count) * acc;
  }
  return out;
}

// Symmetric tensor product S1 (.) S2 = (S1 (x) S2)^s.
template <class T>
SymTensor<T> sym_product(const SymTensor<T>& s1, const SymTensor<T>& s2) {
  const int n1 = s1.order(), n2 = s2.order(), n = n1 + n2;
  if (n > kMaxOrder) throw std::invalid_argument("sym_product: resulting order > 6");
  SymTensor<T> out(n);
  for (int s = 0; s < out.size(); ++s) {
    auto tup = out.tuple(s);
    T acc = ScalarTraits<T>::zero();
    int count = 0;
    std::array<int, kMaxOrder> p = tup;
    do {
      acc += s1.at(std::span<const int>(p.data(), static_cast<std::size_t>(n1))) *
             s2.at(std::span<const int>(p.data() + n1, static_cast<std::size_t>(n2)));
      ++count;
    } while (std::next_permutation(p.begin(), p.begin() + n));
    out[s] = frac<T>(1, count) * acc;
  }
  return out;
}

// Generalized cross product S1 x S2 = (S2 . eps . S1)^s, contracting the last
// index of S2 with the first index of eps and the last index of eps with the
// first index of S1. For vectors this is the classical cross product.
template <class T>
SymTensor<T> cross_product(const SymTensor<T>& s1, const SymTensor<T>& s2) {
  const int n1 = s1.order(), n2 = s2.order();
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("cross_product: scalar argument");
  const int n = n1 + n2 - 1;
  if (n > kMaxOrder) throw std::invalid_argument("cross_product: resulting order > 6");
  SymTensor<T> out(n);
  std::array<int, kMaxOrder> i1{};
  std::array<int, kMaxOrder> i2{};
  for (int s = 0; s < out.size(); ++s) {
    auto tup = out.tuple(s);
    T acc = ScalarTraits<T>::zero();
    int count = 0;
    std::array<int, kMaxOrder> p = tup;
    do {
      // Split the arrangement as (J[n2-1], b, I[n1-1]).
      const int b = p[static_cast<std::size_t>(n2 - 1)];
      T term = ScalarTraits<T>::zero();
      for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 3; ++c) {
          const int e = detail::levi_civita(a, b, c);
          if (e == 0) continue;
          for (int k = 0; k < n2 - 1; ++k) i2[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)];
          i2[static_cast<std::size_t>(n2 - 1)] = a;
          i1[0] = c;
          for (int k = 1; k < n1; ++k) i1[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(n2 - 1 + k)];
          T prod = s2.at(std::span<const int>(i2.data(), static_cast<std::size_t>(n2))) *
                   s1.at(std::span<const int>(i1.data(), static_cast<std::size_t>(n1)));
          term += (e > 0) ? prod : -prod;
        }
      }
      acc += term;
      ++count;
    } while (std::next_permutation(p.begin(), p.begin() + n));
    out[s] = frac<T>(1, count) * acc;
  }
  return out;
}

// Trace over (any) two indices: order n -> n-2.
template <class T>
SymTensor<T> trace_contract(const SymTensor<T>& s) {
  const int n = s.order();
  if (n < 2) throw std::invalid_argument("trace_contract: order < 2");
  SymTensor<T> out(n - 2);
  std::array<int, kMaxOrder> idx{};
  for (int slot = 0; slot < out.size(); ++slot) {
    auto tup = out.tuple(slot);
    for (int k = 0; k < n - 2; ++k) idx[static_cast<std::size_t>(k)] = tup[static_cast<std::size_t>(k)];
    T acc = ScalarTraits<T>::zero();
    for (int k = 0; k < 3; ++k) {
      idx[static_cast<std::size_t>(n - 2)] = k;
      idx[static_cast<std::size_t>(n - 1)] = k;
      acc += s.at(std::span<const int>(idx.data(), static_cast<std::size_t>(n)));
    }
    out[slot] = acc;
  }
  return out;
}

template <class T>
T trace_sym2(const SymTensor<T>& a) {
  return a.at({0, 0}) + a.at({1, 1}) + a.at({2, 2});
}

// Deviatoric part of a second-order tensor: a - (tr a / 3) q.
template <class T>
SymTensor<T> deviator(const SymTensor<T>& a) {
  if (a.order() != 2) throw std::invalid_argument("deviator: order != 2");
  return a - (frac<T>(1, 3) * trace_sym2(a)) * metric_q<T>();
}

template <class T>
Mat3<T> deviator(const Mat3<T>& a) {
  T third = frac<T>(1, 3) * a.trace();
  Mat3<T> r = a;
  for (int i = 0; i < 3; ++i) r(i, i) = r(i, i) - third;
  return r;
}

// Full contraction of two equal-order tensors.
template <class T>
T dot(const SymTensor<T>& a, const SymTensor<T>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("dot: order mismatch");
  T acc = ScalarTraits<T>::zero();
  for (int s = 0; s < a.size(); ++s)
    acc += T(a.multiplicity(s)) * a[s] * b[s];
  return acc;
}

template <class T>
T norm2(const SymTensor<T>& a) {
  return dot(a, a);
}

// Gram contraction over r shared trailing indices:
// R_ij = sum_K mult(K) S1[{i} u K] S2[{j} u K];  used for d2 = H (:.) H.
template <class T>
Mat3<T> gram_contract3(const SymTensor<T>& s1, const SymTensor<T>& s2) {
  if (s1.order() != 4 || s2.order() != 4)
    throw std::invalid_argument("gram_contract3: order-4 inputs expected");
  Mat3<T> r;
  const auto& tables = detail::MultisetTables::get().order[3];
  std::array<int, 4> idx{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      T acc = ScalarTraits<T>::zero();
      for (int s = 0; s < tables.count; ++s) {
        for (int k = 0; k < 3; ++k) idx[static_cast<std::size_t>(k + 1)] = tables.tuple[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
        idx[0] = i;
        T v1 = s1.at(std::span<const int>(idx.data(), 4));
        idx[0] = j;
        T v2 = s2.at(std::span<const int>(idx.data(), 4));
        acc += T(tables.mult[static_cast<std::size_t>(s)]) * v1 * v2;
      }
      r(i, j) = acc;
      r(j, i) = acc;
    }
  }
  return r;
}

// Order-4 tensor applied to a second-order tensor: (S : a)_ij = S_ijkl a_kl.
template <class T>
Mat3<T> apply_sym4(const SymTensor<T>& s, const Mat3<T>& a) {
  if (s.order() != 4) throw std::invalid_argument("apply_sym4: order != 4");
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T acc = ScalarTraits<T>::zero();
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += s.at({i, j, k, l}) * a(k, l);
      r(i, j) = acc;
      r(j, i) = acc;
    }
  return r;
}

// Quadratic form a : S : a on an order-4 symmetric tensor.
template <class T>
T quad_form(const SymTensor<T>& s, const Mat3<T>& a) {
  Mat3<T> sa = apply_sym4(s, a);
  T acc = ScalarTraits<T>::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += sa(i, j) * a(i, j);
  return acc;
}

}  // namespace elastica

#endif  // ELASTICA_SYM_TENSOR_HPP
