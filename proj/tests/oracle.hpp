#ifndef ELASTICA_TESTS_ORACLE_HPP
#define ELASTICA_TESTS_ORACLE_HPP

// Test-only oracle: dense order-n tensors with naive full-index loops.
// Deliberately independent of the library's multiset storage and
// multiplicity bookkeeping; used to cross-check the core operations and to
// compute the frozen expected values in the unit tests.

#include <array>
#include <cstddef>
#include <vector>

#include "elastica/scalar.hpp"
#include "elastica/sym_tensor.hpp"

namespace oracle {

template <class T>
struct Dense {
  int order = 0;
  std::vector<T> v;  // 3^order entries, row-major

  explicit Dense(int n) : order(n), v(pow3(n), elastica::ScalarTraits<T>::zero()) {}

  static std::size_t pow3(int n) {
    std::size_t r = 1;
    for (int k = 0; k < n; ++k) r *= 3;
    return r;
  }

  static std::size_t offset(const std::vector<int>& idx) {
    std::size_t off = 0;
    for (int i : idx) off = off * 3 + static_cast<std::size_t>(i);
    return off;
  }

  T& at(const std::vector<int>& idx) { return v[offset(idx)]; }
  const T& at(const std::vector<int>& idx) const { return v[offset(idx)]; }
};

template <class T>
std::vector<int> decode(int order, std::size_t code) {
  std::vector<int> idx(static_cast<std::size_t>(order));
  for (int k = order - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(code % 3);
    code /= 3;
  }
  return idx;
}

template <class T>
Dense<T> from_sym(const elastica::SymTensor<T>& s) {
  Dense<T> d(s.order());
  for (std::size_t code = 0; code < d.v.size(); ++code) {
    auto idx = decode<T>(s.order(), code);
    d.v[code] = s.at(std::span<const int>(idx.data(), idx.size()));
  }
  return d;
}

// Full n!-term symmetrization over index positions.
template <class T>
Dense<T> symmetrize(const Dense<T>& in) {
  Dense<T> out(in.order);
  std::vector<int> perm(static_cast<std::size_t>(in.order));
  for (int k = 0; k < in.order; ++k) perm[static_cast<std::size_t>(k)] = k;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t code = 0; code < out.v.size(); ++code) {
    auto idx = decode<T>(in.order, code);
    T acc = elastica::ScalarTraits<T>::zero();
    std::vector<int> src(idx.size());
    for (const auto& p : perms) {
      for (std::size_t k = 0; k < idx.size(); ++k)
        src[k] = idx[static_cast<std::size_t>(p[k])];
      acc += in.at(src);
    }
    out.v[code] = elastica::frac<T>(1, static_cast<long long>(perms.size())) * acc;
  }
  return out;
}

template <class T>
Dense<T> outer(const Dense<T>& a, const Dense<T>& b) {
  Dense<T> out(a.order + b.order);
  for (std::size_t ca = 0; ca < a.v.size(); ++ca)
    for (std::size_t cb = 0; cb < b.v.size(); ++cb)
      out.v[ca * b.v.size() + cb] = a.v[ca] * b.v[cb];
  return out;
}

inline int eps(int i, int j, int k) { return elastica::detail::levi_civita(i, j, k); }

// (S2 . eps . S1) without symmetrization: T_{J, b, I} = S2_{J a} eps_{a b c} S1_{c I}.
template <class T>
Dense<T> cross_raw(const Dense<T>& s1, const Dense<T>& s2) {
  Dense<T> out(s1.order + s2.order - 1);
  for (std::size_t code = 0; code < out.v.size(); ++code) {
    auto idx = decode<T>(out.order, code);
    const int b = idx[static_cast<std::size_t>(s2.order - 1)];
    T acc = elastica::ScalarTraits<T>::zero();
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) {
        int e = eps(a, b, c);
        if (e == 0) continue;
        std::vector<int> i2(idx.begin(), idx.begin() + (s2.order - 1));
        i2.push_back(a);
        std::vector<int> i1{c};
        i1.insert(i1.end(), idx.begin() + s2.order, idx.end());
        T prod = s2.at(i2) * s1.at(i1);
        acc += (e > 0) ? prod : -prod;
      }
    out.v[code] = acc;
  }
  return out;
}

template <class T>
Dense<T> cross(const Dense<T>& s1, const Dense<T>& s2) {
  return symmetrize(cross_raw(s1, s2));
}

template <class T>
Dense<T> trace_last_two(const Dense<T>& in) {
  Dense<T> out(in.order - 2);
  for (std::size_t code = 0; code < out.v.size(); ++code) {
    auto idx = decode<T>(out.order, code);
    T acc = elastica::ScalarTraits<T>::zero();
    for (int k = 0; k < 3; ++k) {
      std::vector<int> full = idx;
      full.push_back(k);
      full.push_back(k);
      acc += in.at(full);
    }
    out.v[code] = acc;
  }
  return out;
}

template <class T>
T dot(const Dense<T>& a, const Dense<T>& b) {
  T acc = elastica::ScalarTraits<T>::zero();
  for (std::size_t c = 0; c < a.v.size(); ++c) acc += a.v[c] * b.v[c];
  return acc;
}

template <class T>
T norm2(const Dense<T>& a) {
  return dot(a, a);
}

template <class T>
Dense<T> rotate(const elastica::Mat3<T>& g, const Dense<T>& in) {
  Dense<T> out(in.order);
  for (std::size_t code = 0; code < out.v.size(); ++code) {
    auto idx = decode<T>(in.order, code);
    T acc = elastica::ScalarTraits<T>::zero();
    for (std::size_t src = 0; src < in.v.size(); ++src) {
      auto j = decode<T>(in.order, src);
      T w = elastica::ScalarTraits<T>::one();
      for (std::size_t k = 0; k < idx.size(); ++k) w *= g(idx[k], j[k]);
      acc += w * in.v[src];
    }
    out.v[code] = acc;
  }
  return out;
}

template <class T>
double max_abs_diff(const Dense<T>& a, const Dense<T>& b) {
  double m = 0;
  for (std::size_t c = 0; c < a.v.size(); ++c) {
    double d = std::fabs(elastica::to_double(a.v[c] - b.v[c]));
    if (d > m) m = d;
  }
  return m;
}

}  // namespace oracle

#endif  // ELASTICA_TESTS_ORACLE_HPP
