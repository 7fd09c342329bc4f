#ifndef ELASTICA_HARMONIC_HPP
#define ELASTICA_HARMONIC_HPP

// Harmonic decomposition of elasticity tensors
//     E = (tr d, tr v, d', v', H),
// its inverse, the harmonic square of a second-order deviator and the
// transversely isotropic reconstruction formula.

#include <array>

#include "elasticity.hpp"
#include "linalg.hpp"
#include "sym_tensor.hpp"

namespace elastica {

template <class T>
struct HarmonicParts {
  T tr_d = ScalarTraits<T>::zero();
  T tr_v = ScalarTraits<T>::zero();
  Harm2<T> d_dev;
  Harm2<T> v_dev;
  Harm4<T> h;
};

// Harmonic (fourth-order) part of a totally symmetric tensor:
// H = S - q (.) a' - (7/30)(tr a) q (.) q with a = (6/7) tr_contract(S).
template <class T>
SymTensor<T> harmonic_part_sym4(const SymTensor<T>& s) {
  if (s.order() != 4) throw std::invalid_argument("harmonic_part_sym4: order != 4");
  SymTensor<T> s2 = trace_contract(s);
  SymTensor<T> a = frac<T>(6, 7) * s2;
  T tra = trace_sym2(a);
  SymTensor<T> ap = deviator(a);
  SymTensor<T> q = metric_q<T>();
  return s - sym_product(q, ap) - (frac<T>(7, 30) * tra) * sym_product(q, q);
}

template <class T>
HarmonicParts<T> decompose(const ElasticityTensor<T>& e) {
  Mat3<T> d = e.dilatation();
  Mat3<T> v = e.voigt_trace();
  double scale2 = to_double(e.norm2());

  Mat3<T> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a(i, j) = frac<T>(2, 7) * (d(i, j) + T(2) * v(i, j));
  T tra = a.trace();
  SymTensor<T> ap = sym2_from_mat(deviator(a));
  SymTensor<T> q = metric_q<T>();

  SymTensor<T> h = e.symmetric_part() - sym_product(q, ap) -
                   (frac<T>(7, 30) * tra) * sym_product(q, q);

  HarmonicParts<T> parts;
  parts.tr_d = d.trace();
  parts.tr_v = v.trace();
  parts.d_dev = Harm2<T>(deviator(d), 1e-9, scale2);
  parts.v_dev = Harm2<T>(deviator(v), 1e-9, scale2);
  parts.h = Harm4<T>(h, 1e-9, scale2);
  return parts;
}

namespace detail {

// Coordinates used by the linear (de)composition maps: 21 numbers
// [tr d, tr v, d'(5), v'(5), H(9)], with the dependent entries of the
// deviators and of H eliminated through their trace relations.
inline constexpr std::array<std::array<int, 4>, 9> kH4FreeSlots = {{
    {0, 0, 1, 1},
    {0, 0, 2, 2},
    {1, 1, 2, 2},
    {0, 0, 1, 2},
    {1, 1, 1, 2},
    {0, 1, 1, 2},
    {0, 2, 2, 2},
    {0, 0, 0, 1},
    {0, 1, 2, 2},
}};

template <class T>
std::array<T, 21> parts_coords(const HarmonicParts<T>& p) {
  std::array<T, 21> c;
  c[0] = p.tr_d;
  c[1] = p.tr_v;
  Mat3<T> dp = p.d_dev.mat();
  Mat3<T> vp = p.v_dev.mat();
  c[2] = dp(0, 0);
  c[3] = dp(1, 1);
  c[4] = dp(0, 1);
  c[5] = dp(0, 2);
  c[6] = dp(1, 2);
  c[7] = vp(0, 0);
  c[8] = vp(1, 1);
  c[9] = vp(0, 1);
  c[10] = vp(0, 2);
  c[11] = vp(1, 2);
  for (int k = 0; k < 9; ++k) {
    const auto& s = kH4FreeSlots[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(12 + k)] =
        p.h.tensor().at(std::span<const int>(s.data(), 4));
  }
  return c;
}

template <class T>
HarmonicParts<T> parts_from_coords(const std::array<T, 21>& c) {
  HarmonicParts<T> p;
  p.tr_d = c[0];
  p.tr_v = c[1];
  auto fill_dev = [](const T* x) {
    Mat3<T> m;
    m(0, 0) = x[0];
    m(1, 1) = x[1];
    m(2, 2) = -(x[0] + x[1]);
    m(0, 1) = m(1, 0) = x[2];
    m(0, 2) = m(2, 0) = x[3];
    m(1, 2) = m(2, 1) = x[4];
    return m;
  };
  p.d_dev = Harm2<T>(fill_dev(&c[2]));
  p.v_dev = Harm2<T>(fill_dev(&c[7]));
  SymTensor<T> h(4);
  for (int k = 0; k < 9; ++k) {
    const auto& s = kH4FreeSlots[static_cast<std::size_t>(k)];
    h.set({s[0], s[1], s[2], s[3]}, c[static_cast<std::size_t>(12 + k)]);
  }
  h.set({0, 0, 0, 0}, -(h.at({0, 0, 1, 1}) + h.at({0, 0, 2, 2})));
  h.set({1, 1, 1, 1}, -(h.at({0, 0, 1, 1}) + h.at({1, 1, 2, 2})));
  h.set({2, 2, 2, 2}, -(h.at({0, 0, 2, 2}) + h.at({1, 1, 2, 2})));
  h.set({1, 2, 2, 2}, -(h.at({0, 0, 1, 2}) + h.at({1, 1, 1, 2})));
  h.set({0, 0, 0, 2}, -(h.at({0, 1, 1, 2}) + h.at({0, 2, 2, 2})));
  h.set({0, 1, 1, 1}, -(h.at({0, 0, 0, 1}) + h.at({0, 1, 2, 2})));
  p.h = Harm4<T>(h);
  return p;
}

// Voigt upper-triangle coordinates of an elasticity tensor.
template <class T>
std::array<T, 21> ela_coords(const ElasticityTensor<T>& e) {
  std::array<T, 21> c;
  Mat6<T> v = e.voigt();
  int k = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) c[static_cast<std::size_t>(k++)] = v(p, q);
  return c;
}

template <class T>
ElasticityTensor<T> ela_from_coords(const std::array<T, 21>& c) {
  Mat6<T> v;
  int k = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      v(p, q) = c[static_cast<std::size_t>(k)];
      v(q, p) = c[static_cast<std::size_t>(k)];
      ++k;
    }
  return ElasticityTensor<T>::from_voigt(v);
}

// Exact inverse of the decomposition map, computed once by Gauss-Jordan
// elimination of the forward map evaluated on the 21 unit tensors.
inline const std::array<std::array<Exact, 21>, 21>& reconstruction_matrix() {
  static const auto inv = [] {
    std::array<std::array<Exact, 42>, 21> work;  // [F | I]
    for (int col = 0; col < 21; ++col) {
      std::array<Exact, 21> unit{};
      for (auto& x : unit) x = Exact(0);
      unit[static_cast<std::size_t>(col)] = Exact(1);
      HarmonicParts<Exact> parts = decompose(ela_from_coords(unit));
      std::array<Exact, 21> image = parts_coords(parts);
      for (int row = 0; row < 21; ++row)
        work[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
            image[static_cast<std::size_t>(row)];
    }
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j)
        work[static_cast<std::size_t>(i)][static_cast<std::size_t>(21 + j)] =
            Exact(i == j ? 1 : 0);

    for (int col = 0; col < 21; ++col) {
      int pivot = -1;
      for (int r = col; r < 21; ++r)
        if (!work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::logic_error("reconstruction: singular forward map");
      std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(col)]);
      Exact inv_p = Exact(1) / work[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int j = 0; j < 42; ++j)
        work[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv_p;
      for (int r = 0; r < 21; ++r) {
        if (r == col) continue;
        Exact f = work[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int j = 0; j < 42; ++j)
          work[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
              f * work[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
    std::array<std::array<Exact, 21>, 21> out;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            work[static_cast<std::size_t>(i)][static_cast<std::size_t>(21 + j)];
    return out;
  }();
  return inv;
}

}  // namespace detail

// Inverse of decompose: exact coefficients, converted once per scalar type.
template <class T>
ElasticityTensor<T> reconstruct(const HarmonicParts<T>& parts) {
  static const auto inv = [] {
    const auto& exact = detail::reconstruction_matrix();
    std::array<std::array<T, 21>, 21> m;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ScalarTraits<T>::from_exact(exact[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
  }();
  std::array<T, 21> coords = detail::parts_coords(parts);
  std::array<T, 21> ela;
  for (int i = 0; i < 21; ++i) {
    T acc = ScalarTraits<T>::zero();
    for (int j = 0; j < 21; ++j)
      acc += inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             coords[static_cast<std::size_t>(j)];
    ela[static_cast<std::size_t>(i)] = acc;
  }
  return detail::ela_from_coords(ela);
}

// Isotropic tensor E = lambda q (x) q + 2 mu I_sym.
template <class T>
ElasticityTensor<T> make_isotropic(const T& lambda, const T& mu) {
  Mat6<T> v;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) v(p, q) = lambda;
  for (int p = 0; p < 3; ++p) v(p, p) = v(p, p) + T(2) * mu;
  for (int p = 3; p < 6; ++p) v(p, p) = mu;
  return ElasticityTensor<T>::from_voigt(v);
}

// Harmonic square t * t = t (.) t - (4/7) q (.) t^2 + (2/35) |t|^2 q (.) q.
template <class T>
Harm4<T> harmonic_square(const Harm2<T>& t) {
  SymTensor<T> ts = t.tensor();
  Mat3<T> tm = t.mat();
  SymTensor<T> t2 = sym2_from_mat(tm * tm);
  SymTensor<T> q = metric_q<T>();
  T n2 = norm2(ts);
  SymTensor<T> out = sym_product(ts, ts) - frac<T>(4, 7) * sym_product(q, t2) +
                     (frac<T>(2, 35) * n2) * sym_product(q, q);
  double s2 = to_double(n2);
  return Harm4<T>(out, 1e-10, s2 * s2);
}

// True when t = (n (x) n)' for a unit vector n, i.e. t^2 = t/3 + (2/9) q.
template <class T>
bool is_projector_deviator(const Harm2<T>& t, double tol = 1e-9) {
  Mat3<T> tm = t.mat();
  Mat3<T> r = tm * tm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r(i, j) = r(i, j) - frac<T>(1, 3) * tm(i, j);
      if (i == j) r(i, j) = r(i, j) - frac<T>(2, 9);
    }
  if constexpr (ScalarTraits<T>::is_exact) {
    return ScalarTraits<T>::is_zero(r.frobenius2());
  } else {
    return to_double(r.frobenius2()) <= tol * tol;
  }
}

// Transversely isotropic reconstruction: H = (35/8) s (t * t), where
// s = t : H : t and t = (n (x) n)'.
template <class T>
Harm4<T> reconstruct_ti_h4(const Harm2<T>& t, const T& s, double tol = 1e-9) {
  if (!is_projector_deviator(t, tol))
    throw std::invalid_argument("reconstruct_ti_h4: t is not a unit-axis projector deviator");
  Harm4<T> sq = harmonic_square(t);
  return Harm4<T>((frac<T>(35, 8) * s) * sq.tensor(), 1e-9);
}

template <class T>
HarmonicParts<T> rotate(const Rotation<T>& g, const HarmonicParts<T>& p) {
  HarmonicParts<T> out;
  out.tr_d = p.tr_d;
  out.tr_v = p.tr_v;
  out.d_dev = rotate(g, p.d_dev);
  out.v_dev = rotate(g, p.v_dev);
  out.h = rotate(g, p.h);
  return out;
}

}  // namespace elastica

#endif  // ELASTICA_HARMONIC_HPP
