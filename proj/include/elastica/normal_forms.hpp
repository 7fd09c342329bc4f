#ifndef ELASTICA_NORMAL_FORMS_HPP
#define ELASTICA_NORMAL_FORMS_HPP

// Constructors for the per-stratum normal forms (axis e3 / cube axes aligned
// with the frame), their genericity predicates, and orbit sampling.

#include <cstdint>
#include <variant>

#include "classification.hpp"
#include "elasticity.hpp"
#include "harmonic.hpp"
#include "rotation.hpp"

namespace elastica {

// diag(d1 - d2, d1 - d2, d1 + 2 d2): transversely isotropic for d2 != 0.
template <class T>
Mat3<T> sym2_ti(const T& d1, const T& d2) {
  return Mat3<T>::diag(d1 - d2, d1 - d2, d1 + T(2) * d2);
}

// Kelvin diag(8, 8, 8, -8, -8, -8) delta with -4 delta off-diagonals.
template <class T>
Harm4<T> h4_cubic(const T& delta) {
  SymTensor<T> h(4);
  T e = T(8) * delta, f = T(-4) * delta;
  h.set({0, 0, 0, 0}, e);
  h.set({1, 1, 1, 1}, e);
  h.set({2, 2, 2, 2}, e);
  h.set({0, 0, 1, 1}, f);
  h.set({0, 0, 2, 2}, f);
  h.set({1, 1, 2, 2}, f);
  return Harm4<T>(h);
}

template <class T>
Harm4<T> h4_transversely_isotropic(const T& delta) {
  SymTensor<T> h(4);
  h.set({0, 0, 0, 0}, T(3) * delta);
  h.set({1, 1, 1, 1}, T(3) * delta);
  h.set({2, 2, 2, 2}, T(8) * delta);
  h.set({0, 0, 1, 1}, delta);
  h.set({0, 0, 2, 2}, T(-4) * delta);
  h.set({1, 1, 2, 2}, T(-4) * delta);
  return Harm4<T>(h);
}

template <class T>
Harm4<T> h4_tetragonal(const T& delta, const T& sigma) {
  SymTensor<T> h(4);
  h.set({0, 0, 0, 0}, T(3) * delta - sigma);
  h.set({1, 1, 1, 1}, T(3) * delta - sigma);
  h.set({2, 2, 2, 2}, T(8) * delta);
  h.set({0, 0, 1, 1}, delta + sigma);
  h.set({0, 0, 2, 2}, T(-4) * delta);
  h.set({1, 1, 2, 2}, T(-4) * delta);
  return Harm4<T>(h);
}

template <class T>
Harm4<T> h4_trigonal(const T& delta, const T& sigma) {
  SymTensor<T> h(4);
  h.set({0, 0, 0, 0}, T(3) * delta);
  h.set({1, 1, 1, 1}, T(3) * delta);
  h.set({2, 2, 2, 2}, T(8) * delta);
  h.set({0, 0, 1, 1}, delta);
  h.set({0, 0, 2, 2}, T(-4) * delta);
  h.set({1, 1, 2, 2}, T(-4) * delta);
  h.set({0, 0, 1, 2}, -sigma);
  h.set({1, 1, 1, 2}, sigma);
  return Harm4<T>(h);
}

template <class T>
Harm4<T> h4_orthotropic(const T& l1, const T& l2, const T& l3) {
  SymTensor<T> h(4);
  h.set({0, 0, 0, 0}, l2 + l3);
  h.set({1, 1, 1, 1}, l3 + l1);
  h.set({2, 2, 2, 2}, l1 + l2);
  h.set({0, 0, 1, 1}, -l3);
  h.set({0, 0, 2, 2}, -l2);
  h.set({1, 1, 2, 2}, -l1);
  return Harm4<T>(h);
}

// ---------------------------------------------------------------------------

enum class NormalFormClass { Sym2TI, H4Cubic, H4TI, H4Tetragonal, H4Trigonal, H4Orthotropic };

inline const char* to_string(NormalFormClass c) {
  switch (c) {
    case NormalFormClass::Sym2TI: return "sym2-ti";
    case NormalFormClass::H4Cubic: return "h4-cubic";
    case NormalFormClass::H4TI: return "h4-ti";
    case NormalFormClass::H4Tetragonal: return "h4-tetragonal";
    case NormalFormClass::H4Trigonal: return "h4-trigonal";
    case NormalFormClass::H4Orthotropic: return "h4-orthotropic";
  }
  return "?";
}

inline int normal_form_param_count(NormalFormClass c) {
  switch (c) {
    case NormalFormClass::H4Cubic:
    case NormalFormClass::H4TI: return 1;
    case NormalFormClass::Sym2TI:
    case NormalFormClass::H4Tetragonal:
    case NormalFormClass::H4Trigonal: return 2;
    case NormalFormClass::H4Orthotropic: return 3;
  }
  return 0;
}

template <class T>
struct NormalFormParams {
  NormalFormClass cls = NormalFormClass::H4Cubic;
  std::array<T, 3> p{ScalarTraits<T>::zero(), ScalarTraits<T>::zero(),
                     ScalarTraits<T>::zero()};
};

template <class T>
using NormalForm = std::variant<Mat3<T>, Harm4<T>>;

template <class T>
NormalForm<T> build(const NormalFormParams<T>& np) {
  switch (np.cls) {
    case NormalFormClass::Sym2TI: return sym2_ti(np.p[0], np.p[1]);
    case NormalFormClass::H4Cubic: return h4_cubic(np.p[0]);
    case NormalFormClass::H4TI: return h4_transversely_isotropic(np.p[0]);
    case NormalFormClass::H4Tetragonal: return h4_tetragonal(np.p[0], np.p[1]);
    case NormalFormClass::H4Trigonal: return h4_trigonal(np.p[0], np.p[1]);
    case NormalFormClass::H4Orthotropic: return h4_orthotropic(np.p[0], np.p[1], np.p[2]);
  }
  throw std::invalid_argument("build: unknown normal form class");
}

struct Genericity {
  bool generic = false;       // parameters lie on the variant's own stratum
  StratumLabel label = StratumLabel::Isotropic;  // exact label at the point
};

// Exact bifurcation analysis of the parameter point (construction itself
// never fails; classification remains the runtime source of truth).
template <class T>
Genericity genericity(const NormalFormParams<T>& np) {
  using L = StratumLabel;
  auto Z = [](const T& x) { return ScalarTraits<T>::is_zero(x); };
  Genericity g;
  switch (np.cls) {
    case NormalFormClass::Sym2TI:
      g.label = Z(np.p[1]) ? L::Isotropic : L::TransverselyIsotropic;
      g.generic = g.label == L::TransverselyIsotropic;
      return g;
    case NormalFormClass::H4Cubic:
      g.label = Z(np.p[0]) ? L::Isotropic : L::Cubic;
      g.generic = g.label == L::Cubic;
      return g;
    case NormalFormClass::H4TI:
      g.label = Z(np.p[0]) ? L::Isotropic : L::TransverselyIsotropic;
      g.generic = g.label == L::TransverselyIsotropic;
      return g;
    case NormalFormClass::H4Tetragonal: {
      const T &d = np.p[0], &s = np.p[1];
      if (Z(s))
        g.label = Z(d) ? L::Isotropic : L::TransverselyIsotropic;
      else if (Z(s * s - T(25) * d * d))
        g.label = L::Cubic;
      else
        g.label = L::Tetragonal;
      g.generic = g.label == L::Tetragonal;
      return g;
    }
    case NormalFormClass::H4Trigonal: {
      const T &d = np.p[0], &s = np.p[1];
      if (Z(s))
        g.label = Z(d) ? L::Isotropic : L::TransverselyIsotropic;
      else if (Z(s * s - T(50) * d * d))
        g.label = L::Cubic;
      else
        g.label = L::Trigonal;
      g.generic = g.label == L::Trigonal;
      return g;
    }
    case NormalFormClass::H4Orthotropic: {
      const T &l1 = np.p[0], &l2 = np.p[1], &l3 = np.p[2];
      bool e12 = Z(l1 - l2), e23 = Z(l2 - l3), e13 = Z(l1 - l3);
      if (e12 && e23) {
        g.label = Z(l1) ? L::Isotropic : L::Cubic;
      } else if (e12 || e23 || e13) {
        // Two coincide: the form collapses to a tetragonal one with
        // delta = a/4, sigma = -(a/4 + b), a = repeated value, b = odd one.
        T a = e12 ? l1 : (e23 ? l2 : l1);
        T b = e12 ? l3 : (e23 ? l1 : l2);
        T delta = frac<T>(1, 4) * a;
        T sigma = -(delta + b);
        if (Z(sigma))
          g.label = Z(delta) ? L::Isotropic : L::TransverselyIsotropic;
        else if (Z(sigma * sigma - T(25) * delta * delta))
          g.label = L::Cubic;
        else
          g.label = L::Tetragonal;
      } else {
        g.label = L::Orthotropic;
      }
      g.generic = g.label == L::Orthotropic;
      return g;
    }
  }
  throw std::invalid_argument("genericity: unknown normal form class");
}

// ---------------------------------------------------------------------------

template <class T>
SymTensor<T> sample_orbit(const SymTensor<T>& x, std::uint64_t seed) {
  return rotate(random_rotation<T>(seed), x);
}
template <class T>
Mat3<T> sample_orbit(const Mat3<T>& x, std::uint64_t seed) {
  return rotate(random_rotation<T>(seed), x);
}
template <class T>
Harm2<T> sample_orbit(const Harm2<T>& x, std::uint64_t seed) {
  return rotate(random_rotation<T>(seed), x);
}
template <class T>
Harm4<T> sample_orbit(const Harm4<T>& x, std::uint64_t seed) {
  return rotate(random_rotation<T>(seed), x);
}
template <class T>
ElasticityTensor<T> sample_orbit(const ElasticityTensor<T>& x, std::uint64_t seed) {
  return rotate(random_rotation<T>(seed), x);
}

}  // namespace elastica

#endif  // ELASTICA_NORMAL_FORMS_HPP
