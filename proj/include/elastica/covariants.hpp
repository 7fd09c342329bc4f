#ifndef ELASTICA_COVARIANTS_HPP
#define ELASTICA_COVARIANTS_HPP

// Polynomial and rational covariants of harmonic and elasticity tensors:
// d2, d3, c3, c4, v5, v6, S(a) = a x a^2, k4, t, and the three invariant
// families (I1, J2, J3), (I2..I10) and (K1, L1, I3, K4, K5, L5, K9, K10).

#include <array>
#include <stdexcept>

#include "elasticity.hpp"
#include "harmonic.hpp"
#include "linalg.hpp"
#include "sym_tensor.hpp"

namespace elastica {

// d2 = H (:.) H, i.e. (d2)_ij = H_ipqr H_jpqr.
template <class T>
Mat3<T> d2_mat(const Harm4<T>& h) {
  return gram_contract3(h.tensor(), h.tensor());
}

template <class T>
SymTensor<T> d2(const Harm4<T>& h) {
  return sym2_from_mat(d2_mat(h));
}

// d3: (d3)_ij = H_ikpq H_pqrs H_rskj, extracted as the Voigt trace of the
// operator cube [H]^3 in Kelvin representation.
template <class T>
Mat3<T> d3_mat(const Harm4<T>& h) {
  Mat6<T> m = kelvin_matrix(h);
  Mat6<T> m3 = (m * m) * m;
  ElasticityTensor<T> p = ElasticityTensor<T>::from_kelvin(m3, 1e-6);
  return p.voigt_trace();
}

template <class T>
SymTensor<T> d3(const Harm4<T>& h) {
  return sym2_from_mat(d3_mat(h));
}

// ---------------------------------------------------------------------------

template <class T>
struct SecondOrderCovariants {
  Mat3<T> c3;  // H : d2  (= 2 d3')
  Mat3<T> c4;  // H : c3
  Vec3<T> v5;  // eps : [d2, c3]
  Vec3<T> v6;  // eps : [d2, c4]
};

template <class T>
SecondOrderCovariants<T> second_order_covariants(const Harm4<T>& h) {
  SecondOrderCovariants<T> out;
  Mat3<T> d2m = d2_mat(h);
  out.c3 = apply_sym4(h.tensor(), d2m);
  out.c4 = apply_sym4(h.tensor(), out.c3);
  out.v5 = epsilon_contract(commutator(d2m, out.c3));
  out.v6 = epsilon_contract(commutator(d2m, out.c4));
  return out;
}

// S(a) = a x a^2; vanishes exactly when a has a repeated eigenvalue.
template <class T>
SymTensor<T> s_covariant(const SymTensor<T>& a) {
  if (a.order() != 2) throw std::invalid_argument("s_covariant: order != 2");
  Mat3<T> m = mat_from_sym2(a);
  return cross_product(a, sym2_from_mat(m * m));
}

// ---------------------------------------------------------------------------

template <class T>
struct K4Covariant {
  Harm2<T> k4;                      // (|d'|^2 d'^2 + |v'|^2 v'^2 + d2'^2)'
  T K4 = ScalarTraits<T>::zero();   // |d'|^4 + |v'|^4 + |d2'|^2
};

// `scale2` is the squared norm of the source elasticity tensor; the k4
// covariant is degree 4, so its traceless check gets a scale2^4 floor.
template <class T>
K4Covariant<T> k4_covariant(const HarmonicParts<T>& parts, double scale2 = 0.0) {
  Mat3<T> dp = parts.d_dev.mat();
  Mat3<T> vp = parts.v_dev.mat();
  Mat3<T> d2p = deviator(d2_mat(parts.h));
  T nd2 = dp.frobenius2();
  T nv2 = vp.frobenius2();
  Mat3<T> pre = nd2 * (dp * dp) + nv2 * (vp * vp) + d2p * d2p;
  K4Covariant<T> out;
  out.K4 = pre.trace();
  double s4 = scale2 * scale2;
  out.k4 = Harm2<T>(deviator(pre), 1e-9, s4 * s4);
  return out;
}

template <class T>
K4Covariant<T> k4_covariant(const ElasticityTensor<T>& e) {
  return k4_covariant(decompose(e), to_double(e.norm2()));
}

// Normalized transversely isotropic covariant t = 2 k4 / K4; defined only
// away from the at-least-cubic locus K4 = 0.
template <class T>
Harm2<T> t_covariant(const HarmonicParts<T>& parts, double rel = 1e-9,
                     double scale2 = 0.0) {
  K4Covariant<T> k = k4_covariant(parts, scale2);
  bool undefined;
  if constexpr (ScalarTraits<T>::is_exact) {
    undefined = ScalarTraits<T>::is_zero(k.K4);
  } else {
    undefined = to_double(k.K4) <= rel * rel * scale2 * scale2;
  }
  if (undefined)
    throw std::domain_error("t covariant undefined on the at-least-cubic locus");
  // Re-project: scaling by 2/K4 amplifies any trace residual of k4.
  return Harm2<T>(deviator((T(2) / k.K4) * k.k4.tensor()), 1e-9);
}

template <class T>
Harm2<T> t_covariant(const ElasticityTensor<T>& e, double rel = 1e-9) {
  return t_covariant(decompose(e), rel, to_double(e.norm2()));
}

// ---------------------------------------------------------------------------
// Invariant families

template <class T>
struct Sym2Invariants {
  T i1, j2, j3;

  static constexpr int size = 3;
  static constexpr std::array<const char*, 3> names = {"I1", "J2", "J3"};
  static constexpr std::array<int, 3> degrees = {1, 2, 3};
  std::array<T, 3> values() const { return {i1, j2, j3}; }
};

template <class T>
struct H4Invariants {
  T i2, i3, i4, i5, i6, i7, i8, i9, i10;

  static constexpr int size = 9;
  static constexpr std::array<const char*, 9> names = {
      "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10"};
  static constexpr std::array<int, 9> degrees = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::array<T, 9> values() const { return {i2, i3, i4, i5, i6, i7, i8, i9, i10}; }
};

template <class T>
struct ElaInvariants {
  T k1, l1, i3, k4, k5, l5, k9, k10;

  static constexpr int size = 8;
  static constexpr std::array<const char*, 8> names = {"K1", "L1", "I3", "K4",
                                                       "K5", "L5", "K9", "K10"};
  static constexpr std::array<int, 8> degrees = {1, 1, 3, 4, 5, 5, 9, 10};
  std::array<T, 8> values() const { return {k1, l1, i3, k4, k5, l5, k9, k10}; }
};

template <class T>
Sym2Invariants<T> invariants_sym2(const SymTensor<T>& a) {
  Mat3<T> m = mat_from_sym2(a);
  Mat3<T> p = deviator(m);
  Mat3<T> p2 = p * p;
  return {m.trace(), p2.trace(), (p2 * p).trace()};
}

template <class T>
Sym2Invariants<T> invariants_sym2(const Mat3<T>& m) {
  Mat3<T> p = deviator(m);
  Mat3<T> p2 = p * p;
  return {m.trace(), p2.trace(), (p2 * p).trace()};
}

template <class T>
H4Invariants<T> invariants_h4(const Harm4<T>& h) {
  Mat3<T> a = deviator(d2_mat(h));   // d2'
  Mat3<T> b = deviator(d3_mat(h));   // d3'
  Mat3<T> a2 = a * a;
  Mat3<T> b2 = b * b;
  H4Invariants<T> r;
  r.i2 = d2_mat(h).trace();
  r.i3 = d3_mat(h).trace();
  r.i4 = a2.trace();
  r.i5 = (a * b).trace();
  r.i6 = (a2 * a).trace();
  r.i7 = (a2 * b).trace();
  r.i8 = (a * b2).trace();
  r.i9 = (b2 * b).trace();
  r.i10 = (a2 * b2).trace();
  return r;
}

template <class T>
ElaInvariants<T> invariants_ela(const HarmonicParts<T>& parts, double scale2 = 0.0) {
  K4Covariant<T> k = k4_covariant(parts, scale2);
  Mat3<T> k4m = k.k4.mat();
  const SymTensor<T>& h = parts.h.tensor();

  ElaInvariants<T> r;
  r.k1 = parts.tr_d;
  r.l1 = parts.tr_v;
  r.i3 = d3_mat(parts.h).trace();
  r.k4 = k.K4;

  Mat3<T> d = parts.d_dev.mat();  // traces drop out of d : k4 anyway
  Mat3<T> v = parts.v_dev.mat();
  T k5 = ScalarTraits<T>::zero(), l5 = ScalarTraits<T>::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      k5 += d(i, j) * k4m(i, j);
      l5 += v(i, j) * k4m(i, j);
    }
  r.k5 = k5;
  r.l5 = l5;
  r.k9 = quad_form(h, k4m);
  r.k10 = norm2(trace_contract(cross_product(h, sym2_from_mat(k4m))));
  return r;
}

template <class T>
ElaInvariants<T> invariants_ela(const ElasticityTensor<T>& e) {
  return invariants_ela(decompose(e), to_double(e.norm2()));
}

}  // namespace elastica

#endif  // ELASTICA_COVARIANTS_HPP
