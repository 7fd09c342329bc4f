#ifndef ELASTICA_BASES_HPP
#define ELASTICA_BASES_HPP

// Minimal functional bases per symmetry stratum and orbit-separation
// verdicts built on the eight-invariant separating set.

#include <optional>
#include <string>
#include <vector>

#include "classification.hpp"
#include "covariants.hpp"
#include "harmonic.hpp"

namespace elastica {

template <class T>
struct BasisValues {
  StratumLabel stratum = StratumLabel::Isotropic;
  std::vector<std::string> names;
  std::vector<T> values;
};

enum class Verdict { SameOrbit, DifferentOrbit, OutOfScope };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::SameOrbit: return "same_orbit";
    case Verdict::DifferentOrbit: return "different_orbit";
    case Verdict::OutOfScope: return "out_of_scope";
  }
  return "?";
}

struct SeparationVerdict {
  Verdict verdict = Verdict::OutOfScope;
  std::optional<std::string> witness;  // first distinguishing invariant
  StratumLabel label_a = StratumLabel::LowerThanTetraTrig;
  StratumLabel label_b = StratumLabel::LowerThanTetraTrig;
};

// ---------------------------------------------------------------------------

template <class T>
BasisValues<T> functional_basis_sym2(const Mat3<T>& a, StratumLabel label,
                                     const Tolerance<T>& tol = {}) {
  if (classify_sym2(a, tol) != label)
    throw std::invalid_argument("functional_basis_sym2: label mismatch");
  Sym2Invariants<T> inv = invariants_sym2(a);
  BasisValues<T> out;
  out.stratum = label;
  switch (label) {
    case StratumLabel::Orthotropic:
      out.names = {"I1", "J2", "J3"};
      out.values = {inv.i1, inv.j2, inv.j3};
      break;
    case StratumLabel::TransverselyIsotropic:
      out.names = {"I1", "J3/J2"};
      out.values = {inv.i1, inv.j3 / inv.j2};
      break;
    case StratumLabel::Isotropic:
      out.names = {"I1"};
      out.values = {inv.i1};
      break;
    default:
      throw std::invalid_argument("functional_basis_sym2: unsupported stratum");
  }
  return out;
}

template <class T>
BasisValues<T> functional_basis_h4(const Harm4<T>& h, StratumLabel label,
                                   const Tolerance<T>& tol = {}) {
  if (classify_h4(h, tol) != label)
    throw std::invalid_argument("functional_basis_h4: label mismatch");
  H4Invariants<T> inv = invariants_h4(h);
  BasisValues<T> out;
  out.stratum = label;
  switch (label) {
    case StratumLabel::Cubic:
      out.names = {"I3/I2"};
      out.values = {inv.i3 / inv.i2};
      break;
    case StratumLabel::TransverselyIsotropic:
      out.names = {"delta"};
      out.values = {frac<T>(7, 18) * inv.i3 / inv.i2};
      break;
    case StratumLabel::Tetragonal:
    case StratumLabel::Trigonal:
      out.names = {"I5/I4", "I2"};
      out.values = {inv.i5 / inv.i4, inv.i2};
      break;
    case StratumLabel::Orthotropic: {
      // sigma_k: elementary symmetric functions of the orthotropic normal
      // form parameters, rational in the Ik.
      T disc2 = frac<T>(1, 1296) *
                (T(2) * inv.i2 * inv.i2 * inv.i2 - T(60) * inv.i3 * inv.i3 -
                 T(9) * inv.i2 * inv.i4 + T(18) * inv.i6);
      bool degenerate;
      if constexpr (ScalarTraits<T>::is_exact) {
        degenerate = ScalarTraits<T>::is_zero(disc2);
      } else {
        double s2 = to_double(h.norm2());
        double scale6 = s2 * s2 * s2;  // disc2 is a degree-6 invariant
        degenerate = std::fabs(to_double(disc2)) <= 1e-12 * scale6;
      }
      if (degenerate)
        throw std::runtime_error(
            "functional_basis_h4: vanishing discriminant on the orthotropic stratum");
      T sigma1 = frac<T>(1, 96) *
                 (T(6) * inv.i7 + T(3) * inv.i3 * inv.i4 - T(2) * inv.i2 * inv.i5) /
                 disc2;
      T sigma2 = frac<T>(4, 7) * sigma1 * sigma1 - frac<T>(1, 14) * inv.i2;
      T sigma3 = frac<T>(1, 7) * sigma1 * sigma1 * sigma1 -
                 frac<T>(1, 56) * sigma1 * inv.i2 - frac<T>(1, 24) * inv.i3;
      out.names = {"sigma1", "sigma2", "sigma3"};
      out.values = {sigma1, sigma2, sigma3};
      break;
    }
    default:
      throw std::invalid_argument("functional_basis_h4: unsupported stratum");
  }
  return out;
}

// kappa6 defaults to I2; I3 works equally well and is exposed via `use_i3`.
template <class T>
BasisValues<T> functional_basis_ela(const ElasticityTensor<T>& e, StratumLabel label,
                                    const Tolerance<T>& tol = {}, bool use_i3 = false) {
  if (classify_ela(e, tol) != label)
    throw std::invalid_argument("functional_basis_ela: label mismatch");
  HarmonicParts<T> parts = decompose(e);
  BasisValues<T> out;
  out.stratum = label;
  switch (label) {
    case StratumLabel::Isotropic:
      out.names = {"tr_d", "tr_v"};
      out.values = {parts.tr_d, parts.tr_v};
      break;
    case StratumLabel::Cubic: {
      H4Invariants<T> inv = invariants_h4(parts.h);
      out.names = {"tr_d", "tr_v", "I3/I2"};
      out.values = {parts.tr_d, parts.tr_v, inv.i3 / inv.i2};
      break;
    }
    case StratumLabel::TransverselyIsotropic:
    case StratumLabel::Tetragonal:
    case StratumLabel::Trigonal: {
      Harm2<T> t = t_covariant(parts, to_double(tol.rel) + 1e-12,
                               to_double(e.norm2()));
      Mat3<T> tm = t.mat();
      Mat3<T> d = e.dilatation();
      Mat3<T> v = e.voigt_trace();
      T dt = ScalarTraits<T>::zero(), vt = ScalarTraits<T>::zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          dt += d(i, j) * tm(i, j);
          vt += v(i, j) * tm(i, j);
        }
      T tht = quad_form(parts.h.tensor(), tm);
      out.names = {"tr_d", "tr_v", "d:t", "v:t", "t:H:t"};
      out.values = {parts.tr_d, parts.tr_v, dt, vt, tht};
      if (label != StratumLabel::TransverselyIsotropic) {
        H4Invariants<T> inv = invariants_h4(parts.h);
        out.names.push_back(use_i3 ? "I3" : "I2");
        out.values.push_back(use_i3 ? inv.i3 : inv.i2);
      }
      break;
    }
    default:
      throw std::invalid_argument("functional_basis_ela: unsupported stratum");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit separation

namespace detail {

// Relative equality with a floating-point noise floor: values agree when
// |x - y| <= rel * max(|x|, |y|), or when both sit below the roundoff floor
// 1e-12 * s^deg of a degree-`deg` polynomial in a tensor of norm s. Exact
// scalars use rel = 0 and a zero floor, i.e. exact equality.
template <class T>
bool invariant_equal(const T& x, const T& y, const T& rel2, const T& scale2, int deg) {
  T d = x - y;
  T d2 = d * d;
  T m = x * x;
  T y2 = y * y;
  if (m < y2) m = y2;
  if (d2 <= rel2 * m) return true;
  if constexpr (ScalarTraits<T>::is_exact) {
    return false;
  } else {
    T noise2 = T(1e-24) * pow_int(scale2, deg);
    return x * x <= noise2 && y2 <= noise2;
  }
}

}  // namespace detail

// Verdict comparison tolerance; looser than the classification tolerance to
// absorb degree-10 polynomial roundoff.
template <class T>
struct VerdictTolerance {
  T rel = default_rel();
  static T default_rel() {
    if constexpr (ScalarTraits<T>::is_exact)
      return ScalarTraits<T>::zero();
    else
      return 1e-6;
  }
};

template <class T>
SeparationVerdict separate_ela(const ElasticityTensor<T>& a, const ElasticityTensor<T>& b,
                               const Tolerance<T>& cls_tol = {},
                               const VerdictTolerance<T>& cmp_tol = {}) {
  SeparationVerdict out;
  out.label_a = classify_ela(a, cls_tol);
  out.label_b = classify_ela(b, cls_tol);
  if (out.label_a == StratumLabel::LowerThanTetraTrig ||
      out.label_b == StratumLabel::LowerThanTetraTrig) {
    out.verdict = Verdict::OutOfScope;
    return out;
  }
  ElaInvariants<T> ia = invariants_ela(a);
  ElaInvariants<T> ib = invariants_ela(b);
  T scale2 = a.norm2();
  if (scale2 < b.norm2()) scale2 = b.norm2();
  T rel2 = cmp_tol.rel * cmp_tol.rel;
  auto va = ia.values();
  auto vb = ib.values();
  for (int k = 0; k < ElaInvariants<T>::size; ++k) {
    if (!detail::invariant_equal(va[static_cast<std::size_t>(k)], vb[static_cast<std::size_t>(k)],
                                 rel2, scale2, ElaInvariants<T>::degrees[static_cast<std::size_t>(k)])) {
      out.verdict = Verdict::DifferentOrbit;
      out.witness = ElaInvariants<T>::names[static_cast<std::size_t>(k)];
      return out;
    }
  }
  out.verdict = Verdict::SameOrbit;
  return out;
}

// Separation for a pair (H, t) with t a unit-axis projector deviator, on the
// union of transversely isotropic / tetragonal / trigonal pairs.
template <class T>
SeparationVerdict separate_h4_pair(const Harm4<T>& h1, const Harm2<T>& t1,
                                   const Harm4<T>& h2, const Harm2<T>& t2,
                                   const Tolerance<T>& cls_tol = {},
                                   const VerdictTolerance<T>& cmp_tol = {}) {
  if (!is_projector_deviator(t1) || !is_projector_deviator(t2))
    throw std::invalid_argument("separate_h4_pair: t is not a unit-axis projector deviator");

  // The pair (H, t) has the joint symmetry of the elasticity tensor
  // (0, 0, t, 0, H); classify that embedding.
  auto embed = [&](const Harm4<T>& h, const Harm2<T>& t) {
    HarmonicParts<T> p;
    p.d_dev = t;
    p.h = h;
    return reconstruct(p);
  };
  SeparationVerdict out;
  out.label_a = classify_ela(embed(h1, t1), cls_tol);
  out.label_b = classify_ela(embed(h2, t2), cls_tol);
  auto in_union = [](StratumLabel l) {
    return l == StratumLabel::TransverselyIsotropic || l == StratumLabel::Tetragonal ||
           l == StratumLabel::Trigonal;
  };
  if (!in_union(out.label_a) || !in_union(out.label_b)) {
    out.verdict = Verdict::OutOfScope;
    return out;
  }

  auto values = [](const Harm4<T>& h, const Harm2<T>& t) {
    H4Invariants<T> inv = invariants_h4(h);
    T trhxt2 = norm2(trace_contract(cross_product(h.tensor(), t.tensor())));
    T tht = quad_form(h.tensor(), mat_from_sym2(t.tensor()));
    return std::array<T, 4>{inv.i3, inv.i4, trhxt2, tht};
  };
  static const char* names[4] = {"I3", "I4", "|tr(Hxt)|^2", "t:H:t"};
  static const int degs[4] = {3, 4, 2, 1};
  auto va = values(h1, t1);
  auto vb = values(h2, t2);
  T scale2 = h1.norm2();
  if (scale2 < h2.norm2()) scale2 = h2.norm2();
  T rel2 = cmp_tol.rel * cmp_tol.rel;
  for (int k = 0; k < 4; ++k) {
    if (!detail::invariant_equal(va[static_cast<std::size_t>(k)], vb[static_cast<std::size_t>(k)],
                                 rel2, scale2, degs[k])) {
      out.verdict = Verdict::DifferentOrbit;
      out.witness = names[k];
      return out;
    }
  }
  out.verdict = Verdict::SameOrbit;
  return out;
}

}  // namespace elastica

#endif  // ELASTICA_BASES_HPP
