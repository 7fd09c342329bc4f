#ifndef ELASTICA_CLASSIFICATION_HPP
#define ELASTICA_CLASSIFICATION_HPP

// Symmetry-class detection for second-order symmetric tensors, fourth-order
// harmonic tensors and elasticity tensors.
//
// Zero tests are homogeneous: a covariant of degree k in a source tensor of
// norm s counts as zero when its norm is below rel * s^k. With an exact
// scalar and rel = 0 every test is an exact algebraic equality.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "covariants.hpp"
#include "elasticity.hpp"
#include "harmonic.hpp"
#include "linalg.hpp"
#include "sym_tensor.hpp"

namespace elastica {

enum class StratumLabel {
  Triclinic,
  Monoclinic,
  Orthotropic,
  Trigonal,
  Tetragonal,
  TransverselyIsotropic,
  Cubic,
  Isotropic,
  LowerThanTetraTrig,  // elasticity fallback: below the tetragonal/trigonal union
};

inline const char* to_string(StratumLabel s) {
  switch (s) {
    case StratumLabel::Triclinic: return "triclinic";
    case StratumLabel::Monoclinic: return "monoclinic";
    case StratumLabel::Orthotropic: return "orthotropic";
    case StratumLabel::Trigonal: return "trigonal";
    case StratumLabel::Tetragonal: return "tetragonal";
    case StratumLabel::TransverselyIsotropic: return "transversely_isotropic";
    case StratumLabel::Cubic: return "cubic";
    case StratumLabel::Isotropic: return "isotropic";
    case StratumLabel::LowerThanTetraTrig: return "lower_than_tetra_trig";
  }
  return "?";
}

inline std::optional<StratumLabel> stratum_from_string(const std::string& s) {
  using L = StratumLabel;
  for (L l : {L::Triclinic, L::Monoclinic, L::Orthotropic, L::Trigonal,
              L::Tetragonal, L::TransverselyIsotropic, L::Cubic, L::Isotropic,
              L::LowerThanTetraTrig})
    if (s == to_string(l)) return l;
  return std::nullopt;
}

// Partial order of the eight classes (arrows of the symmetry-breaking
// diagram): returns true when `a` is at least as symmetric as `b`.
// The elasticity fallback label is comparable to nothing but itself.
inline bool at_least_as_symmetric(StratumLabel a, StratumLabel b) {
  using L = StratumLabel;
  if (a == L::LowerThanTetraTrig || b == L::LowerThanTetraTrig) return a == b;
  if (a == b) return true;
  static const std::array<std::array<L, 2>, 10> edges = {{
      {L::Triclinic, L::Monoclinic},
      {L::Monoclinic, L::Orthotropic},
      {L::Monoclinic, L::Trigonal},
      {L::Orthotropic, L::Tetragonal},
      {L::Tetragonal, L::Cubic},
      {L::Trigonal, L::Cubic},
      {L::Trigonal, L::TransverselyIsotropic},
      {L::Tetragonal, L::TransverselyIsotropic},
      {L::Cubic, L::Isotropic},
      {L::TransverselyIsotropic, L::Isotropic},
  }};
  // Small graph: breadth-first reachability from b up to a.
  std::vector<L> frontier{b};
  std::vector<L> seen{b};
  while (!frontier.empty()) {
    L cur = frontier.back();
    frontier.pop_back();
    for (const auto& e : edges) {
      if (e[0] != cur) continue;
      if (e[1] == a) return true;
      bool found = false;
      for (L s : seen) found = found || (s == e[1]);
      if (!found) {
        seen.push_back(e[1]);
        frontier.push_back(e[1]);
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

template <class T>
struct Tolerance {
  T rel = default_rel();

  static T default_rel() {
    if constexpr (ScalarTraits<T>::is_exact)
      return ScalarTraits<T>::zero();
    else
      return 1e-9;
  }
  static Tolerance exact() { return Tolerance{ScalarTraits<T>::zero()}; }
};

namespace detail {

template <class T>
T pow_int(const T& x, int n) {
  T r = ScalarTraits<T>::one();
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

// True when a squared covariant magnitude of the given degree vanishes
// relative to the squared source scale.
template <class T>
bool zero2(const T& sq, const Tolerance<T>& tol, const T& scale2, int degree) {
  return sq <= tol.rel * tol.rel * pow_int(scale2, degree);
}

}  // namespace detail

template <class T>
StratumLabel classify_sym2(const Mat3<T>& a, const Tolerance<T>& tol = {}) {
  T s2 = a.frobenius2();
  Mat3<T> ap = deviator(a);
  if (detail::zero2(ap.frobenius2(), tol, s2, 1)) return StratumLabel::Isotropic;
  SymTensor<T> s = s_covariant(sym2_from_mat(a));
  if (detail::zero2(norm2(s), tol, s2, 3))
    return StratumLabel::TransverselyIsotropic;
  return StratumLabel::Orthotropic;
}

template <class T>
StratumLabel classify_sym2(const SymTensor<T>& a, const Tolerance<T>& tol = {}) {
  return classify_sym2(mat_from_sym2(a), tol);
}

// ---------------------------------------------------------------------------
// Joint symmetry class of a tuple of second-order symmetric tensors, each
// with a homogeneity degree relative to a common source scale.

enum class TupleClass { Isotropic, TransverselyIsotropic, Orthotropic, Monoclinic, Triclinic };

template <class T>
TupleClass sym2_tuple_class(std::span<const Mat3<T>> xs, std::span<const int> degrees,
                            const Tolerance<T>& tol, const T& scale2) {
  const int n = static_cast<int>(xs.size());
  std::vector<Mat3<T>> dev(xs.size());
  std::vector<bool> nz(xs.size());
  bool any_nz = false;
  for (int i = 0; i < n; ++i) {
    dev[static_cast<std::size_t>(i)] = deviator(xs[static_cast<std::size_t>(i)]);
    nz[static_cast<std::size_t>(i)] =
        !detail::zero2(dev[static_cast<std::size_t>(i)].frobenius2(), tol, scale2,
                       degrees[static_cast<std::size_t>(i)]);
    any_nz = any_nz || nz[static_cast<std::size_t>(i)];
  }
  if (!any_nz) return TupleClass::Isotropic;

  int ci = -1, cj = -1;
  bool commuting = true;
  for (int i = 0; i < n && commuting; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat3<T> c = commutator(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
      if (!detail::zero2(c.frobenius2(), tol, scale2,
                         degrees[static_cast<std::size_t>(i)] + degrees[static_cast<std::size_t>(j)])) {
        commuting = false;
        ci = i;
        cj = j;
        break;
      }
    }

  if (commuting) {
    // Common eigenbasis. The joint class is transversely isotropic exactly
    // when the nonzero deviators are all transversely isotropic and pairwise
    // proportional; otherwise three distinguishable axes remain.
    for (int i = 0; i < n; ++i) {
      if (!nz[static_cast<std::size_t>(i)]) continue;
      const Mat3<T>& di = dev[static_cast<std::size_t>(i)];
      SymTensor<T> si = s_covariant(sym2_from_mat(di));
      if (!detail::zero2(norm2(si), tol, scale2, 3 * degrees[static_cast<std::size_t>(i)]))
        return TupleClass::Orthotropic;
      for (int j = i + 1; j < n; ++j) {
        if (!nz[static_cast<std::size_t>(j)]) continue;
        const Mat3<T>& dj = dev[static_cast<std::size_t>(j)];
        T dotij = ScalarTraits<T>::zero();
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) dotij += di(r, c) * dj(r, c);
        Mat3<T> res = di.frobenius2() * dj - dotij * di;
        if (!detail::zero2(res.frobenius2(), tol, scale2,
                           2 * degrees[static_cast<std::size_t>(i)] + degrees[static_cast<std::size_t>(j)]))
          return TupleClass::Orthotropic;
      }
    }
    return TupleClass::TransverselyIsotropic;
  }

  // Non-commuting: any common eigenvector lies in the kernel of every
  // commutator, i.e. along the axial vector of a nonzero one.
  Mat3<T> c = commutator(xs[static_cast<std::size_t>(ci)], xs[static_cast<std::size_t>(cj)]);
  Vec3<T> w = epsilon_contract(c);
  T w2 = w.norm2();
  for (int i = 0; i < n; ++i) {
    Vec3<T> xw = xs[static_cast<std::size_t>(i)] * w;
    Vec3<T> r = xw.cross(w);
    T thr_deg = detail::pow_int(scale2, degrees[static_cast<std::size_t>(i)]);
    if (!(r.norm2() <= tol.rel * tol.rel * thr_deg * w2 * w2))
      return TupleClass::Triclinic;
  }
  return TupleClass::Monoclinic;
}

// ---------------------------------------------------------------------------
// Transversely isotropic triplet test (shared axis of three deviators).

namespace detail {

// Internal variant with explicit squared scales per entry; the third entry
// plays the degree-2 role so that m is homogeneous of degree 4.
template <class T>
std::optional<Harm2<T>> triplet_ti_axis_tensor(const Mat3<T>& a, const Mat3<T>& b,
                                               const Mat3<T>& c, const Tolerance<T>& tol,
                                               const T& a2, const T& b2, const T& c2) {
  Mat3<T> ap = deviator(a), bp = deviator(b), cp = deviator(c);
  Mat3<T> m = deviator(ap.frobenius2() * (ap * ap) + bp.frobenius2() * (bp * bp) + cp * cp);

  // The first two entries contribute |a|^4-sized terms, the third |c|^2-sized
  // ones, so the entry scale of m is max(a2^2, b2^2, c2).
  T m_scale = a2 * a2;
  if (m_scale < b2 * b2) m_scale = b2 * b2;
  if (m_scale < c2) m_scale = c2;

  if (m.frobenius2() <= tol.rel * tol.rel * m_scale * m_scale) return std::nullopt;
  if (classify_sym2(m, tol) != StratumLabel::TransverselyIsotropic) return std::nullopt;

  Sym2Invariants<T> inv = invariants_sym2(m);
  // m = 3 (J3/J2) t with t the unit-axis projector deviator; re-project to
  // keep the scaled tensor traceless to machine precision.
  Harm2<T> t = Harm2<T>(deviator((inv.j2 / (T(3) * inv.j3)) * sym2_from_mat(m)), 1e-9);

  Mat3<T> tm = t.mat();
  // x' must equal (3/2)(x : t) t for each entry.
  auto residual2 = [&](const Mat3<T>& x, const Mat3<T>& xp) {
    T xt = ScalarTraits<T>::zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) xt += x(i, j) * tm(i, j);
    return (xp - (frac<T>(3, 2) * xt) * tm).frobenius2();
  };
  T rel2 = tol.rel * tol.rel;
  bool ok = residual2(a, ap) <= rel2 * a2 && residual2(b, bp) <= rel2 * b2 &&
            residual2(c, cp) <= rel2 * c2;
  if (!ok) return std::nullopt;
  return t;
}

template <class T>
Vec3<T> axis_from_projector(const Harm2<T>& t) {
  // t + q/3 = n (x) n: pick the dominant column as the axis direction.
  Mat3<T> p = t.mat();
  for (int i = 0; i < 3; ++i) p(i, i) = p(i, i) + frac<T>(1, 3);
  int best = 0;
  double best_v = -1;
  for (int i = 0; i < 3; ++i) {
    double v = to_double(p(i, i));
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  Vec3<T> dir;
  for (int i = 0; i < 3; ++i) dir[i] = p(i, best);
  if constexpr (!ScalarTraits<T>::is_exact) {
    double n = std::sqrt(to_double(dir.norm2()));
    if (n > 0)
      for (int i = 0; i < 3; ++i) dir[i] = dir[i] * T(1.0 / n);
  }
  return dir;
}

}  // namespace detail

// Common transverse-isotropy axis of three second-order tensors, when the
// triplet is transversely isotropic (all deviators multiples of one
// (n (x) n)', not all zero). The direction is unit in floating mode and an
// unnormalized rational direction in exact mode.
template <class T>
std::optional<Vec3<T>> triplet_transversely_isotropic(const Mat3<T>& a, const Mat3<T>& b,
                                                      const Mat3<T>& c,
                                                      const Tolerance<T>& tol = {}) {
  auto t = detail::triplet_ti_axis_tensor(a, b, c, tol, a.frobenius2(), b.frobenius2(),
                                          c.frobenius2());
  if (!t) return std::nullopt;
  return detail::axis_from_projector(*t);
}

// ---------------------------------------------------------------------------
// Fourth-order harmonic tensor classification, eight classes.

template <class T>
struct ClassificationDiag {
  StratumLabel label = StratumLabel::Isotropic;
  // (name, squared magnitude, squared threshold) for each decisive test.
  std::vector<std::tuple<std::string, double, double>> tests;
};

template <class T>
ClassificationDiag<T> classify_h4_report(const Harm4<T>& h, const Tolerance<T>& tol = {}) {
  ClassificationDiag<T> out;
  T s2 = h.norm2();
  T rel2 = tol.rel * tol.rel;
  auto note = [&](const char* name, const T& sq, int deg) {
    out.tests.emplace_back(name, to_double(sq),
                           to_double(rel2 * detail::pow_int(s2, deg)));
    return detail::zero2(sq, tol, s2, deg);
  };

  if (ScalarTraits<T>::is_zero(s2)) {
    out.label = StratumLabel::Isotropic;
    out.tests.emplace_back("|H|^2", 0.0, 0.0);
    return out;
  }

  Mat3<T> d2m = d2_mat(h);
  Mat3<T> d2p = deviator(d2m);
  if (note("|d2'|^2", d2p.frobenius2(), 2)) {
    out.label = StratumLabel::Cubic;
    return out;
  }

  bool d2_ti = classify_sym2(d2m, tol) == StratumLabel::TransverselyIsotropic;
  if (d2_ti) {
    SymTensor<T> hxd2 = cross_product(h.tensor(), sym2_from_mat(d2m));
    if (note("|H x d2|^2", norm2(hxd2), 3)) {
      out.label = StratumLabel::TransverselyIsotropic;
      return out;
    }
    SymTensor<T> tr_hxd2 = trace_contract(hxd2);
    if (note("|tr(H x d2)|^2", norm2(tr_hxd2), 3)) {
      out.label = StratumLabel::Tetragonal;
      return out;
    }
    Mat3<T> c3 = apply_sym4(h.tensor(), d2m);
    SymTensor<T> cx = cross_product(sym2_from_mat(c3), sym2_from_mat(d2m));
    if (note("|(H:d2) x d2|^2", norm2(cx), 5)) {
      out.label = StratumLabel::Trigonal;
      return out;
    }
  }

  SecondOrderCovariants<T> cov = second_order_covariants(h);
  bool v5z = note("|v5|^2", cov.v5.norm2(), 5);
  bool v6z = note("|v6|^2", cov.v6.norm2(), 6);
  std::array<Mat3<T>, 2> pair = {d2m, cov.c3};
  std::array<int, 2> pair_deg = {2, 3};
  if (v5z && v6z &&
      sym2_tuple_class(std::span<const Mat3<T>>(pair), std::span<const int>(pair_deg),
                       tol, s2) == TupleClass::Orthotropic) {
    out.label = StratumLabel::Orthotropic;
    return out;
  }
  std::array<Mat3<T>, 3> triple = {d2m, cov.c3, cov.c4};
  std::array<int, 3> triple_deg = {2, 3, 4};
  TupleClass tc = sym2_tuple_class(std::span<const Mat3<T>>(triple),
                                   std::span<const int>(triple_deg), tol, s2);
  out.label = (tc == TupleClass::Monoclinic) ? StratumLabel::Monoclinic
                                             : StratumLabel::Triclinic;
  return out;
}

template <class T>
StratumLabel classify_h4(const Harm4<T>& h, const Tolerance<T>& tol = {}) {
  return classify_h4_report(h, tol).label;
}

// ---------------------------------------------------------------------------
// Elasticity tensor classification: the five upper classes, with a fallback
// for anything below the tetragonal/trigonal union.

template <class T>
ClassificationDiag<T> classify_ela_report(const ElasticityTensor<T>& e,
                                          const Tolerance<T>& tol = {}) {
  ClassificationDiag<T> out;
  T s2 = e.norm2();
  T rel2 = tol.rel * tol.rel;
  auto note = [&](const char* name, const T& sq, int deg) {
    out.tests.emplace_back(name, to_double(sq),
                           to_double(rel2 * detail::pow_int(s2, deg)));
    return detail::zero2(sq, tol, s2, deg);
  };

  HarmonicParts<T> parts = decompose(e);
  Mat3<T> d = e.dilatation();
  Mat3<T> v = e.voigt_trace();
  Mat3<T> dp = parts.d_dev.mat();
  Mat3<T> vp = parts.v_dev.mat();
  Mat3<T> d2m = d2_mat(parts.h);
  const SymTensor<T>& h = parts.h.tensor();

  bool dpz = note("|d'|^2", dp.frobenius2(), 1);
  bool vpz = note("|v'|^2", vp.frobenius2(), 1);
  bool d2z = note("|d2|^2", d2m.frobenius2(), 2);
  if (dpz && vpz && d2z) {
    out.label = StratumLabel::Isotropic;
    return out;
  }
  bool d2pz = note("|d2'|^2", deviator(d2m).frobenius2(), 2);
  if (dpz && vpz && d2pz) {
    out.label = StratumLabel::Cubic;
    return out;
  }

  auto ti = detail::triplet_ti_axis_tensor(d, v, d2m, tol, s2, s2, s2 * s2);
  if (ti) {
    SymTensor<T> hxd2 = cross_product(h, sym2_from_mat(d2m));
    SymTensor<T> hxd = cross_product(h, sym2_from_mat(d));
    SymTensor<T> hxv = cross_product(h, sym2_from_mat(v));
    bool z1 = note("|H x d2|^2", norm2(hxd2), 3);
    bool z2 = note("|H x d|^2", norm2(hxd), 2);
    bool z3 = note("|H x v|^2", norm2(hxv), 2);
    if (z1 && z2 && z3) {
      out.label = StratumLabel::TransverselyIsotropic;
      return out;
    }
    bool t1 = note("|tr(H x d2)|^2", norm2(trace_contract(hxd2)), 3);
    bool t2 = note("|tr(H x d)|^2", norm2(trace_contract(hxd)), 2);
    bool t3 = note("|tr(H x v)|^2", norm2(trace_contract(hxv)), 2);
    if (t1 && t2 && t3 && !(z1 && z2 && z3)) {
      out.label = StratumLabel::Tetragonal;
      return out;
    }
    Mat3<T> hd2 = apply_sym4(h, d2m);
    Mat3<T> hd = apply_sym4(h, d);
    Mat3<T> hv = apply_sym4(h, v);
    bool x1 = note("|d2 x (H:d2)|^2",
                   norm2(cross_product(sym2_from_mat(d2m), sym2_from_mat(hd2))), 5);
    bool x2 = note("|d x (H:d)|^2",
                   norm2(cross_product(sym2_from_mat(d), sym2_from_mat(hd))), 3);
    bool x3 = note("|v x (H:v)|^2",
                   norm2(cross_product(sym2_from_mat(v), sym2_from_mat(hv))), 3);
    if (x1 && x2 && x3 && !(t1 && t2 && t3)) {
      out.label = StratumLabel::Trigonal;
      return out;
    }
  }
  out.label = StratumLabel::LowerThanTetraTrig;
  return out;
}

template <class T>
StratumLabel classify_ela(const ElasticityTensor<T>& e, const Tolerance<T>& tol = {}) {
  return classify_ela_report(e, tol).label;
}

}  // namespace elastica

#endif  // ELASTICA_CLASSIFICATION_HPP
