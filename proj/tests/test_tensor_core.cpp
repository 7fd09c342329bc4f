#include <doctest.h>

#include "elastica/elasticity.hpp"
#include "elastica/normal_forms.hpp"
#include "elastica/rotation.hpp"
#include "elastica/sym_tensor.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace elastica;
using testing::close_rel;

namespace {

template <class T>
SymTensor<T> sym_from_dense(const oracle::Dense<T>& d) {
  return symmetrize<T>(d.order, std::span<const T>(d.v.data(), d.v.size()));
}

}  // namespace

TEST_CASE("symmetrize: idempotent on symmetric input") {
  std::mt19937_64 rng(1);
  for (int order = 1; order <= 4; ++order) {
    SymTensor<double> s = testing::random_sym_tensor<double>(order, rng);
    oracle::Dense<double> dense = oracle::from_sym(s);
    SymTensor<double> again = sym_from_dense(dense);
    for (int k = 0; k < s.size(); ++k) CHECK(close_rel(again[k], s[k], 1e-14));
  }
}

TEST_CASE("symmetrize: elementary products") {
  // e1 (x) e2: the (12) slot averages two entries.
  oracle::Dense<double> d(2);
  d.at({0, 1}) = 1.0;
  SymTensor<double> s = sym_from_dense(d);
  CHECK(s.at({0, 1}) == doctest::Approx(0.5));
  CHECK(s.at({1, 0}) == doctest::Approx(0.5));
  CHECK(s.at({0, 0}) == 0.0);

  // e1 (x) e2 (x) e3: value 1/6 at the {1,2,3} multiset.
  oracle::Dense<double> d3(3);
  d3.at({0, 1, 2}) = 1.0;
  SymTensor<double> s3 = sym_from_dense(d3);
  CHECK(s3.at({0, 1, 2}) == doctest::Approx(1.0 / 6.0));
  CHECK(s3.at({2, 1, 0}) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("symmetrize agrees with the dense oracle on random tensors") {
  std::mt19937_64 rng(2);
  for (int order = 2; order <= 4; ++order) {
    oracle::Dense<double> dense(order);
    for (auto& x : dense.v) x = testing::random_scalar<double>(rng);
    SymTensor<double> lib = sym_from_dense(dense);
    oracle::Dense<double> ref = oracle::symmetrize(dense);
    CHECK(oracle::max_abs_diff(oracle::from_sym(lib), ref) < 1e-13);
  }
}

TEST_CASE("sym_product: q (.) q slot values and trace") {
  SymTensor<Exact> q = metric_q<Exact>();
  SymTensor<Exact> qq = sym_product(q, q);

  // Oracle: symmetrized outer product of the metric with itself.
  oracle::Dense<Exact> ref = oracle::symmetrize(oracle::outer(oracle::from_sym(q), oracle::from_sym(q)));
  for (int s = 0; s < qq.size(); ++s) {
    auto tup = qq.tuple(s);
    std::vector<int> idx(tup.begin(), tup.begin() + 4);
    CHECK(qq[s] == ref.at(idx));
  }
  CHECK(qq.at({0, 0, 1, 1}) == Exact::rational(1, 3));

  // trace_contract(q (.) q) = (5/3) q.
  SymTensor<Exact> tr = trace_contract(qq);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Exact want = (i == j) ? Exact::rational(5, 3) : Exact(0);
      CHECK(tr.at({i, j}) == want);
    }
}

TEST_CASE("sym_product: commutative, bilinear, matches oracle") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    SymTensor<double> a = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> b = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> ab = sym_product(a, b);
    SymTensor<double> ba = sym_product(b, a);
    for (int s = 0; s < ab.size(); ++s) CHECK(close_rel(ab[s], ba[s], 1e-13));

    oracle::Dense<double> ref =
        oracle::symmetrize(oracle::outer(oracle::from_sym(a), oracle::from_sym(b)));
    CHECK(oracle::max_abs_diff(oracle::from_sym(ab), ref) < 1e-13);
  }
  SymTensor<double> v1 = testing::random_sym_tensor<double>(1, rng);
  SymTensor<double> v2 = testing::random_sym_tensor<double>(1, rng);
  SymTensor<double> uv = sym_product(v1, v2);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      CHECK(close_rel(uv.at({i, j}),
                      0.5 * (v1.at({i}) * v2.at({j}) + v1.at({j}) * v2.at({i})), 1e-14));
}

TEST_CASE("sym_product and cross_product are bilinear") {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 20; ++rep) {
    SymTensor<double> a = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> b = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> c = testing::random_sym_tensor<double>(2, rng);
    double lam = testing::random_scalar<double>(rng);

    SymTensor<double> lhs = sym_product(a + lam * b, c);
    SymTensor<double> rhs = sym_product(a, c) + lam * sym_product(b, c);
    CHECK(to_double(norm2(lhs - rhs)) < 1e-22 * (1 + to_double(norm2(lhs))));

    SymTensor<double> lhx = cross_product(a + lam * b, c);
    SymTensor<double> rhx = cross_product(a, c) + lam * cross_product(b, c);
    CHECK(to_double(norm2(lhx - rhx)) < 1e-22 * (1 + to_double(norm2(lhx))));
    SymTensor<double> lhx2 = cross_product(c, a + lam * b);
    SymTensor<double> rhx2 = cross_product(c, a) + lam * cross_product(c, b);
    CHECK(to_double(norm2(lhx2 - rhx2)) < 1e-22 * (1 + to_double(norm2(lhx2))));
  }
}

TEST_CASE("sym_product / cross_product: order caps and scalar rejection") {
  SymTensor<double> s4(4), s3(3), s0(0);
  CHECK_THROWS_AS((void)sym_product(s4, s3), std::invalid_argument);
  CHECK_THROWS_AS((void)cross_product(s4, s4), std::invalid_argument);
  CHECK_THROWS_AS((void)cross_product(s0, s3), std::invalid_argument);
  CHECK_THROWS_AS(SymTensor<double>(7), std::invalid_argument);
  std::vector<double> dense(3 * 3 * 3 * 3 * 3 * 3 * 3, 0.0);
  CHECK_THROWS_AS((void)symmetrize<double>(7, std::span<const double>(dense.data(), dense.size())),
                  std::invalid_argument);
}

TEST_CASE("elasticity from_kelvin rejects asymmetric matrices") {
  Mat6<double> m;
  m(0, 1) = 1.0;  // m(1, 0) stays 0
  m(0, 0) = 5.0;
  CHECK_THROWS_AS((void)ElasticityTensor<double>::from_kelvin(m), std::invalid_argument);
}

TEST_CASE("cross_product: S x q = 0 and a x a = 0") {
  std::mt19937_64 rng(4);
  SymTensor<Exact> q = metric_q<Exact>();
  for (int order = 1; order <= 4; ++order) {
    SymTensor<Exact> s = testing::random_sym_tensor<Exact>(order, rng);
    SymTensor<Exact> sq = cross_product(s, q);
    CHECK(ScalarTraits<Exact>::is_zero(norm2(sq)));
  }
  for (int rep = 0; rep < 5; ++rep) {
    SymTensor<Exact> a = testing::random_sym_tensor<Exact>(2, rng);
    CHECK(ScalarTraits<Exact>::is_zero(norm2(cross_product(a, a))));
  }
}

TEST_CASE("cross_product: vectors reduce to the classical cross product") {
  std::mt19937_64 rng(5);
  SymTensor<double> u = testing::random_sym_tensor<double>(1, rng);
  SymTensor<double> v = testing::random_sym_tensor<double>(1, rng);
  SymTensor<double> w = cross_product(u, v);
  Vec3<double> uu, vv;
  for (int i = 0; i < 3; ++i) {
    uu[i] = u.at({i});
    vv[i] = v.at({i});
  }
  Vec3<double> ref = uu.cross(vv);
  for (int i = 0; i < 3; ++i) CHECK(close_rel(w.at({i}), ref[i], 1e-14));
}

TEST_CASE("cross_product agrees with the dense oracle") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 5; ++rep) {
    SymTensor<double> a = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> h = testing::random_sym_tensor<double>(4, rng);
    oracle::Dense<double> ref = oracle::cross(oracle::from_sym(h), oracle::from_sym(a));
    SymTensor<double> lib = cross_product(h, a);
    CHECK(oracle::max_abs_diff(oracle::from_sym(lib), ref) < 1e-12);
  }
}

TEST_CASE("sym2 covariant identity: 12 |a x a^2|^2 = J2^3 - 6 J3^2") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    Mat3<double> a = testing::random_sym2<double>(rng);
    SymTensor<double> s = s_covariant(sym2_from_mat(a));
    Sym2Invariants<double> inv = invariants_sym2(a);
    double lhs = 12.0 * norm2(s);
    double rhs = std::pow(inv.j2, 3) - 6.0 * inv.j3 * inv.j3;
    CHECK(close_rel(lhs, rhs, 1e-9));
  }
  // Exact version.
  std::mt19937_64 rng2(8);
  for (int rep = 0; rep < 10; ++rep) {
    Mat3<Exact> a = testing::random_sym2<Exact>(rng2);
    SymTensor<Exact> s = s_covariant(sym2_from_mat(a));
    Sym2Invariants<Exact> inv = invariants_sym2(a);
    CHECK(Exact(12) * norm2(s) == inv.j2 * inv.j2 * inv.j2 - Exact(6) * inv.j3 * inv.j3);
  }
}

TEST_CASE("s_covariant frozen value at diag(0,1,2)") {
  Mat3<Exact> a = Mat3<Exact>::diag(Exact(0), Exact(1), Exact(2));
  SymTensor<Exact> s = s_covariant(sym2_from_mat(a));
  Sym2Invariants<Exact> inv = invariants_sym2(a);
  Exact want = (inv.j2 * inv.j2 * inv.j2 - Exact(6) * inv.j3 * inv.j3) / Exact(12);
  CHECK(norm2(s) == want);
  CHECK(norm2(s) == Exact::rational(2, 3));
  CHECK(norm2(s) > Exact(0));
}

TEST_CASE("trace_contract and deviator basics") {
  SymTensor<Exact> q = metric_q<Exact>();
  CHECK(ScalarTraits<Exact>::is_zero(norm2(deviator(q))));

  // deviator(n (x) n) for unit n: the projector identity t^2 = t/3 + 2q/9.
  Mat3<double> p;
  double n[3] = {0.0, 0.0, 1.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) = n[i] * n[j];
  Mat3<double> t = deviator(p);
  CHECK(t(2, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(t(0, 0) == doctest::Approx(-1.0 / 3.0));
  Mat3<double> should_vanish = t * t - frac<double>(1, 3) * t;
  for (int i = 0; i < 3; ++i) should_vanish(i, i) -= 2.0 / 9.0;
  CHECK(should_vanish.frobenius2() < 1e-28);
  CHECK(t.frobenius2() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("rotation: construction, validation, determinism") {
  CHECK_THROWS_AS(Rotation<double>(Mat3<double>::diag(1, 1, -1)), std::invalid_argument);
  CHECK_THROWS_AS(Rotation<double>(Mat3<double>::diag(2, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(rotation_from_axis_angle({}, 1.0), std::invalid_argument);

  Vec3<double> e3;
  e3[2] = 1.0;
  Rotation<double> r0 = rotation_from_axis_angle(e3, 0.0);
  CHECK((r0.matrix() - Mat3<double>::identity()).frobenius2() < 1e-28);

  // Third-order rotation about e3 composes to the identity.
  Rotation<double> r3 = rotation_from_axis_angle(e3, 2.0 * 3.14159265358979323846 / 3.0);
  Rotation<double> r333 = r3 * r3 * r3;
  CHECK((r333.matrix() - Mat3<double>::identity()).frobenius2() < 1e-24);

  Rotation<double> a = random_rotation(42);
  Rotation<double> b = random_rotation(42);
  CHECK((a.matrix() - b.matrix()).frobenius2() == 0.0);
  Rotation<double> c = random_rotation(43);
  CHECK((a.matrix() - c.matrix()).frobenius2() > 1e-6);
}

TEST_CASE("rotate: group action, isometry, fixed points") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 5; ++rep) {
    SymTensor<double> s = testing::random_sym_tensor<double>(3, rng);
    Rotation<double> g1 = random_rotation(100 + static_cast<unsigned>(rep));
    Rotation<double> g2 = random_rotation(200 + static_cast<unsigned>(rep));
    SymTensor<double> lhs = rotate(g1 * g2, s);
    SymTensor<double> rhs = rotate(g1, rotate(g2, s));
    CHECK(oracle::max_abs_diff(oracle::from_sym(lhs), oracle::from_sym(rhs)) < 1e-12);
    CHECK(close_rel(norm2(rotate(g1, s)), norm2(s), 1e-12));

    // Dense-oracle cross-check of the action itself.
    oracle::Dense<double> ref = oracle::rotate(g1.matrix(), oracle::from_sym(s));
    CHECK(oracle::max_abs_diff(oracle::from_sym(rotate(g1, s)), ref) < 1e-12);
  }

  // rotate(identity, X) = X.
  SymTensor<double> s = testing::random_sym_tensor<double>(4, rng);
  SymTensor<double> s_id = rotate(Rotation<double>::identity(), s);
  CHECK(oracle::max_abs_diff(oracle::from_sym(s), oracle::from_sym(s_id)) == 0.0);

  // A fourth-order rotation about e3 fixes the tetragonal form.
  Vec3<double> e3;
  e3[2] = 1.0;
  Rotation<double> r4 = rotation_from_axis_angle(e3, 3.14159265358979323846 / 2.0);
  Harm4<double> h = h4_tetragonal(0.7, 1.3);
  Harm4<double> hr = rotate(r4, h);
  CHECK(oracle::max_abs_diff(oracle::from_sym(h.tensor()), oracle::from_sym(hr.tensor())) < 1e-12);
}

TEST_CASE("equivariance of the core operations") {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 20; ++rep) {
    Rotation<double> g = random_rotation(300 + static_cast<unsigned>(rep));
    SymTensor<double> a = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> b = testing::random_sym_tensor<double>(2, rng);
    SymTensor<double> h = testing::random_sym_tensor<double>(4, rng);

    auto diff = [](const SymTensor<double>& x, const SymTensor<double>& y) {
      return oracle::max_abs_diff(oracle::from_sym(x), oracle::from_sym(y));
    };
    CHECK(diff(rotate(g, sym_product(a, b)), sym_product(rotate(g, a), rotate(g, b))) < 1e-9);
    CHECK(diff(rotate(g, cross_product(h, a)), cross_product(rotate(g, h), rotate(g, a))) < 1e-9);
    CHECK(diff(rotate(g, trace_contract(h)), trace_contract(rotate(g, h))) < 1e-9);
    CHECK(diff(rotate(g, deviator(a)), deviator(rotate(g, a))) < 1e-9);
  }
}

TEST_CASE("exact-mode equivariance via Cayley rotations") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 3; ++rep) {
    Rotation<Exact> g = random_rotation<Exact>(400 + static_cast<unsigned>(rep));
    SymTensor<Exact> a = testing::random_sym_tensor<Exact>(2, rng);
    SymTensor<Exact> h = testing::random_sym_tensor<Exact>(4, rng);
    SymTensor<Exact> lhs = rotate(g, cross_product(h, a));
    SymTensor<Exact> rhs = cross_product(rotate(g, h), rotate(g, a));
    CHECK(ScalarTraits<Exact>::is_zero(norm2(lhs - rhs)));
    CHECK(norm2(rotate(g, h)) == norm2(h));
  }
}

TEST_CASE("kelvin matrix of the cubic form and round trips") {
  // delta = 1: diagonal (8, 8, 8, -8, -8, -8), off-diagonal -4.
  Mat6<Exact> m = kelvin_matrix(h4_cubic(Exact(1)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? Exact(8) : Exact(-4)));
  for (int i = 3; i < 6; ++i)
    for (int j = 3; j < 6; ++j) CHECK(m(i, j) == (i == j ? Exact(-8) : Exact(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) CHECK(m(i, j) == Exact(0));

  // Zero tensor -> zero matrix.
  Mat6<double> zero = kelvin_matrix(Harm4<double>());
  double s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += std::fabs(zero(i, j));
  CHECK(s == 0.0);

  // Round trip on random harmonic tensors (float mode).
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    Harm4<double> h = testing::random_harm4<double>(rng);
    Harm4<double> back = harm4_from_kelvin(kelvin_matrix(h));
    CHECK(oracle::max_abs_diff(oracle::from_sym(h.tensor()), oracle::from_sym(back.tensor())) <
          1e-12);
  }

  // Exact round trip, including the trigonal form whose Kelvin matrix
  // carries sqrt2 entries.
  Harm4<Exact> hd3 = h4_trigonal(Exact(1), Exact(1));
  Mat6<Exact> md3 = kelvin_matrix(hd3);
  CHECK(md3(0, 3) == -Exact::sqrt2());
  CHECK(md3(4, 5) == Exact(-2));
  Harm4<Exact> back = harm4_from_kelvin(md3);
  CHECK(ScalarTraits<Exact>::is_zero(norm2(back.tensor() - hd3.tensor())));
}

TEST_CASE("harm4_from_kelvin: rejects bad matrices") {
  Mat6<double> m = kelvin_matrix(h4_cubic(1.0));
  m(0, 1) += 0.5;  // asymmetric
  CHECK_THROWS_AS((void)harm4_from_kelvin(m), std::invalid_argument);

  Mat6<double> m2 = kelvin_matrix(h4_cubic(1.0));
  m2(0, 0) += 1.0;  // symmetric but violates the harmonic relations
  m2(5, 5) += 0.3;
  CHECK_THROWS_AS((void)harm4_from_kelvin(m2), std::invalid_argument);
}

TEST_CASE("elasticity tensor: kelvin/voigt conversion and traces") {
  std::mt19937_64 rng(13);
  ElasticityTensor<double> e = testing::random_elasticity<double>(rng);

  // Kelvin isometry: matrix Frobenius norm equals the tensor norm.
  double full = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) full += e(i, j, k, l) * e(i, j, k, l);
  CHECK(close_rel(full, e.norm2(), 1e-12));

  // voigt -> kelvin -> voigt is exact in exact mode.
  std::mt19937_64 rng2(14);
  ElasticityTensor<Exact> ex = testing::random_elasticity<Exact>(rng2);
  ElasticityTensor<Exact> round = ElasticityTensor<Exact>::from_kelvin(ex.kelvin());
  bool same = true;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) same = same && (round.voigt()(p, q) == ex.voigt()(p, q));
  CHECK(same);

  // d and v traces of the isotropic tensor.
  ElasticityTensor<Exact> iso = make_isotropic(Exact(2), Exact(3));
  CHECK(iso.dilatation().trace() == Exact(9 * 2 + 6 * 3));
  CHECK(iso.voigt_trace().trace() == Exact(3 * 2 + 12 * 3));
}
