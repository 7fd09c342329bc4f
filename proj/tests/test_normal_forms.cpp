#include <doctest.h>

#include "elastica/classification.hpp"
#include "elastica/covariants.hpp"
#include "elastica/normal_forms.hpp"
#include "helpers.hpp"

using namespace elastica;

TEST_CASE("build: tetragonal form with sigma = 0 is the transversely isotropic form") {
  NormalFormParams<Exact> p{NormalFormClass::H4Tetragonal, {Exact(2), Exact(0), Exact(0)}};
  Harm4<Exact> a = std::get<Harm4<Exact>>(build(p));
  Harm4<Exact> b = h4_transversely_isotropic(Exact(2));
  CHECK(ScalarTraits<Exact>::is_zero(norm2(a.tensor() - b.tensor())));
}

TEST_CASE("build: orthotropic form with equal parameters is the cubic form") {
  Harm4<Exact> a = h4_orthotropic(Exact(4), Exact(4), Exact(4));
  Harm4<Exact> b = h4_cubic(Exact(1));
  CHECK(ScalarTraits<Exact>::is_zero(norm2(a.tensor() - b.tensor())));
}

TEST_CASE("genericity: bifurcation points are flagged with the right label") {
  using L = StratumLabel;
  NormalFormParams<Exact> tet_cubic{NormalFormClass::H4Tetragonal,
                                    {Exact(1), Exact(5), Exact(0)}};
  CHECK(!genericity(tet_cubic).generic);
  CHECK(genericity(tet_cubic).label == L::Cubic);

  NormalFormParams<Exact> ti_zero{NormalFormClass::H4TI, {Exact(0), Exact(0), Exact(0)}};
  CHECK(genericity(ti_zero).label == L::Isotropic);

  NormalFormParams<Exact> tri{NormalFormClass::H4Trigonal, {Exact(1), Exact(1), Exact(0)}};
  CHECK(genericity(tri).generic);
  CHECK(genericity(tri).label == L::Trigonal);

  NormalFormParams<Exact> orth2{NormalFormClass::H4Orthotropic,
                                {Exact(2), Exact(2), Exact(1)}};
  Genericity g = genericity(orth2);
  CHECK(!g.generic);
  Tolerance<Exact> tol;
  CHECK(classify_h4(std::get<Harm4<Exact>>(build(orth2)), tol) == g.label);
}

TEST_CASE("sample_orbit: fixed points, invariance, stratum stability") {
  // The metric is a fixed point of every rotation.
  for (std::uint64_t s : {1ull, 7ull, 99ull}) {
    Mat3<double> q = sample_orbit(Mat3<double>::identity(), s);
    CHECK((q - Mat3<double>::identity()).frobenius2() < 1e-28);
  }

  Harm4<double> h = h4_trigonal(1.0, 1.0);
  auto base = invariants_h4(h).values();
  Tolerance<double> tol;
  for (std::uint64_t s : {3ull, 4ull, 5ull}) {
    Harm4<double> hr = sample_orbit(h, s);
    auto rot = invariants_h4(hr).values();
    for (int k = 0; k < 9; ++k)
      CHECK(testing::close_rel(base[static_cast<std::size_t>(k)], rot[static_cast<std::size_t>(k)], 1e-9));
    CHECK(classify_h4(hr, tol) == StratumLabel::Trigonal);
  }

  // Same seed, same sample.
  Harm4<double> a = sample_orbit(h, 11);
  Harm4<double> b = sample_orbit(h, 11);
  CHECK(to_double(norm2(a.tensor() - b.tensor())) == 0.0);
}

TEST_CASE("normal form metadata: parameter counts and names") {
  CHECK(normal_form_param_count(NormalFormClass::H4Cubic) == 1);
  CHECK(normal_form_param_count(NormalFormClass::Sym2TI) == 2);
  CHECK(normal_form_param_count(NormalFormClass::H4Orthotropic) == 3);
  CHECK(std::string(to_string(NormalFormClass::H4Tetragonal)) == "h4-tetragonal");
}
