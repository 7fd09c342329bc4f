#include <doctest.h>

#include <json.hpp>

#include "elastica/json_io.hpp"
#include "elastica/normal_forms.hpp"
#include "helpers.hpp"

using namespace elastica;
using nlohmann::json;

TEST_CASE("exact scalar parsing and printing") {
  CHECK(Exact::parse("3/4") == Exact::rational(3, 4));
  CHECK(Exact::parse("-2") == Exact(-2));
  CHECK(Exact::parse("1.25") == Exact::rational(5, 4));
  CHECK(Exact::parse("sqrt2") == Exact::sqrt2());
  CHECK(Exact::parse("-sqrt2") == -Exact::sqrt2());
  CHECK(Exact::parse("3/2*sqrt2") == Exact::rational(3, 2) * Exact::sqrt2());
  CHECK(Exact::parse("1+1/3*sqrt2") == Exact(1) + Exact::rational(1, 3) * Exact::sqrt2());
  CHECK(Exact::parse("1-1/3*sqrt2") == Exact(1) - Exact::rational(1, 3) * Exact::sqrt2());
  CHECK_THROWS(Exact::parse("1/0"));
  CHECK_THROWS(Exact::parse(""));

  for (const char* s : {"3/4", "-2", "sqrt2", "-1/2*sqrt2", "2+3/5*sqrt2"}) {
    Exact x = Exact::parse(s);
    CHECK(Exact::parse(x.str()) == x);
  }
  CHECK(exact_from_double(0.5) == Exact::rational(1, 2));
  CHECK(exact_from_double(-3.0) == Exact(-3));
}

TEST_CASE("document round trips in all formats") {
  std::mt19937_64 rng(51);
  ElasticityTensor<double> e = testing::random_elasticity<double>(rng);

  for (DocFormat f : {DocFormat::Kelvin6, DocFormat::Voigt6, DocFormat::HarmonicParts}) {
    TensorDocument<double> doc = document_from_elasticity(e, f);
    doc.name = "case";
    TensorDocument<double> back = parse_document_text<double>(document_to_json(doc).dump());
    CHECK(back.format == f);
    CHECK(back.name == "case");
    CHECK(to_double((back.as_elasticity() - e).norm2()) < 1e-20 * to_double(e.norm2()));
  }

  Mat3<double> a = testing::random_sym2<double>(rng);
  TensorDocument<double> s2 = document_from_sym2(a);
  TensorDocument<double> s2b = parse_document_text<double>(document_to_json(s2).dump());
  CHECK((a - *s2b.sym2).frobenius2() == 0.0);
}

TEST_CASE("exact documents: bit-exact round trips including sqrt2 entries") {
  std::mt19937_64 rng(52);
  ElasticityTensor<Exact> e = testing::random_elasticity<Exact>(rng);

  for (DocFormat f : {DocFormat::Kelvin6, DocFormat::Voigt6, DocFormat::HarmonicParts}) {
    TensorDocument<Exact> doc = document_from_elasticity(e, f);
    std::string text = document_to_json(doc).dump();
    TensorDocument<Exact> back = parse_document_text<Exact>(text);
    CHECK(ScalarTraits<Exact>::is_zero((back.as_elasticity() - e).norm2()));
    // Serialized form is stable.
    CHECK(document_to_json(back).dump() == text);
  }

  // The trigonal Kelvin matrix round-trips with its sqrt2 entries.
  ElasticityTensor<Exact> tri = ElasticityTensor<Exact>::embed(h4_trigonal(Exact(1), Exact(1)));
  TensorDocument<Exact> doc = document_from_elasticity(tri, DocFormat::Kelvin6);
  json j = document_to_json(doc);
  CHECK(j["data"][0][3].get<std::string>() == "-sqrt2");
  TensorDocument<Exact> back = parse_document_text<Exact>(j.dump());
  CHECK(ScalarTraits<Exact>::is_zero((back.as_elasticity() - tri).norm2()));
}

TEST_CASE("21-entry upper triangle payload") {
  std::mt19937_64 rng(53);
  ElasticityTensor<double> e = testing::random_elasticity<double>(rng);
  Mat6<double> v = e.voigt();
  json tri = json::array();
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) tri.push_back(v(p, q));
  json doc = {{"format", "voigt6"}, {"data", tri}};
  TensorDocument<double> parsed = parse_document<double>(doc);
  CHECK(to_double((parsed.as_elasticity() - e).norm2()) < 1e-22 * to_double(e.norm2()));
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS((void)parse_document_text<double>("{\"data\": []}"), DocumentError);
  CHECK_THROWS_AS((void)parse_document_text<double>("{\"format\": \"nope\", \"data\": []}"),
                  DocumentError);
  CHECK_THROWS_AS((void)parse_document_text<double>("{\"format\": \"sym2\", \"data\": [1, 2]}"),
                  DocumentError);
  CHECK_THROWS_AS((void)parse_document_text<double>("not json at all"), DocumentError);
  // 6x6 with a short row.
  json j = {{"format", "kelvin6"}, {"data", json::array()}};
  for (int i = 0; i < 6; ++i) j["data"].push_back(json::array({1.0, 2.0}));
  CHECK_THROWS_AS((void)parse_document<double>(j), DocumentError);
  // harmonic_parts payload with a missing field.
  json hp = {{"format", "harmonic_parts"},
             {"data", {{"tr_d", 1.0}, {"tr_v", 2.0}, {"d_dev", {0, 0, 0, 0, 0}}}}};
  CHECK_THROWS_AS((void)parse_document<double>(hp), DocumentError);
}

TEST_CASE("harmonic_parts documents reproduce the decomposition") {
  std::mt19937_64 rng(54);
  ElasticityTensor<Exact> e = testing::random_elasticity<Exact>(rng);
  TensorDocument<Exact> doc = document_from_elasticity(e, DocFormat::HarmonicParts);
  HarmonicParts<Exact> p = decompose(e);
  CHECK(doc.parts->tr_d == p.tr_d);
  CHECK(ScalarTraits<Exact>::is_zero(norm2(doc.parts->h.tensor() - p.h.tensor())));
  CHECK(ScalarTraits<Exact>::is_zero((doc.as_elasticity() - e).norm2()));
}
