#ifndef ELASTICA_JSON_IO_HPP
#define ELASTICA_JSON_IO_HPP

// Tensor documents: the JSON interchange format of the CLI.
//
// {
//   "format": "kelvin6" | "voigt6" | "harmonic_parts" | "sym2",
//   "name":  optional string,
//   "units": optional string,
//   "data":  payload (see README)
// }
//
// Scalars are JSON numbers in floating mode. In exact mode they are strings
// like "3/4", "-2", "1.5", "5/2*sqrt2" (Kelvin entries may carry the sqrt2
// factor exactly).

#include <json.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "elasticity.hpp"
#include "harmonic.hpp"
#include "linalg.hpp"

namespace elastica {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DocFormat { Kelvin6, Voigt6, HarmonicParts, Sym2 };

inline const char* to_string(DocFormat f) {
  switch (f) {
    case DocFormat::Kelvin6: return "kelvin6";
    case DocFormat::Voigt6: return "voigt6";
    case DocFormat::HarmonicParts: return "harmonic_parts";
    case DocFormat::Sym2: return "sym2";
  }
  return "?";
}

inline DocFormat doc_format_from_string(const std::string& s) {
  if (s == "kelvin6") return DocFormat::Kelvin6;
  if (s == "voigt6") return DocFormat::Voigt6;
  if (s == "harmonic_parts") return DocFormat::HarmonicParts;
  if (s == "sym2") return DocFormat::Sym2;
  throw DocumentError("unknown document format: " + s);
}

inline Exact exact_from_double(double x) {
  if (x == 0.0) return Exact(0);
  if (!std::isfinite(x)) throw DocumentError("non-finite scalar");
  int e = 0;
  double m = std::frexp(x, &e);
  auto mi = static_cast<long long>(std::ldexp(m, 53));
  int e2 = e - 53;
  BigRat r(mi);
  boost::multiprecision::cpp_int two(2);
  if (e2 >= 0) {
    boost::multiprecision::cpp_int p(1);
    for (int k = 0; k < e2; ++k) p *= two;
    r *= BigRat(p);
  } else {
    boost::multiprecision::cpp_int p(1);
    for (int k = 0; k < -e2; ++k) p *= two;
    r /= BigRat(p);
  }
  return Exact(r);
}

template <class T>
T parse_scalar(const nlohmann::json& j) {
  if (j.is_string()) {
    Exact e = Exact::parse(j.get<std::string>());
    return ScalarTraits<T>::from_exact(e);
  }
  if (j.is_number()) {
    if constexpr (ScalarTraits<T>::is_exact)
      return exact_from_double(j.get<double>());
    else
      return j.get<double>();
  }
  throw DocumentError("expected a numeric scalar");
}

template <class T>
nlohmann::json scalar_json(const T& x) {
  if constexpr (ScalarTraits<T>::is_exact)
    return x.str();
  else
    return x;
}

// ---------------------------------------------------------------------------

template <class T>
struct TensorDocument {
  DocFormat format = DocFormat::Kelvin6;
  std::string name;
  std::string units;

  std::optional<Mat6<T>> mat6;              // kelvin6 / voigt6 payload
  std::optional<Mat3<T>> sym2;              // sym2 payload
  std::optional<HarmonicParts<T>> parts;    // harmonic_parts payload

  bool is_fourth_order() const { return format != DocFormat::Sym2; }

  ElasticityTensor<T> as_elasticity() const {
    switch (format) {
      case DocFormat::Kelvin6: return ElasticityTensor<T>::from_kelvin(*mat6);
      case DocFormat::Voigt6: return ElasticityTensor<T>::from_voigt(*mat6);
      case DocFormat::HarmonicParts: return reconstruct(*parts);
      case DocFormat::Sym2:
        throw DocumentError("sym2 document is not an elasticity tensor");
    }
    throw DocumentError("corrupt document");
  }
};

namespace detail {

template <class T>
Mat6<T> mat6_from_json(const nlohmann::json& data) {
  Mat6<T> m;
  if (data.is_array() && data.size() == 6 && data[0].is_array()) {
    for (int i = 0; i < 6; ++i) {
      if (!data[static_cast<std::size_t>(i)].is_array() ||
          data[static_cast<std::size_t>(i)].size() != 6)
        throw DocumentError("6x6 payload: each row needs 6 entries");
      for (int j = 0; j < 6; ++j)
        m(i, j) = parse_scalar<T>(data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
  }
  if (data.is_array() && data.size() == 21) {
    int k = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j) {
        T v = parse_scalar<T>(data[static_cast<std::size_t>(k++)]);
        m(i, j) = v;
        m(j, i) = v;
      }
    return m;
  }
  throw DocumentError("expected a 6x6 matrix or a 21-entry upper triangle");
}

template <class T>
nlohmann::json mat6_to_json(const Mat6<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 6; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 6; ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

template <class T>
TensorDocument<T> parse_document(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("format") || !j.contains("data"))
    throw DocumentError("document needs \"format\" and \"data\"");
  TensorDocument<T> doc;
  doc.format = doc_format_from_string(j["format"].get<std::string>());
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (j.contains("units")) doc.units = j["units"].get<std::string>();
  const nlohmann::json& data = j["data"];

  try {
    switch (doc.format) {
      case DocFormat::Kelvin6:
      case DocFormat::Voigt6:
        doc.mat6 = detail::mat6_from_json<T>(data);
        break;
      case DocFormat::Sym2: {
        if (!data.is_array() || data.size() != 6)
          throw DocumentError("sym2 payload: 6 entries (a11 a22 a33 a23 a13 a12)");
        Mat3<T> a;
        std::array<T, 6> v;
        for (int k = 0; k < 6; ++k) v[static_cast<std::size_t>(k)] = parse_scalar<T>(data[static_cast<std::size_t>(k)]);
        a(0, 0) = v[0];
        a(1, 1) = v[1];
        a(2, 2) = v[2];
        a(1, 2) = a(2, 1) = v[3];
        a(0, 2) = a(2, 0) = v[4];
        a(0, 1) = a(1, 0) = v[5];
        doc.sym2 = a;
        break;
      }
      case DocFormat::HarmonicParts: {
        if (!data.is_object()) throw DocumentError("harmonic_parts payload: object expected");
        for (const char* key : {"tr_d", "tr_v", "d_dev", "v_dev", "h"})
          if (!data.contains(key))
            throw DocumentError(std::string("harmonic_parts payload: missing ") + key);
        std::array<T, 21> c;
        c[0] = parse_scalar<T>(data["tr_d"]);
        c[1] = parse_scalar<T>(data["tr_v"]);
        auto read_list = [&](const char* key, int off, int n) {
          const auto& arr = data[key];
          if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw DocumentError(std::string("harmonic_parts payload: ") + key);
          for (int k = 0; k < n; ++k)
            c[static_cast<std::size_t>(off + k)] = parse_scalar<T>(arr[static_cast<std::size_t>(k)]);
        };
        read_list("d_dev", 2, 5);
        read_list("v_dev", 7, 5);
        read_list("h", 12, 9);
        doc.parts = detail::parts_from_coords(c);
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  return doc;
}

template <class T>
TensorDocument<T> parse_document_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DocumentError("invalid JSON");
  return parse_document<T>(j);
}

template <class T>
nlohmann::json document_to_json(const TensorDocument<T>& doc) {
  nlohmann::json j;
  j["format"] = to_string(doc.format);
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.units.empty()) j["units"] = doc.units;
  switch (doc.format) {
    case DocFormat::Kelvin6:
    case DocFormat::Voigt6:
      j["data"] = detail::mat6_to_json(*doc.mat6);
      break;
    case DocFormat::Sym2: {
      const Mat3<T>& a = *doc.sym2;
      j["data"] = nlohmann::json::array({scalar_json(a(0, 0)), scalar_json(a(1, 1)),
                                         scalar_json(a(2, 2)), scalar_json(a(1, 2)),
                                         scalar_json(a(0, 2)), scalar_json(a(0, 1))});
      break;
    }
    case DocFormat::HarmonicParts: {
      std::array<T, 21> c = detail::parts_coords(*doc.parts);
      nlohmann::json data;
      data["tr_d"] = scalar_json(c[0]);
      data["tr_v"] = scalar_json(c[1]);
      auto put = [&](const char* key, int off, int n) {
        nlohmann::json arr = nlohmann::json::array();
        for (int k = 0; k < n; ++k) arr.push_back(scalar_json(c[static_cast<std::size_t>(off + k)]));
        data[key] = arr;
      };
      put("d_dev", 2, 5);
      put("v_dev", 7, 5);
      put("h", 12, 9);
      j["data"] = data;
      break;
    }
  }
  return j;
}

template <class T>
TensorDocument<T> document_from_elasticity(const ElasticityTensor<T>& e,
                                           DocFormat format = DocFormat::Kelvin6) {
  TensorDocument<T> doc;
  doc.format = format;
  switch (format) {
    case DocFormat::Kelvin6: doc.mat6 = e.kelvin(); break;
    case DocFormat::Voigt6: doc.mat6 = e.voigt(); break;
    case DocFormat::HarmonicParts: doc.parts = decompose(e); break;
    case DocFormat::Sym2:
      throw DocumentError("cannot store an elasticity tensor as sym2");
  }
  return doc;
}

template <class T>
TensorDocument<T> document_from_sym2(const Mat3<T>& a) {
  TensorDocument<T> doc;
  doc.format = DocFormat::Sym2;
  doc.sym2 = a;
  return doc;
}

// Re-expresses the same tensor in another payload format (lossless up to the
// arithmetic of T; exact in exact mode).
template <class T>
TensorDocument<T> convert_document(const TensorDocument<T>& doc, DocFormat target) {
  if (doc.format == DocFormat::Sym2 || target == DocFormat::Sym2) {
    if (doc.format == target) return doc;
    throw DocumentError("sym2 documents cannot change rank");
  }
  return document_from_elasticity(doc.as_elasticity(), target);
}

}  // namespace elastica

#endif  // ELASTICA_JSON_IO_HPP
