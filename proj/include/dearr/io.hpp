#pragma once

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "dearr/error.hpp"
#include "dearr/exactgeom.hpp"
#include "dearr/faces.hpp"
#include "dearr/polynomial.hpp"
#include "dearr/poset.hpp"
#include "dearr/rational.hpp"
#include "dearr/wiring.hpp"

namespace dearr {

using Json = nlohmann::json;

/// One input file: the "kind" field selects the payload type.
using InputDocument = std::variant<Arrangement, WiringDiagram, SemilatticeCandidate>;

namespace detail {

inline const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(Errc::parse_error, std::string("missing field '") + key + "'");
  return obj.at(key);
}

inline long long integer_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_number_integer()) throw Error(Errc::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

inline const Json& array_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_array()) throw Error(Errc::parse_error, std::string("field '") + key + "' must be an array");
  return v;
}

inline Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw Error(Errc::parse_error, "rational must be a string such as \"3/2\"");
}

inline Arrangement parse_hyperplanes(const Json& doc) {
  const auto n = integer_member(doc, "ambient_dim");
  if (n < 1) throw Error(Errc::invalid_input, "ambient_dim must be at least 1");
  std::vector<Hyperplane> hyperplanes;
  for (const Json& h : array_member(doc, "hyperplanes")) {
    std::vector<Rational> normal;
    for (const Json& v : array_member(h, "normal")) normal.push_back(rational_value(v));
    if (normal.size() != static_cast<std::size_t>(n))
      throw Error(Errc::dimension_mismatch, "normal has " + std::to_string(normal.size()) + " entries, expected " +
                                                std::to_string(n));
    hyperplanes.emplace_back(std::move(normal), rational_value(member(h, "offset")));
  }
  return Arrangement(static_cast<int>(n), std::move(hyperplanes));
}

inline WiringDiagram parse_wiring(const Json& doc) {
  WiringDiagram w;
  w.wires = static_cast<int>(integer_member(doc, "wires"));
  for (const Json& e : array_member(doc, "events"))
    w.events.push_back(CrossingEvent{static_cast<int>(integer_member(e, "top")),
                                     static_cast<int>(integer_member(e, "size"))});
  return w;
}

inline SemilatticeCandidate parse_semilattice(const Json& doc) {
  SemilatticeCandidate c;
  c.ambient_dim = static_cast<int>(integer_member(doc, "ambient_dim"));
  if (c.ambient_dim < 1) throw Error(Errc::invalid_input, "ambient_dim must be at least 1");
  for (const Json& f : array_member(doc, "flats"))
    c.flats.push_back(Flat{integer_member(f, "id"), static_cast<int>(integer_member(f, "dim")), {}});
  for (const Json& pair : array_member(doc, "leq")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw Error(Errc::parse_error, "leq entries must be [id, id] pairs");
    c.leq.emplace_back(pair[0].get<FlatId>(), pair[1].get<FlatId>());
  }
  return c;
}

}  // namespace detail

inline InputDocument parse_document(const Json& doc) {
  const Json& kind = detail::member(doc, "kind");
  if (!kind.is_string()) throw Error(Errc::parse_error, "field 'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "hyperplanes") return detail::parse_hyperplanes(doc);
  if (k == "wiring") return detail::parse_wiring(doc);
  if (k == "semilattice") return detail::parse_semilattice(doc);
  throw Error(Errc::parse_error, "unknown kind '" + k + "'");
}

inline InputDocument parse_document_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return parse_document(doc);
}

inline InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_document_text(text);
}

inline Json document_json(const Arrangement& arr) {
  Json hs = Json::array();
  for (const auto& h : arr.hyperplanes()) {
    Json normal = Json::array();
    for (const auto& v : h.normal()) normal.push_back(to_string(v));
    hs.push_back(Json{{"normal", std::move(normal)}, {"offset", to_string(h.offset())}});
  }
  return Json{{"kind", "hyperplanes"}, {"ambient_dim", arr.ambient_dim()}, {"hyperplanes", std::move(hs)}};
}

inline Json document_json(const WiringDiagram& w) {
  Json events = Json::array();
  for (const auto& e : w.events) events.push_back(Json{{"top", e.top}, {"size", e.size}});
  return Json{{"kind", "wiring"}, {"wires", w.wires}, {"events", std::move(events)}};
}

inline Json document_json(const Semilattice& lat) {
  Json flats = Json::array();
  Json leq = Json::array();
  for (const auto& f : lat.flats()) flats.push_back(Json{{"id", f.id}, {"dim", f.dim}});
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y)
      if (x != y && lat.leq(x, y)) leq.push_back(Json::array({lat.flat(x).id, lat.flat(y).id}));
  return Json{{"kind", "semilattice"}, {"ambient_dim", lat.ambient_dim()}, {"flats", std::move(flats)},
              {"leq", std::move(leq)}};
}

/// {"terms":[{"x":..,"y":..,"coeff":".."}], "string": ".."}, terms in display order.
inline Json polynomial_json(const BiPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"x", m.x}, {"y", m.y}, {"coeff", c.get_str()}});
  return Json{{"terms", std::move(terms)}, {"string", to_string(p)}};
}

inline BiPolynomial parse_polynomial(const Json& doc) {
  BiPolynomial p;
  for (const Json& t : detail::array_member(doc, "terms")) {
    const Json& c = detail::member(t, "coeff");
    if (!c.is_string()) throw Error(Errc::parse_error, "coefficients are integer strings");
    p.add(Monomial{static_cast<int>(detail::integer_member(t, "x")), static_cast<int>(detail::integer_member(t, "y"))},
          parse_integer(c.get<std::string>()));
  }
  return p;
}

inline Json f_vector_json(const FVector& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()));
  return out;
}

inline Json faces_json(const FVector& f, const std::vector<FaceRecord>& faces) {
  Json list = Json::array();
  for (const auto& face : faces)
    list.push_back(Json{{"signs", to_string(face.signs)}, {"dim", face.dim}, {"flat", face.flat}});
  return Json{{"f_vector", f_vector_json(f)}, {"faces", std::move(list)}};
}

}  // namespace dearr
