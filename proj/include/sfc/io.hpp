#pragma once

// JSON forms of signatures, cone structures and atlas records.
// Needs nlohmann/json on the include path (vendored as json.hpp).

#include <string>

#include "json.hpp"
#include "sfc/surgery.hpp"

namespace sfc::io {

using Json = nlohmann::ordered_json;

/// {"b": int, "fibers": [[a1,b1],[a2,b2],[a3,b3]]}
inline Json to_json(const SeifertSignature& sig) {
  Json fibers = Json::array();
  for (const auto& f : sig.fibers) fibers.push_back(Json::array({f.a, f.b}));
  return Json{{"b", sig.b}, {"fibers", fibers}};
}

/// Accepts up to three fibres; missing ones are padded with [1,0].
inline SeifertSignature signature_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("fibers"))
    throw std::invalid_argument("signature JSON needs \"b\" and \"fibers\"");
  if (!j.at("b").is_number_integer()) throw std::invalid_argument("signature \"b\" must be an integer");
  const Json& fibers = j.at("fibers");
  if (!fibers.is_array() || fibers.size() > 3) throw std::invalid_argument("\"fibers\" must be an array of at most 3 pairs");
  SeifertSignature sig;
  sig.b = j.at("b").get<Integer>();
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const Json& pair = fibers[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw std::invalid_argument("each fibre must be an [a,b] integer pair");
    sig.fibers[i] = Fiber{pair[0].get<Integer>(), pair[1].get<Integer>()};
  }
  validate(sig);
  return sig;
}

inline SeifertSignature parse_signature(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed signature JSON: ") + e.what());
  }
  return signature_from_json(j);
}

/// Signature object plus "angles": ["2pi","2pi","1/3pi"].
inline Json to_json(const ConeStructure& cs) {
  Json j = to_json(cs.signature());
  Json angles = Json::array();
  for (const auto& a : cs.angles()) angles.push_back(a.to_string());
  j["angles"] = angles;
  return j;
}

inline ConeStructure cone_from_json(const Json& j) {
  const SeifertSignature sig = signature_from_json(j);
  if (!j.contains("angles") || !j.at("angles").is_array() || j.at("angles").size() != 3)
    throw std::invalid_argument("cone structure needs three \"angles\"");
  std::array<PiRational, 3> beta;
  for (std::size_t i = 0; i < 3; ++i) beta[i] = PiRational::parse(j.at("angles")[i].get<std::string>());
  return ConeStructure::make(sig, beta);
}

inline Json to_json(const TorusKnot& k) {
  return Json{{"r", k.r}, {"s", k.s}, {"hand", std::string(to_string(k.hand))}};
}

inline Json to_json(const AtlasRecord& rec) {
  return Json{{"knot", to_json(rec.knot)}, {"m", rec.point.m},   {"n", rec.point.n},
              {"p", rec.p},                {"q", rec.q},         {"x", rec.x},
              {"beta", rec.beta.to_string()}, {"geometry", std::string(rec.geometry.name())}};
}

}  // namespace sfc::io
