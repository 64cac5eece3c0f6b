#pragma once

// JSON forms of the verdict and result types (nlohmann/json ADL hooks).
// Documents handed to users carry a top-level "schema" version.

#include "json.hpp"

#include "kfk/brown.hpp"
#include "kfk/fibration.hpp"
#include "kfk/orbilens.hpp"
#include "kfk/slope.hpp"
#include "kfk/surgery.hpp"

namespace kfk {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

inline void to_json(json& j, const WeightHom& h) { j = json{{"wx", h.wx}, {"wy", h.wy}}; }
inline void from_json(const json& j, WeightHom& h) {
  j.at("wx").get_to(h.wx);
  j.at("wy").get_to(h.wy);
}

inline void to_json(json& j, const BrownVerdict& v) {
  j = json{{"kernel_fg", v.kernel_fg},         {"prefix_values", v.prefix_values},
           {"max_value", v.max_value},         {"max_positions", v.max_positions},
           {"min_value", v.min_value},         {"min_positions", v.min_positions}};
}
inline void from_json(const json& j, BrownVerdict& v) {
  j.at("kernel_fg").get_to(v.kernel_fg);
  j.at("prefix_values").get_to(v.prefix_values);
  j.at("max_value").get_to(v.max_value);
  j.at("max_positions").get_to(v.max_positions);
  j.at("min_value").get_to(v.min_value);
  j.at("min_positions").get_to(v.min_positions);
}

inline void to_json(json& j, const FibrationVerdict& v) {
  j = json{{"fibred", v.fibred},
           {"boundary_components", v.boundary_components},
           {"weight", v.weight},
           {"brown", v.brown}};
}
inline void from_json(const json& j, FibrationVerdict& v) {
  j.at("fibred").get_to(v.fibred);
  j.at("boundary_components").get_to(v.boundary_components);
  j.at("weight").get_to(v.weight);
  j.at("brown").get_to(v.brown);
}

inline void to_json(json& j, const QuotientData& q) {
  j = json{{"n", q.n}, {"abar1", q.abar1}, {"abar2", q.abar2}, {"base_order", q.base_order}};
}
inline void from_json(const json& j, QuotientData& q) {
  j.at("n").get_to(q.n);
  j.at("abar1").get_to(q.abar1);
  j.at("abar2").get_to(q.abar2);
  j.at("base_order").get_to(q.base_order);
}

inline void to_json(json& j, const SurgeryResult& r) {
  j = json{{"p_prime", r.p_prime},
           {"meridian_image", {r.meridian_image.first, r.meridian_image.second}}};
}
inline void from_json(const json& j, SurgeryResult& r) {
  j.at("p_prime").get_to(r.p_prime);
  r.meridian_image = {j.at("meridian_image").at(0).get<std::int64_t>(),
                      j.at("meridian_image").at(1).get<std::int64_t>()};
}

inline void to_json(json& j, const H2Class& c) { j = json{{"c1", c.c1}, {"c2", c.c2}}; }
inline void from_json(const json& j, H2Class& c) {
  j.at("c1").get_to(c.c1);
  j.at("c2").get_to(c.c2);
}

/// Wraps a payload object with the schema version.
inline json document(json payload) {
  payload["schema"] = kSchemaVersion;
  return payload;
}

}  // namespace kfk
