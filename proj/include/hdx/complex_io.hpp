#pragma once

#include "hdx/complex.hpp"

#include <json.hpp>

#include <string>

namespace hdx {

inline constexpr const char* kFormatVersion = "1";

/// Structured document: header (kind, H, s, n, graph edges), per-level face
/// arrays with weights as "p/q" strings, plus the class-weight table.
/// Round-trips are bit-exact on weights.
nlohmann::json complex_to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

void save_complex(const Complex& c, const std::string& path);
Complex load_complex(const std::string& path);

}  // namespace hdx
