#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

namespace kenso {

using Json = nlohmann::json;

inline constexpr const char kToolName[] = "kenso";
inline constexpr const char kToolVersion[] = "0.1.0";

// Structured analysis output. The JSON document uses sorted keys throughout,
// so serialization is byte-deterministic for identical inputs.
struct Report {
  Json doc = Json::object();
  bool passed = true;

  std::string to_json() const;
  std::string to_text() const;
};

// FNV-1a digest of the input source, hex-encoded.
std::string input_digest(std::string_view source);

}  // namespace kenso
