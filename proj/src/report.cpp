#include "kenso/report.hpp"

#include <cstdint>
#include <sstream>

namespace kenso {

std::string input_digest(std::string_view source) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : source) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string Report::to_json() const { return doc.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& os, const Json& value, int indent);

void render_object(std::ostringstream& os, const Json& object, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : object.items()) {
    if (key == "checks" && value.is_array()) {
      os << pad << "checks:\n";
      for (const Json& check : value) {
        os << pad << "  [" << (check.value("status", "") == "pass" ? "pass" : "FAIL") << "] "
           << check.value("name", "");
        if (check.contains("witness")) {
          const Json& w = check["witness"];
          os << "  at (";
          bool first = true;
          for (const Json& a : w.value("args", Json::array())) {
            if (!first) os << ",";
            os << a.get<std::string>();
            first = false;
          }
          os << ")";
          if (w.contains("component")) os << " component " << w["component"].get<std::string>();
          os << ": " << w.value("residual", "");
        }
        os << "\n";
      }
      continue;
    }
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_object(os, value, indent + 1);
    } else if (value.is_array()) {
      os << pad << key << ":";
      render_value(os, value, indent);
      os << "\n";
    } else {
      os << pad << key << ": ";
      render_value(os, value, indent);
      os << "\n";
    }
  }
}

void render_value(std::ostringstream& os, const Json& value, int indent) {
  if (value.is_string()) {
    os << value.get<std::string>();
  } else if (value.is_boolean()) {
    os << (value.get<bool>() ? "true" : "false");
  } else if (value.is_number_integer()) {
    os << value.get<long long>();
  } else if (value.is_array()) {
    for (const Json& item : value) {
      os << " ";
      if (item.is_object()) {
        os << "\n";
        render_object(os, item, indent + 1);
      } else {
        render_value(os, item, indent);
      }
    }
  } else {
    os << value.dump();
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  render_object(os, doc, 0);
  return os.str();
}

}  // namespace kenso
