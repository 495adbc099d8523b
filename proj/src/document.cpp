#include "overhang/document.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace overhang {
namespace {

using nlohmann::json;

// "p/q", "-1.25" or "3": exact rational from a string token.
Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw DocumentError("empty numeric string");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) return Rational(s);
    bool neg = s[0] == '-';
    size_t i = neg || s[0] == '+' ? 1 : 0;
    BigInt num = 0;
    BigInt den = 1;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        if (seen_dot) throw DocumentError("malformed decimal: " + s);
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        num = num * 10 + (s[i] - '0');
        if (seen_dot) den *= 10;
        seen_digit = true;
      } else {
        throw DocumentError("malformed number: " + s);
      }
    }
    if (!seen_digit) throw DocumentError("malformed number: " + s);
    Rational r(num, den);
    return neg ? -r : r;
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception&) {
    throw DocumentError("malformed rational: " + s);
  }
}

// A coordinate/magnitude: JSON number (short decimals kept exact) or
// exact string.
std::pair<double, std::optional<Rational>> parse_number(const json& j,
                                                        const char* what) {
  if (j.is_number()) {
    double x = j.get<double>();
    return {x, rational_from_decimal(x)};
  }
  if (j.is_string()) {
    Rational r = rational_from_string(j.get<std::string>());
    return {to_double(r), r};
  }
  throw DocumentError(std::string(what) + " must be a number or a rational string");
}

// The token written for a value: exact decimals verbatim, other exact
// values as "p/q" strings, plain doubles in shortest round-trip form.
std::string number_token(double x, const std::optional<Rational>& exact) {
  if (exact) {
    if (auto dec = decimal_string(*exact)) return *dec;
    std::ostringstream os;
    os << '"' << *exact << '"';
    return os.str();
  }
  return double_string(x);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(e.what());  // includes the byte position
  }
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(std::string("missing field: ") + key);
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw DocumentError(std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

Stack parse_stack_document(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  Stack s;
  if (auto it = j.find("name"); it != j.end()) s.name = it->get<std::string>();
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array()) throw DocumentError("blocks must be an array");
  for (const auto& b : blocks) {
    auto [x, xe] = parse_number(require(b, "x"), "x");
    Block blk(x, require_int(b, "level"));
    blk.x_exact = xe;
    s.blocks.push_back(blk);
  }
  if (auto it = j.find("point_weights"); it != j.end()) {
    if (!it->is_array()) throw DocumentError("point_weights must be an array");
    for (const auto& w : *it) {
      PointWeight pw;
      pw.block = require_int(w, "block");
      if (pw.block < 0 || pw.block >= s.size())
        throw DocumentError("point weight on nonexistent block");
      std::tie(pw.position, pw.position_exact) =
          parse_number(require(w, "position"), "position");
      std::tie(pw.magnitude, pw.magnitude_exact) =
          parse_number(require(w, "magnitude"), "magnitude");
      s.weights.push_back(pw);
    }
  }
  return s;
}

std::string write_stack_document(const Stack& stack,
                                 const std::vector<int>* laying_order) {
  std::ostringstream os;
  os << "{\n";
  if (!stack.name.empty()) os << "  \"name\": " << json(stack.name).dump() << ",\n";
  os << "  \"blocks\": [";
  for (size_t i = 0; i < stack.blocks.size(); ++i) {
    const Block& b = stack.blocks[i];
    os << (i ? ",\n    " : "\n    ") << "{\"x\": " << number_token(b.x, b.x_exact)
       << ", \"level\": " << b.level << "}";
  }
  os << (stack.blocks.empty() ? "]" : "\n  ]") << ",\n  \"point_weights\": [";
  for (size_t i = 0; i < stack.weights.size(); ++i) {
    const PointWeight& w = stack.weights[i];
    os << (i ? ",\n    " : "\n    ") << "{\"block\": " << w.block
       << ", \"position\": " << number_token(w.position, w.position_exact)
       << ", \"magnitude\": " << number_token(w.magnitude, w.magnitude_exact) << "}";
  }
  os << (stack.weights.empty() ? "]" : "\n  ]");
  if (laying_order) {
    os << ",\n  \"laying_order\": [";
    for (size_t i = 0; i < laying_order->size(); ++i)
      os << (i ? ", " : "") << (*laying_order)[i];
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

std::optional<std::vector<int>> parse_laying_order(const std::string& text) {
  json j = parse_json(text);
  auto it = j.find("laying_order");
  if (it == j.end()) return std::nullopt;
  if (!it->is_array()) throw DocumentError("laying_order must be an array");
  return it->get<std::vector<int>>();
}

BrickWallProfile parse_profile_document(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw DocumentError("profile must be a JSON object");
  BrickWallProfile p;
  const json& sym = require(j, "symmetric");
  if (!sym.is_boolean()) throw DocumentError("symmetric must be a boolean");
  p.symmetric = sym.get<bool>();
  const json& levels = require(j, "levels");
  if (!levels.is_array()) throw DocumentError("levels must be an array");
  for (const auto& lv : levels) {
    auto [x, xe] = parse_number(require(lv, "left"), "left");
    (void)x;
    if (!xe) throw DocumentError("profile left edges must be exact");
    p.levels.emplace_back(*xe, require_int(lv, "width"));
  }
  try {
    validate_profile(p);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("invalid profile: ") + e.what());
  }
  return p;
}

std::string write_profile_document(const BrickWallProfile& p) {
  std::ostringstream os;
  os << "{\n  \"symmetric\": " << (p.symmetric ? "true" : "false")
     << ",\n  \"levels\": [";
  for (size_t i = 0; i < p.levels.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << "{\"left\": "
       << number_token(to_double(p.levels[i].left), p.levels[i].left)
       << ", \"width\": " << p.levels[i].width << "}";
  os << (p.levels.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string outline_csv(const std::vector<std::pair<double, double>>& poly) {
  std::ostringstream os;
  os << "x,y\n";
  char buf[64];
  for (const auto& [x, y] : poly) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g\n", x, y);
    os << buf;
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path);
  out << content;
}

}  // namespace overhang
