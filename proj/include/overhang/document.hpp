#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "overhang/brickwall.hpp"
#include "overhang/model.hpp"

namespace overhang {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stack document: JSON object with `blocks: [{x, level}]`,
// `point_weights: [{block, position, magnitude}]`, optional `name` and
// `laying_order`. Coordinates are JSON numbers (short decimals are
// carried exactly) or strings "p/q" / "-1.25" for exact input. Writing
// then parsing reproduces every value bit-exactly.
Stack parse_stack_document(const std::string& text);
std::string write_stack_document(const Stack& stack,
                                 const std::vector<int>* laying_order = nullptr);

// The optional `laying_order` field, when present.
std::optional<std::vector<int>> parse_laying_order(const std::string& text);

// Profile document: JSON object with `symmetric` and
// `levels: [{left, width}]`, left on the half-integer grid.
BrickWallProfile parse_profile_document(const std::string& text);
std::string write_profile_document(const BrickWallProfile& p);

// "x,y" header plus one row per point, 10 significant digits.
std::string outline_csv(const std::vector<std::pair<double, double>>& poly);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace overhang
