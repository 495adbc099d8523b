#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "overhang/rational.hpp"

namespace overhang {

// Index used for the table in contact records.
inline constexpr int kTable = -1;

struct InvalidGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unit-length block. `x` is the x-coordinate of the lower-left corner,
// `level` the integer row (y = level * h for a nominal render height h;
// no computation depends on h). `x_exact` carries the coordinate exactly
// when it is rational, enabling certified balance checks.
struct Block {
  double x = 0.0;
  int level = 0;
  std::optional<Rational> x_exact;

  Block() = default;
  Block(double x_, int level_) : x(x_), level(level_) {}
  Block(Rational xr, int level_)
      : x(to_double(xr)), level(level_), x_exact(std::move(xr)) {}
};

// External downward force attached to the upper edge of a block.
struct PointWeight {
  int block = 0;
  double position = 0.0;
  double magnitude = 0.0;
  std::optional<Rational> position_exact;
  std::optional<Rational> magnitude_exact;

  PointWeight() = default;
  PointWeight(int b, double p, double m) : block(b), position(p), magnitude(m) {}
  PointWeight(int b, Rational p, Rational m)
      : block(b),
        position(to_double(p)),
        magnitude(to_double(m)),
        position_exact(std::move(p)),
        magnitude_exact(std::move(m)) {}
};

struct Stack {
  std::vector<Block> blocks;
  std::vector<PointWeight> weights;
  std::string name;

  int size() const { return static_cast<int>(blocks.size()); }
  // Block count plus the sum of point-weight magnitudes.
  double total_weight() const;
  // True when every coordinate and weight has an exact rational value.
  bool has_exact() const;
  // Shift all x-coordinates by dx (exact values shifted exactly).
  void translate(const Rational& dx);
  void translate(double dx);
};

// Contact between `upper` and the block (or table) it rests on, with the
// interval endpoints a < b.
struct Contact {
  int upper = 0;
  int lower = kTable;
  double a = 0.0;
  double b = 0.0;
  std::optional<Rational> a_exact;
  std::optional<Rational> b_exact;
};

struct SupportPartition {
  int principal = 0;
  std::vector<int> support;    // sorted block indices
  std::vector<int> balancing;  // sorted block indices
  std::vector<char> in_support;
};

// Throws InvalidGeometry on same-level overlap or a floating block
// (not on level 0 and resting on nothing).
void validate_geometry(const Stack& stack);

// All rest-on contacts, including table contacts. Throws on invalid
// geometry. Exact endpoints are filled when both coordinates are exact.
std::vector<Contact> contacts(const Stack& stack);

// 1 + max_i x_i. Throws std::invalid_argument on an empty stack.
double overhang(const Stack& stack);
Rational overhang_exact(const Stack& stack);

SupportPartition support_partition(const Stack& stack);

// True when the support set has exactly one block per level up to the
// principal block's level.
bool is_spinal(const Stack& stack);

// Classic harmonic stack: block i from the top extends 1/(2i) beyond the
// one below; overhang H_n / 2 from the table edge.
Stack make_harmonic(int n);

// Rows of 1..m blocks bottom-up, each row centered on x = 0.
Stack make_inverted_triangle(int m);

// Rows of 1,...,m-1,m,m-1,...,1 blocks, centered on x = 0. m^2 blocks.
Stack make_diamond(int m);

}  // namespace overhang
