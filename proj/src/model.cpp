#include "overhang/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace overhang {

double Stack::total_weight() const {
  double w = static_cast<double>(blocks.size());
  for (const auto& pw : weights) w += pw.magnitude;
  return w;
}

bool Stack::has_exact() const {
  for (const auto& b : blocks)
    if (!b.x_exact) return false;
  for (const auto& w : weights)
    if (!w.position_exact || !w.magnitude_exact) return false;
  return true;
}

void Stack::translate(const Rational& dx) {
  double d = to_double(dx);
  for (auto& b : blocks) {
    b.x += d;
    if (b.x_exact) {
      *b.x_exact += dx;
      b.x = to_double(*b.x_exact);
    }
  }
  for (auto& w : weights) {
    w.position += d;
    if (w.position_exact) {
      *w.position_exact += dx;
      w.position = to_double(*w.position_exact);
    }
  }
}

void Stack::translate(double dx) {
  for (auto& b : blocks) {
    b.x += dx;
    b.x_exact.reset();
  }
  for (auto& w : weights) {
    w.position += dx;
    w.position_exact.reset();
  }
}

namespace {

// Compares x_i - x_j against d, exactly when both coordinates are exact.
int cmp_gap(const Block& bi, const Block& bj, int d) {
  if (bi.x_exact && bj.x_exact) {
    Rational g = *bi.x_exact - *bj.x_exact - d;
    return g < 0 ? -1 : (g > 0 ? 1 : 0);
  }
  double g = bi.x - bj.x - d;
  return g < 0 ? -1 : (g > 0 ? 1 : 0);
}

}  // namespace

void validate_geometry(const Stack& stack) {
  std::map<int, std::vector<int>> by_level;
  for (int i = 0; i < stack.size(); ++i) {
    const Block& b = stack.blocks[i];
    if (b.level < 0)
      throw InvalidGeometry("block " + std::to_string(i) + " has negative level");
    by_level[b.level].push_back(i);
  }
  for (auto& [level, idx] : by_level) {
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return stack.blocks[a].x < stack.blocks[b].x;
    });
    for (size_t k = 0; k + 1 < idx.size(); ++k) {
      if (cmp_gap(stack.blocks[idx[k + 1]], stack.blocks[idx[k]], 1) < 0)
        throw InvalidGeometry("blocks " + std::to_string(idx[k]) + " and " +
                              std::to_string(idx[k + 1]) + " overlap on level " +
                              std::to_string(level));
    }
  }
  for (int i = 0; i < stack.size(); ++i) {
    const Block& b = stack.blocks[i];
    if (b.level == 0) continue;
    bool supported = false;
    auto it = by_level.find(b.level - 1);
    if (it != by_level.end()) {
      for (int j : it->second) {
        if (cmp_gap(b, stack.blocks[j], 1) < 0 && cmp_gap(stack.blocks[j], b, 1) < 0) {
          supported = true;
          break;
        }
      }
    }
    if (!supported)
      throw InvalidGeometry("block " + std::to_string(i) + " rests on nothing");
  }
  for (const auto& pw : stack.weights) {
    if (pw.block < 0 || pw.block >= stack.size())
      throw InvalidGeometry("point weight references missing block");
    if (pw.magnitude <= 0.0)
      throw InvalidGeometry("point weight magnitude must be positive");
    const Block& host = stack.blocks[pw.block];
    if (pw.position < host.x - 1e-12 || pw.position > host.x + 1.0 + 1e-12)
      throw InvalidGeometry("point weight lies outside its host block");
  }
}

std::vector<Contact> contacts(const Stack& stack) {
  validate_geometry(stack);
  std::map<int, std::vector<int>> by_level;
  for (int i = 0; i < stack.size(); ++i) by_level[stack.blocks[i].level].push_back(i);

  std::vector<Contact> result;
  for (int i = 0; i < stack.size(); ++i) {
    const Block& bi = stack.blocks[i];
    if (bi.level == 0) {
      bool on_table = bi.x_exact ? (*bi.x_exact < 0) : (bi.x < 0);
      if (on_table) {
        Contact c;
        c.upper = i;
        c.lower = kTable;
        c.a = bi.x;
        c.b = std::min(bi.x + 1.0, 0.0);
        if (bi.x_exact) {
          c.a_exact = *bi.x_exact;
          c.b_exact = std::min(Rational(*bi.x_exact + 1), Rational(0));
        }
        result.push_back(c);
      }
      continue;
    }
    auto it = by_level.find(bi.level - 1);
    if (it == by_level.end()) continue;
    for (int j : it->second) {
      const Block& bj = stack.blocks[j];
      if (cmp_gap(bi, bj, 1) < 0 && cmp_gap(bj, bi, 1) < 0) {
        Contact c;
        c.upper = i;
        c.lower = j;
        c.a = std::max(bi.x, bj.x);
        c.b = std::min(bi.x, bj.x) + 1.0;
        if (bi.x_exact && bj.x_exact) {
          c.a_exact = std::max(*bi.x_exact, *bj.x_exact);
          c.b_exact = std::min(*bi.x_exact, *bj.x_exact) + 1;
        }
        result.push_back(c);
      }
    }
  }
  return result;
}

double overhang(const Stack& stack) {
  if (stack.blocks.empty()) throw std::invalid_argument("overhang of empty stack");
  double m = stack.blocks[0].x;
  for (const auto& b : stack.blocks) m = std::max(m, b.x);
  return 1.0 + m;
}

Rational overhang_exact(const Stack& stack) {
  if (stack.blocks.empty()) throw std::invalid_argument("overhang of empty stack");
  if (!stack.has_exact())
    throw std::invalid_argument("stack has no exact coordinates");
  Rational m = *stack.blocks[0].x_exact;
  for (const auto& b : stack.blocks) m = std::max(m, *b.x_exact);
  return 1 + m;
}

SupportPartition support_partition(const Stack& stack) {
  auto cs = contacts(stack);
  if (stack.blocks.empty()) throw std::invalid_argument("empty stack");

  // Principal: lowest among the blocks attaining the maximum x.
  int principal = 0;
  for (int i = 1; i < stack.size(); ++i) {
    const Block &b = stack.blocks[i], &p = stack.blocks[principal];
    if (b.x > p.x || (b.x == p.x && b.level < p.level)) principal = i;
  }

  std::vector<std::vector<int>> rests_on(stack.size());
  for (const auto& c : cs)
    if (c.lower != kTable) rests_on[c.upper].push_back(c.lower);

  SupportPartition part;
  part.principal = principal;
  part.in_support.assign(stack.size(), 0);
  std::vector<int> todo{principal};
  part.in_support[principal] = 1;
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j : rests_on[i]) {
      if (!part.in_support[j]) {
        part.in_support[j] = 1;
        todo.push_back(j);
      }
    }
  }
  for (int i = 0; i < stack.size(); ++i)
    (part.in_support[i] ? part.support : part.balancing).push_back(i);
  return part;
}

bool is_spinal(const Stack& stack) {
  auto part = support_partition(stack);
  std::map<int, int> per_level;
  for (int i : part.support) per_level[stack.blocks[i].level]++;
  int top = stack.blocks[part.principal].level;
  for (int level = 0; level <= top; ++level)
    if (per_level[level] != 1) return false;
  return true;
}

Stack make_harmonic(int n) {
  if (n < 1) throw std::invalid_argument("harmonic stack needs n >= 1");
  Stack s;
  s.name = "harmonic-" + std::to_string(n);
  // Right edge of block i (1 = top) sits at sum_{j=i..n} 1/(2j).
  Rational right(0);
  for (int i = n; i >= 1; --i) {
    right += Rational(1, 2 * i);
    s.blocks.emplace_back(right - 1, n - i);
  }
  return s;
}

Stack make_inverted_triangle(int m) {
  if (m < 1) throw std::invalid_argument("triangle needs m >= 1");
  Stack s;
  s.name = "inverted-triangle-" + std::to_string(m);
  for (int row = 1; row <= m; ++row) {
    for (int j = 0; j < row; ++j)
      s.blocks.emplace_back(Rational(-row, 2) + j, row - 1);
  }
  return s;
}

Stack make_diamond(int m) {
  if (m < 1) throw std::invalid_argument("diamond needs m >= 1");
  Stack s;
  s.name = "diamond-" + std::to_string(m);
  for (int level = 0; level <= 2 * m - 2; ++level) {
    int width = level < m ? level + 1 : 2 * m - 1 - level;
    for (int j = 0; j < width; ++j)
      s.blocks.emplace_back(Rational(-width, 2) + j, level);
  }
  return s;
}

}  // namespace overhang
