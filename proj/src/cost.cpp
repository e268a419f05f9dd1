#include "cliquecover/cost.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cliquecover {

CostVector CostVector::ones() { return CostVector(CostKind::kOnes, "ones"); }
CostVector CostVector::linear_i() { return CostVector(CostKind::kLinear, "i"); }
CostVector CostVector::linear_i_minus_1() { return CostVector(CostKind::kLinearMinusOne, "i-1"); }
CostVector CostVector::edge_triangle() { return CostVector(CostKind::kEdgeTriangle, "edge-triangle"); }

CostVector CostVector::custom(std::map<int, std::optional<Rational>> table, std::string name) {
  for (const auto& [size, value] : table) {
    if (size < 1) throw std::invalid_argument("cost table sizes start at 1");
    if (value && sgn(*value) < 0) throw std::invalid_argument("costs must be nonnegative");
  }
  CostVector c(CostKind::kCustom, std::move(name));
  c.table_ = std::move(table);
  return c;
}

CostVector CostVector::parse_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::map<int, std::optional<Rational>> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string size_text, value_text, extra;
    if (!(fields >> size_text) || size_text.front() == '#') continue;
    if (!(fields >> value_text) || (fields >> extra))
      throw std::invalid_argument("cost table line " + std::to_string(line_no) + ": expected 'size value'");
    int size = std::stoi(size_text);
    if (table.count(size)) throw std::invalid_argument("cost table defines size " + size_text + " twice");
    table[size] = value_text == "inf" ? std::nullopt : std::optional<Rational>(parse_rational(value_text));
  }
  return custom(std::move(table), std::move(name));
}

CostVector CostVector::from_spec(std::string_view spec) {
  if (spec == "ones" || spec == "1") return ones();
  if (spec == "i") return linear_i();
  if (spec == "i-1") return linear_i_minus_1();
  if (spec == "edge-triangle") return edge_triangle();
  if (spec.substr(0, 5) == "file:") {
    std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cost file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str(), std::string(spec));
  }
  throw std::invalid_argument("unknown cost vector '" + std::string(spec) + "'");
}

std::optional<Rational> CostVector::cost(int size) const {
  if (size < 1) throw std::out_of_range("clique sizes start at 1");
  switch (kind_) {
    case CostKind::kOnes: return Rational(1);
    case CostKind::kLinear: return Rational(size);
    case CostKind::kLinearMinusOne: return Rational(size - 1);
    case CostKind::kEdgeTriangle:
      if (size == 2 || size == 3) return Rational(1);
      return std::nullopt;
    case CostKind::kCustom: {
      auto it = table_.find(size);
      if (it == table_.end())
        throw std::out_of_range("cost vector '" + name_ + "' does not define size " + std::to_string(size));
      return it->second;
    }
  }
  return std::nullopt;
}

Rational CostVector::at(int size) const {
  auto c = cost(size);
  if (!c) throw std::domain_error("clique size " + std::to_string(size) + " has infinite cost");
  return *c;
}

CostVector CostVector::scaled(const Rational& factor, int max_size) const {
  if (sgn(factor) < 0) throw std::invalid_argument("scale factor must be nonnegative");
  std::map<int, std::optional<Rational>> table;
  for (int s = 1; s <= max_size; ++s) {
    auto c = cost(s);
    table[s] = c ? std::optional<Rational>(Rational(*c * factor)) : std::nullopt;
  }
  return custom(std::move(table), name_ + "*" + to_string(factor));
}

bool CostVector::has_bounded_growth(int t, int max_size) const {
  auto ct = cost(t);
  if (!ct) return false;
  for (int i = t; i < max_size; ++i) {
    auto a = cost(i);
    auto b = cost(i + 1);
    if (!a || !b || *b - *a > *ct) return false;
  }
  return true;
}

bool CostVector::is_concave_from(int from, int max_size) const {
  for (int i = std::max(from, 2); i < max_size; ++i) {
    auto lo = cost(i - 1);
    auto mid = cost(i);
    auto hi = cost(i + 1);
    if (!lo || !mid || !hi) return false;
    if (2 * *mid < *lo + *hi) return false;
  }
  return true;
}

}  // namespace cliquecover
