#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cliquecover/rational.hpp"

namespace cliquecover {

enum class CostKind { kOnes, kLinear, kLinearMinusOne, kEdgeTriangle, kCustom };

/// Nonnegative cost per clique size. A size may be excluded, which models an
/// infinite cost: cliques of that size are dropped from every variable set.
class CostVector {
 public:
  /// c_i = 1.
  static CostVector ones();
  /// c_i = i.
  static CostVector linear_i();
  /// c_i = i - 1.
  static CostVector linear_i_minus_1();
  /// c_2 = c_3 = 1, every other size excluded.
  static CostVector edge_triangle();
  /// Explicit table; sizes absent from the table are undefined and raise on
  /// lookup. A nullopt entry excludes that size.
  static CostVector custom(std::map<int, std::optional<Rational>> table, std::string name = "custom");

  /// "ones", "i", "i-1", "edge-triangle" or "file:PATH".
  static CostVector from_spec(std::string_view spec);
  /// Lines "size value" where value is a rational or "inf"; '#' comments.
  static CostVector parse_table(std::string_view text, std::string name = "custom");

  CostKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// nullopt when the size is excluded. Throws std::out_of_range for a size
  /// a custom table does not define.
  std::optional<Rational> cost(int size) const;
  bool allows(int size) const { return cost(size).has_value(); }
  /// Cost of an allowed size; throws std::domain_error for an excluded one.
  Rational at(int size) const;

  /// Same exclusions, every finite entry multiplied by factor (sizes 1..max_size).
  CostVector scaled(const Rational& factor, int max_size) const;

  /// c_{i+1} - c_i <= c_t for t <= i < max_size (finite sizes only).
  bool has_bounded_growth(int t, int max_size) const;
  /// 2 c_i >= c_{i-1} + c_{i+1} for from <= i < max_size.
  bool is_concave_from(int from, int max_size) const;

 private:
  CostVector(CostKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  CostKind kind_;
  std::string name_;
  std::map<int, std::optional<Rational>> table_;
};

}  // namespace cliquecover
