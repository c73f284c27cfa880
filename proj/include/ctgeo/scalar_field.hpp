#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctgeo/chart.hpp"

namespace ctgeo {

namespace detail {
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;
}  // namespace detail

/// An immutable real-valued expression over the coordinates of a chart,
/// closed under exact partial differentiation. Arithmetic between fields
/// requires compatible charts.
class ScalarField {
 public:
  ScalarField() = default;

  /// Parse expression text. Grammar: + - * / ^ (right-associative), unary
  /// minus, parentheses, and the functions sin, cos, tan, exp, log, sqrt.
  /// '^' binds tighter than unary '-', which binds tighter than '*'/'/'.
  static ScalarField parse(std::string_view src, ChartPtr chart);
  static ScalarField constant(ChartPtr chart, double value);
  static ScalarField coordinate(ChartPtr chart, int index);

  bool valid() const { return static_cast<bool>(node_); }
  const ChartPtr& chart() const { return chart_; }

  /// Exact symbolic partial derivative of the given order.
  ScalarField derivative(int coord, int order = 1) const;
  ScalarField derivative(std::string_view coord_name, int order = 1) const;

  double operator()(const ChartPoint& pt) const;
  double eval(std::span<const double> coords) const;

  /// Structurally the zero constant (used to skip vanishing terms).
  bool is_zero() const;

  std::string to_text() const;

  ScalarField operator-() const;
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b);

  friend ScalarField operator*(double c, const ScalarField& f);
  friend ScalarField operator*(const ScalarField& f, double c);
  friend ScalarField operator+(const ScalarField& f, double c);
  friend ScalarField operator+(double c, const ScalarField& f);
  friend ScalarField operator-(const ScalarField& f, double c);
  friend ScalarField operator-(double c, const ScalarField& f);
  friend ScalarField operator/(const ScalarField& f, double c);
  friend ScalarField operator/(double c, const ScalarField& f);

  friend ScalarField pow(const ScalarField& base, double exponent);
  friend ScalarField pow(const ScalarField& base, const ScalarField& exponent);
  friend ScalarField sin(const ScalarField& f);
  friend ScalarField cos(const ScalarField& f);
  friend ScalarField tan(const ScalarField& f);
  friend ScalarField exp(const ScalarField& f);
  friend ScalarField log(const ScalarField& f);
  friend ScalarField sqrt(const ScalarField& f);

  friend ScalarField substitute(const ScalarField& f, const ChartPtr& target,
                                std::span<const ScalarField> coordinate_map);

 private:
  ScalarField(ChartPtr chart, detail::ExprPtr node)
      : chart_(std::move(chart)), node_(std::move(node)) {}

  ChartPtr chart_;
  detail::ExprPtr node_;
};

/// |symbolic d f/d c - central difference| per coordinate at `pt`.
std::vector<double> fd_gradient_residuals(const ScalarField& f, const ChartPoint& pt, double h);

/// Rebuild `f` over `target`, replacing coordinate a of f's chart by
/// `coordinate_map[a]` (a field over `target`).
ScalarField substitute(const ScalarField& f, const ChartPtr& target,
                       std::span<const ScalarField> coordinate_map);

/// Shortest decimal text that parses back to exactly the same double.
std::string exact_double_text(double v);

}  // namespace ctgeo
