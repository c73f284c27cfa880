#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ctgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed; `offset` is the byte position of the
/// first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(std::string identifier, std::size_t offset)
      : ParseError("unknown identifier '" + identifier + "'", offset),
        identifier_(std::move(identifier)) {}
  const std::string& identifier() const { return identifier_; }

 private:
  std::string identifier_;
};

class FunctionArityError : public ParseError {
 public:
  FunctionArityError(const std::string& function, std::size_t offset)
      : ParseError("function '" + function + "' takes exactly one argument", offset) {}
};

class ChartMismatchError : public Error {
 public:
  using Error::Error;
};

/// Evaluation left the natural domain of a function (log of a non-positive
/// value, division by zero, ...). Carries the function name and the offending
/// sub-value.
class DomainError : public Error {
 public:
  DomainError(const std::string& function, double value)
      : Error("domain violation in '" + function + "' at value " + std::to_string(value)),
        function_(function),
        value_(value) {}
  const std::string& function() const { return function_; }
  double value() const { return value_; }

 private:
  std::string function_;
  double value_;
};

class RegularityError : public Error {
 public:
  using Error::Error;
};

class NewtonConvergenceError : public Error {
 public:
  NewtonConvergenceError(const std::string& message, double last_residual)
      : Error(message), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

class ModelError : public Error {
 public:
  ModelError(std::string field, const std::string& message)
      : Error("model field '" + field + "': " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// A 2n-dimensional phase chart. Base coordinates are always x1..xn; fiber
/// coordinates are p1..pn on a cotangent chart and y1..yn on a tangent chart.
/// Coordinates are indexed 0..2n-1 with the base block first.
class Chart {
 public:
  static ChartPtr cotangent(int n) { return ChartPtr(new Chart(n, "p")); }
  static ChartPtr tangent(int n) { return ChartPtr(new Chart(n, "y")); }

  int dimension() const { return n_; }
  int coord_count() const { return 2 * n_; }

  const std::string& coord_name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
  std::optional<int> find(std::string_view name) const {
    for (int a = 0; a < coord_count(); ++a)
      if (names_[static_cast<std::size_t>(a)] == name) return a;
    return std::nullopt;
  }

  bool is_fiber_index(int a) const { return a >= n_; }
  int base_index(int i) const { return i; }
  int fiber_index(int i) const { return n_ + i; }
  const std::string& fiber_prefix() const { return fiber_; }
  bool is_cotangent() const { return fiber_ == "p"; }

  /// Charts are interchangeable when dimension and fiber naming agree.
  bool compatible(const Chart& other) const {
    return n_ == other.n_ && fiber_ == other.fiber_;
  }

 private:
  Chart(int n, std::string fiber) : n_(n), fiber_(std::move(fiber)) {
    if (n < 1) throw Error("chart dimension must be positive");
    names_.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names_.push_back(fiber_ + std::to_string(i));
  }

  int n_;
  std::string fiber_;
  std::vector<std::string> names_;
};

/// A point of a phase chart: 2n finite reals ordered base-then-fiber.
struct ChartPoint {
  ChartPtr chart;
  std::vector<double> values;

  double x(int i) const { return values[static_cast<std::size_t>(i)]; }
  double fiber(int i) const { return values[static_cast<std::size_t>(chart->dimension() + i)]; }
};

inline ChartPoint make_point(ChartPtr chart, std::vector<double> values) {
  if (static_cast<int>(values.size()) != chart->coord_count())
    throw Error("point length does not match chart dimension");
  return ChartPoint{std::move(chart), std::move(values)};
}

inline void require_compatible(const ChartPtr& a, const ChartPtr& b) {
  if (!a || !b || !a->compatible(*b)) throw ChartMismatchError("chart mismatch");
}

}  // namespace ctgeo
