#pragma once

#include <vector>

#include "ctgeo/scalar_field.hpp"

namespace ctgeo {

/// A vector field on a 2n-dimensional phase chart, stored as one scalar
/// component per coordinate frame field (base block first, fiber block
/// second).
class PhaseVectorField {
 public:
  PhaseVectorField() = default;
  PhaseVectorField(ChartPtr chart, std::vector<ScalarField> components);

  static PhaseVectorField zero(ChartPtr chart);
  /// Coordinate frame field for index a.
  static PhaseVectorField frame(ChartPtr chart, int a);
  static PhaseVectorField from_parts(ChartPtr chart, std::vector<ScalarField> base,
                                     std::vector<ScalarField> fiber);

  const ChartPtr& chart() const { return chart_; }
  int coord_count() const { return static_cast<int>(components_.size()); }

  const ScalarField& component(int a) const { return components_[static_cast<std::size_t>(a)]; }
  ScalarField& component(int a) { return components_[static_cast<std::size_t>(a)]; }
  const ScalarField& base_component(int i) const { return component(i); }
  const ScalarField& fiber_component(int i) const {
    return component(chart_->dimension() + i);
  }

  /// X(f): directional derivative of a scalar field.
  ScalarField directional(const ScalarField& f) const;

  std::vector<double> eval(const ChartPoint& pt) const;

  PhaseVectorField operator+(const PhaseVectorField& o) const;
  PhaseVectorField operator-(const PhaseVectorField& o) const;
  PhaseVectorField operator-() const;
  PhaseVectorField scaled(const ScalarField& f) const;
  PhaseVectorField scaled(double c) const;

 private:
  ChartPtr chart_;
  std::vector<ScalarField> components_;
};

/// A 1-form as one coefficient per coordinate coframe element.
class PhaseOneForm {
 public:
  PhaseOneForm() = default;
  PhaseOneForm(ChartPtr chart, std::vector<ScalarField> coefficients);

  static PhaseOneForm zero(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  int coord_count() const { return static_cast<int>(coefficients_.size()); }
  const ScalarField& coefficient(int a) const { return coefficients_[static_cast<std::size_t>(a)]; }
  ScalarField& coefficient(int a) { return coefficients_[static_cast<std::size_t>(a)]; }

  /// phi(X)
  ScalarField pair(const PhaseVectorField& x) const;

 private:
  ChartPtr chart_;
  std::vector<ScalarField> coefficients_;
};

}  // namespace ctgeo
