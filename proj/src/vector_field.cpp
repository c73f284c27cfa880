#include "ctgeo/vector_field.hpp"

namespace ctgeo {

PhaseVectorField::PhaseVectorField(ChartPtr chart, std::vector<ScalarField> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != chart_->coord_count())
    throw Error("vector field needs one component per coordinate");
  for (const ScalarField& f : components_) require_compatible(f.chart(), chart_);
}

PhaseVectorField PhaseVectorField::zero(ChartPtr chart) {
  std::vector<ScalarField> comps(static_cast<std::size_t>(chart->coord_count()),
                                 ScalarField::constant(chart, 0.0));
  return {std::move(chart), std::move(comps)};
}

PhaseVectorField PhaseVectorField::frame(ChartPtr chart, int a) {
  PhaseVectorField x = zero(chart);
  x.component(a) = ScalarField::constant(x.chart_, 1.0);
  return x;
}

PhaseVectorField PhaseVectorField::from_parts(ChartPtr chart, std::vector<ScalarField> base,
                                              std::vector<ScalarField> fiber) {
  if (static_cast<int>(base.size()) != chart->dimension() ||
      static_cast<int>(fiber.size()) != chart->dimension())
    throw Error("base/fiber parts must each have n components");
  std::vector<ScalarField> comps = std::move(base);
  comps.insert(comps.end(), fiber.begin(), fiber.end());
  return {std::move(chart), std::move(comps)};
}

ScalarField PhaseVectorField::directional(const ScalarField& f) const {
  require_compatible(chart_, f.chart());
  ScalarField acc = ScalarField::constant(chart_, 0.0);
  for (int a = 0; a < coord_count(); ++a) {
    if (component(a).is_zero()) continue;
    acc = acc + component(a) * f.derivative(a);
  }
  return acc;
}

std::vector<double> PhaseVectorField::eval(const ChartPoint& pt) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const ScalarField& f : components_) out.push_back(f(pt));
  return out;
}

PhaseVectorField PhaseVectorField::operator+(const PhaseVectorField& o) const {
  require_compatible(chart_, o.chart_);
  std::vector<ScalarField> comps;
  comps.reserve(components_.size());
  for (int a = 0; a < coord_count(); ++a) comps.push_back(component(a) + o.component(a));
  return {chart_, std::move(comps)};
}

PhaseVectorField PhaseVectorField::operator-(const PhaseVectorField& o) const {
  require_compatible(chart_, o.chart_);
  std::vector<ScalarField> comps;
  comps.reserve(components_.size());
  for (int a = 0; a < coord_count(); ++a) comps.push_back(component(a) - o.component(a));
  return {chart_, std::move(comps)};
}

PhaseVectorField PhaseVectorField::operator-() const {
  std::vector<ScalarField> comps;
  comps.reserve(components_.size());
  for (const ScalarField& f : components_) comps.push_back(-f);
  return {chart_, std::move(comps)};
}

PhaseVectorField PhaseVectorField::scaled(const ScalarField& f) const {
  std::vector<ScalarField> comps;
  comps.reserve(components_.size());
  for (const ScalarField& c : components_) comps.push_back(f * c);
  return {chart_, std::move(comps)};
}

PhaseVectorField PhaseVectorField::scaled(double c) const {
  std::vector<ScalarField> comps;
  comps.reserve(components_.size());
  for (const ScalarField& f : components_) comps.push_back(c * f);
  return {chart_, std::move(comps)};
}

PhaseOneForm::PhaseOneForm(ChartPtr chart, std::vector<ScalarField> coefficients)
    : chart_(std::move(chart)), coefficients_(std::move(coefficients)) {
  if (static_cast<int>(coefficients_.size()) != chart_->coord_count())
    throw Error("1-form needs one coefficient per coordinate");
}

PhaseOneForm PhaseOneForm::zero(ChartPtr chart) {
  std::vector<ScalarField> coeffs(static_cast<std::size_t>(chart->coord_count()),
                                  ScalarField::constant(chart, 0.0));
  return {std::move(chart), std::move(coeffs)};
}

ScalarField PhaseOneForm::pair(const PhaseVectorField& x) const {
  require_compatible(chart_, x.chart());
  ScalarField acc = ScalarField::constant(chart_, 0.0);
  for (int a = 0; a < coord_count(); ++a) {
    if (coefficient(a).is_zero() || x.component(a).is_zero()) continue;
    acc = acc + coefficient(a) * x.component(a);
  }
  return acc;
}

}  // namespace ctgeo
