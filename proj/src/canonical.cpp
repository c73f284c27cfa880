#include "ctgeo/canonical.hpp"

namespace ctgeo {

namespace {

void require_cotangent(const ChartPtr& chart) {
  if (!chart->is_cotangent()) throw ChartMismatchError("cotangent chart required");
}

}  // namespace

PhaseVectorField liouville_hamilton_field(const ChartPtr& chart) {
  require_cotangent(chart);
  PhaseVectorField c = PhaseVectorField::zero(chart);
  for (int i = 0; i < chart->dimension(); ++i)
    c.component(chart->fiber_index(i)) =
        ScalarField::coordinate(chart, chart->fiber_index(i));
  return c;
}

PhaseOneForm liouville_one_form(const ChartPtr& chart) {
  require_cotangent(chart);
  PhaseOneForm theta = PhaseOneForm::zero(chart);
  for (int i = 0; i < chart->dimension(); ++i)
    theta.coefficient(i) = ScalarField::coordinate(chart, chart->fiber_index(i));
  return theta;
}

ScalarField symplectic_pairing(const PhaseVectorField& x, const PhaseVectorField& y) {
  require_compatible(x.chart(), y.chart());
  require_cotangent(x.chart());
  const ChartPtr& chart = x.chart();
  ScalarField acc = ScalarField::constant(chart, 0.0);
  for (int i = 0; i < chart->dimension(); ++i)
    acc = acc + x.fiber_component(i) * y.base_component(i) -
          y.fiber_component(i) * x.base_component(i);
  return acc;
}

ScalarField poisson_bracket(const ScalarField& f, const ScalarField& g) {
  require_compatible(f.chart(), g.chart());
  require_cotangent(f.chart());
  const ChartPtr& chart = f.chart();
  ScalarField acc = ScalarField::constant(chart, 0.0);
  for (int i = 0; i < chart->dimension(); ++i) {
    const int xi = chart->base_index(i);
    const int pi = chart->fiber_index(i);
    acc = acc + f.derivative(pi) * g.derivative(xi) - g.derivative(pi) * f.derivative(xi);
  }
  return acc;
}

}  // namespace ctgeo
