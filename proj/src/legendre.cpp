#include "ctgeo/legendre.hpp"

#include <cmath>

#include "ctgeo/numeric.hpp"

namespace ctgeo {

LegendreMap::LegendreMap(HamiltonModel model, NewtonSettings settings)
    : model_(std::move(model)),
      tangent_chart_(Chart::tangent(model_.chart()->dimension())),
      settings_(settings) {}

ChartPoint LegendreMap::forward(const ChartPoint& cotangent_pt) const {
  require_compatible(cotangent_pt.chart, model_.chart());
  const int n = model_.chart()->dimension();
  std::vector<double> values(static_cast<std::size_t>(2 * n), 0.0);
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = cotangent_pt.x(i);
  for (int i = 0; i < n; ++i)
    values[static_cast<std::size_t>(n + i)] =
        model_.hamiltonian_field().base_component(i)(cotangent_pt);
  return make_point(tangent_chart_, std::move(values));
}

LegendreMap::Inverse LegendreMap::inverse(const ChartPoint& tangent_pt) const {
  require_compatible(tangent_pt.chart, tangent_chart_);
  const int n = model_.chart()->dimension();

  // work point on the cotangent chart, p seeded with y
  std::vector<double> work = tangent_pt.values;
  ChartPoint guess = make_point(model_.chart(), std::move(work));

  double residual = 0.0;
  for (int iteration = 0; iteration <= settings_.max_iterations; ++iteration) {
    std::vector<double> f(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      f[static_cast<std::size_t>(i)] =
          model_.hamiltonian_field().base_component(i)(guess) - tangent_pt.fiber(i);
    residual = max_abs(f);
    if (residual <= settings_.tolerance)
      return {std::move(guess), iteration, residual};

    std::vector<double> jac = model_.metric_upper().eval(guess);
    std::vector<double> step = solve_dense(std::move(jac), std::move(f));
    for (int i = 0; i < n; ++i)
      guess.values[static_cast<std::size_t>(n + i)] -= step[static_cast<std::size_t>(i)];
  }
  throw NewtonConvergenceError(
      "fiber inversion did not converge (last residual " + exact_double_text(residual) + ")",
      residual);
}

double LegendreMap::induced_lagrangian(const ChartPoint& tangent_pt) const {
  Inverse inv = inverse(tangent_pt);
  const int n = model_.chart()->dimension();
  double acc = -model_.hamiltonian()(inv.point);
  for (int i = 0; i < n; ++i) acc += inv.point.fiber(i) * tangent_pt.fiber(i);
  return acc;
}

std::vector<ScalarField> LegendreMap::dual_spray_through_map() const {
  const ChartPtr& chart = model_.chart();
  const int n = chart->dimension();
  std::vector<ScalarField> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ScalarField acc = ScalarField::constant(chart, 0.0);
    for (int k = 0; k < n; ++k) {
      acc = acc + model_.hamiltonian_field().base_component(k) *
                      model_.hamiltonian_field().base_component(i).derivative(chart->base_index(k));
      acc = acc + model_.hamiltonian_field().fiber_component(k) * model_.metric_upper().at(k, i);
    }
    s.push_back(acc);
  }
  return s;
}

}  // namespace ctgeo
