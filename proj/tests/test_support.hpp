#pragma once

#include <random>
#include <vector>

#include "ctgeo/hamilton.hpp"
#include "ctgeo/sampling.hpp"

namespace ctgeo::testing {

/// H = (p1^2 + p2^2)/2 + x1^2 x2 on n = 2; flat metric, potential force.
inline HamiltonModel euclidean_model() {
  ChartPtr chart = Chart::cotangent(2);
  return HamiltonModel::build(ScalarField::parse("0.5*(p1^2+p2^2)+x1^2*x2", chart));
}

/// H = (1 + x1^2) p1^2 / 2 on n = 1; the closed-form connection is
/// N_11 = -x1 p1 / (1 + x1^2).
inline HamiltonModel curved_1d_model() {
  ChartPtr chart = Chart::cotangent(1);
  return HamiltonModel::build(ScalarField::parse("0.5*(1+x1^2)*p1^2", chart));
}

/// Block-diagonal n = 2 version of the curved model.
inline HamiltonModel curved_2d_model() {
  ChartPtr chart = Chart::cotangent(2);
  return HamiltonModel::build(ScalarField::parse("0.5*((1+x1^2)*p1^2+p2^2)", chart));
}

/// n = 2 model whose canonical connection has nonvanishing curvature
/// (the metric entanglement runs across the coordinates).
inline HamiltonModel cross_curved_model() {
  ChartPtr chart = Chart::cotangent(2);
  return HamiltonModel::build(ScalarField::parse("0.5*((1+x2^2)*p1^2+p2^2)", chart));
}

inline HamiltonModel free_particle_model() {
  ChartPtr chart = Chart::cotangent(1);
  return HamiltonModel::build(ScalarField::parse("0.5*p1^2", chart));
}

inline std::vector<ChartPoint> sample(const ChartPtr& chart, int count = 100,
                                      std::uint64_t seed = 42, double fiber_abs_min = 0.0) {
  SamplingConfig config;
  config.count = count;
  config.seed = seed;
  return sample_chart_points(chart, config, fiber_abs_min);
}

inline double max_abs_over(const std::vector<ScalarField>& fields,
                           const std::vector<ChartPoint>& pts) {
  double worst = 0.0;
  for (const ChartPoint& pt : pts)
    for (const ScalarField& f : fields) worst = std::max(worst, std::abs(f(pt)));
  return worst;
}

/// Small random polynomial in the chart coordinates: up to three monomials
/// of total degree <= 2 with small integer coefficients.
inline ScalarField random_polynomial(const ChartPtr& chart, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> coord(0, chart->coord_count() - 1);
  std::uniform_int_distribution<int> monomials(1, 3);
  std::uniform_int_distribution<int> factors(0, 2);
  ScalarField acc = ScalarField::constant(chart, 0.0);
  const int terms = monomials(rng);
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    ScalarField term = ScalarField::constant(chart, static_cast<double>(c));
    const int nf = factors(rng);
    for (int f = 0; f < nf; ++f)
      term = term * ScalarField::coordinate(chart, coord(rng));
    acc = acc + term;
  }
  return acc;
}

inline PhaseVectorField random_polynomial_field(const ChartPtr& chart, std::mt19937_64& rng) {
  std::vector<ScalarField> comps;
  for (int a = 0; a < chart->coord_count(); ++a) comps.push_back(random_polynomial(chart, rng));
  return {chart, std::move(comps)};
}

}  // namespace ctgeo::testing
