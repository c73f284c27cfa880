#include "ctgeo/connection.hpp"

namespace ctgeo {

NonlinearConnection::NonlinearConnection(ChartPtr chart, SfMatrix coefficients)
    : chart_(std::move(chart)), n_(std::move(coefficients)) {
  if (!chart_->is_cotangent()) throw ChartMismatchError("cotangent chart required");
  if (n_.rows() != chart_->dimension() || n_.cols() != chart_->dimension())
    throw Error("connection coefficients must be n x n");
}

NonlinearConnection NonlinearConnection::zero(ChartPtr chart) {
  SfMatrix m(chart, chart->dimension(), chart->dimension());
  return {std::move(chart), std::move(m)};
}

PhaseVectorField NonlinearConnection::adapted_frame(int i) const {
  PhaseVectorField delta = PhaseVectorField::frame(chart_, chart_->base_index(i));
  for (int j = 0; j < chart_->dimension(); ++j)
    delta.component(chart_->fiber_index(j)) = n_.at(i, j);
  return delta;
}

ScalarField NonlinearConnection::adapted_derivative(const ScalarField& f, int i) const {
  ScalarField acc = f.derivative(chart_->base_index(i));
  for (int j = 0; j < chart_->dimension(); ++j) {
    if (n_.at(i, j).is_zero()) continue;
    acc = acc + n_.at(i, j) * f.derivative(chart_->fiber_index(j));
  }
  return acc;
}

FullTensor11 NonlinearConnection::horizontal() const {
  // h = delta/delta x^i (x) dx^i
  FullTensor11 h(chart_);
  const int n = chart_->dimension();
  for (int i = 0; i < n; ++i) {
    h.at(i, i) = ScalarField::constant(chart_, 1.0);
    for (int k = 0; k < n; ++k) h.at(chart_->fiber_index(k), i) = n_.at(i, k);
  }
  return h;
}

FullTensor11 NonlinearConnection::vertical() const {
  // v = d/dp_i (x) delta p_i = Id - h
  FullTensor11 v(chart_);
  const int n = chart_->dimension();
  for (int k = 0; k < n; ++k) {
    v.at(chart_->fiber_index(k), chart_->fiber_index(k)) = ScalarField::constant(chart_, 1.0);
    for (int i = 0; i < n; ++i) v.at(chart_->fiber_index(k), i) = -n_.at(i, k);
  }
  return v;
}

FullTensor11 NonlinearConnection::connection_tensor() const {
  return horizontal() - vertical();
}

SfMatrix NonlinearConnection::antisymmetric_part() const {
  const int n = chart_->dimension();
  SfMatrix tau(chart_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tau.at(i, j) = 0.5 * (n_.at(i, j) - n_.at(j, i));
  return tau;
}

Curvature3 NonlinearConnection::curvature() const {
  const int n = chart_->dimension();
  Curvature3 r;
  r.n = n;
  r.comp.assign(static_cast<std::size_t>(n * n * n), ScalarField::constant(chart_, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        r.at(i, j, k) =
            adapted_derivative(n_.at(j, k), i) - adapted_derivative(n_.at(i, k), j);
  return r;
}

SfMatrix NonlinearConnection::tension() const {
  const int n = chart_->dimension();
  SfMatrix t(chart_, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ScalarField acc = ScalarField::constant(chart_, 0.0);
      for (int k = 0; k < n; ++k)
        acc = acc + ScalarField::coordinate(chart_, chart_->fiber_index(k)) *
                        n_.at(i, j).derivative(chart_->fiber_index(k));
      t.at(i, j) = acc - n_.at(i, j);
    }
  }
  return t;
}

}  // namespace ctgeo
