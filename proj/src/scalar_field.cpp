#include "ctgeo/scalar_field.hpp"

#include <cmath>

#include "expr_internal.hpp"

namespace ctgeo {

namespace detail {
std::string exact_double_text_impl(double v);
}

std::string exact_double_text(double v) { return detail::exact_double_text_impl(v); }

namespace {

void require_valid(const ScalarField& f) {
  if (!f.valid()) throw Error("use of an empty scalar field");
}

void require_same_chart(const ScalarField& a, const ScalarField& b) {
  require_valid(a);
  require_valid(b);
  require_compatible(a.chart(), b.chart());
}

}  // namespace

ScalarField ScalarField::parse(std::string_view src, ChartPtr chart) {
  return {chart, detail::parse(src, *chart)};
}

ScalarField ScalarField::constant(ChartPtr chart, double value) {
  return {std::move(chart), detail::make_constant(value)};
}

ScalarField ScalarField::coordinate(ChartPtr chart, int index) {
  if (index < 0 || index >= chart->coord_count())
    throw Error("coordinate index out of range");
  return {std::move(chart), detail::make_coordinate(index)};
}

ScalarField ScalarField::derivative(int coord, int order) const {
  require_valid(*this);
  if (coord < 0 || coord >= chart_->coord_count())
    throw Error("derivative coordinate not in chart");
  if (order < 1) throw Error("derivative order must be positive");
  detail::ExprPtr d = node_;
  for (int k = 0; k < order; ++k) d = detail::differentiate(d, coord);
  return {chart_, std::move(d)};
}

ScalarField ScalarField::derivative(std::string_view coord_name, int order) const {
  require_valid(*this);
  auto index = chart_->find(coord_name);
  if (!index) throw Error("derivative coordinate '" + std::string(coord_name) + "' not in chart");
  return derivative(*index, order);
}

double ScalarField::operator()(const ChartPoint& pt) const {
  require_valid(*this);
  require_compatible(chart_, pt.chart);
  return detail::evaluate(node_, pt.values);
}

double ScalarField::eval(std::span<const double> coords) const {
  require_valid(*this);
  if (static_cast<int>(coords.size()) != chart_->coord_count())
    throw Error("coordinate vector length does not match chart");
  return detail::evaluate(node_, coords);
}

bool ScalarField::is_zero() const { return node_ && detail::is_zero(node_); }

std::string ScalarField::to_text() const {
  require_valid(*this);
  return detail::print(node_, *chart_);
}

ScalarField ScalarField::operator-() const {
  require_valid(*this);
  return {chart_, detail::make_neg(node_)};
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_chart(a, b);
  return {a.chart_, detail::make_add(a.node_, b.node_)};
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_chart(a, b);
  return {a.chart_, detail::make_sub(a.node_, b.node_)};
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  require_same_chart(a, b);
  return {a.chart_, detail::make_mul(a.node_, b.node_)};
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  require_same_chart(a, b);
  return {a.chart_, detail::make_div(a.node_, b.node_)};
}

ScalarField operator*(double c, const ScalarField& f) {
  require_valid(f);
  return {f.chart_, detail::make_mul(detail::make_constant(c), f.node_)};
}
ScalarField operator*(const ScalarField& f, double c) { return c * f; }

ScalarField operator+(const ScalarField& f, double c) {
  require_valid(f);
  return {f.chart_, detail::make_add(f.node_, detail::make_constant(c))};
}
ScalarField operator+(double c, const ScalarField& f) { return f + c; }

ScalarField operator-(const ScalarField& f, double c) { return f + (-c); }
ScalarField operator-(double c, const ScalarField& f) {
  require_valid(f);
  return {f.chart_, detail::make_sub(detail::make_constant(c), f.node_)};
}

ScalarField operator/(const ScalarField& f, double c) {
  require_valid(f);
  return {f.chart_, detail::make_div(f.node_, detail::make_constant(c))};
}
ScalarField operator/(double c, const ScalarField& f) {
  require_valid(f);
  return {f.chart_, detail::make_div(detail::make_constant(c), f.node_)};
}

ScalarField pow(const ScalarField& base, double exponent) {
  require_valid(base);
  return {base.chart_, detail::make_pow(base.node_, detail::make_constant(exponent))};
}

ScalarField pow(const ScalarField& base, const ScalarField& exponent) {
  require_same_chart(base, exponent);
  return {base.chart_, detail::make_pow(base.node_, exponent.node_)};
}

#define CTGEO_FUNC(name, kind)                                  \
  ScalarField name(const ScalarField& f) {                      \
    require_valid(f);                                           \
    return {f.chart_, detail::make_call(detail::Func::kind, f.node_)}; \
  }
CTGEO_FUNC(sin, sin)
CTGEO_FUNC(cos, cos)
CTGEO_FUNC(tan, tan)
CTGEO_FUNC(exp, exp)
CTGEO_FUNC(log, log)
CTGEO_FUNC(sqrt, sqrt)
#undef CTGEO_FUNC

ScalarField substitute(const ScalarField& f, const ChartPtr& target,
                       std::span<const ScalarField> coordinate_map) {
  require_valid(f);
  if (static_cast<int>(coordinate_map.size()) != f.chart()->coord_count())
    throw Error("substitution map must cover every coordinate");
  std::vector<detail::ExprPtr> nodes;
  nodes.reserve(coordinate_map.size());
  for (const ScalarField& g : coordinate_map) {
    require_valid(g);
    require_compatible(g.chart(), target);
    nodes.push_back(g.node_);
  }
  return {target, detail::substitute(f.node_, nodes)};
}

std::vector<double> fd_gradient_residuals(const ScalarField& f, const ChartPoint& pt, double h) {
  if (h <= 0.0) throw Error("finite-difference step must be positive");
  require_compatible(f.chart(), pt.chart);
  const int m = pt.chart->coord_count();
  std::vector<double> residuals(static_cast<std::size_t>(m));
  std::vector<double> shifted = pt.values;
  for (int a = 0; a < m; ++a) {
    const double center = pt.values[static_cast<std::size_t>(a)];
    shifted[static_cast<std::size_t>(a)] = center + h;
    const double fp = f.eval(shifted);
    shifted[static_cast<std::size_t>(a)] = center - h;
    const double fm = f.eval(shifted);
    shifted[static_cast<std::size_t>(a)] = center;
    const double fd = (fp - fm) / (2.0 * h);
    const double sym = f.derivative(a).eval(pt.values);
    residuals[static_cast<std::size_t>(a)] = std::abs(sym - fd);
  }
  return residuals;
}

}  // namespace ctgeo
