#include "ctgeo/tensor11.hpp"

namespace ctgeo {

PhaseVectorField FullTensor11::apply(const PhaseVectorField& x) const {
  require_compatible(chart_, x.chart());
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(m_));
  for (int a = 0; a < m_; ++a) {
    ScalarField acc = ScalarField::constant(chart_, 0.0);
    for (int b = 0; b < m_; ++b) {
      if (at(a, b).is_zero() || x.component(b).is_zero()) continue;
      acc = acc + at(a, b) * x.component(b);
    }
    comps.push_back(acc);
  }
  return {chart_, std::move(comps)};
}

PhaseVectorField FullTensor11::column(int b) const {
  std::vector<ScalarField> comps;
  comps.reserve(static_cast<std::size_t>(m_));
  for (int a = 0; a < m_; ++a) comps.push_back(at(a, b));
  return {chart_, std::move(comps)};
}

FullTensor11 FullTensor11::compose(const FullTensor11& o) const {
  require_compatible(chart_, o.chart_);
  FullTensor11 out(chart_);
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      ScalarField acc = ScalarField::constant(chart_, 0.0);
      for (int c = 0; c < m_; ++c) {
        if (at(a, c).is_zero() || o.at(c, b).is_zero()) continue;
        acc = acc + at(a, c) * o.at(c, b);
      }
      out.at(a, b) = acc;
    }
  }
  return out;
}

FullTensor11 FullTensor11::operator+(const FullTensor11& o) const {
  require_compatible(chart_, o.chart_);
  FullTensor11 out(chart_);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) out.at(a, b) = at(a, b) + o.at(a, b);
  return out;
}

FullTensor11 FullTensor11::operator-(const FullTensor11& o) const {
  require_compatible(chart_, o.chart_);
  FullTensor11 out(chart_);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) out.at(a, b) = at(a, b) - o.at(a, b);
  return out;
}

FullTensor11 FullTensor11::scaled(double c) const {
  FullTensor11 out(chart_);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) out.at(a, b) = c * at(a, b);
  return out;
}

std::vector<double> FullTensor11::eval(const ChartPoint& pt) const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const ScalarField& f : entries_) out.push_back(f(pt));
  return out;
}

}  // namespace ctgeo
