#pragma once

#include <vector>

#include "ctgeo/sf_matrix.hpp"
#include "ctgeo/vector_field.hpp"

namespace ctgeo {

/// A (1,1)-tensor on the full 2n-dimensional chart, stored in the coordinate
/// frame with the convention (A X)^a = A^a_b X^b (row = output component).
class FullTensor11 {
 public:
  FullTensor11() = default;
  explicit FullTensor11(ChartPtr chart)
      : chart_(std::move(chart)),
        m_(chart_->coord_count()),
        entries_(static_cast<std::size_t>(m_ * m_), ScalarField::constant(chart_, 0.0)) {}

  static FullTensor11 identity(ChartPtr chart) {
    FullTensor11 t(std::move(chart));
    for (int a = 0; a < t.m_; ++a) t.at(a, a) = ScalarField::constant(t.chart_, 1.0);
    return t;
  }

  const ChartPtr& chart() const { return chart_; }
  int dim() const { return m_; }

  ScalarField& at(int row, int col) { return entries_[static_cast<std::size_t>(row * m_ + col)]; }
  const ScalarField& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * m_ + col)];
  }

  PhaseVectorField apply(const PhaseVectorField& x) const;
  PhaseVectorField column(int b) const;

  /// (A∘B)^a_b = A^a_c B^c_b
  FullTensor11 compose(const FullTensor11& o) const;

  FullTensor11 operator+(const FullTensor11& o) const;
  FullTensor11 operator-(const FullTensor11& o) const;
  FullTensor11 scaled(double c) const;

  /// Row-major 2n x 2n values at a point.
  std::vector<double> eval(const ChartPoint& pt) const;

 private:
  ChartPtr chart_;
  int m_ = 0;
  std::vector<ScalarField> entries_;
};

}  // namespace ctgeo
