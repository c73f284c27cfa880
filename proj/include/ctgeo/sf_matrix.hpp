#pragma once

#include <vector>

#include "ctgeo/scalar_field.hpp"

namespace ctgeo {

/// Dense matrix of scalar fields over one chart.
class SfMatrix {
 public:
  SfMatrix() = default;
  SfMatrix(ChartPtr chart, int rows, int cols)
      : chart_(std::move(chart)),
        rows_(rows),
        cols_(cols),
        entries_(static_cast<std::size_t>(rows * cols), ScalarField::constant(chart_, 0.0)) {}

  static SfMatrix identity(ChartPtr chart, int n) {
    SfMatrix m(chart, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ScalarField::constant(m.chart_, 1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const ChartPtr& chart() const { return chart_; }

  ScalarField& at(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  const ScalarField& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * cols_ + j)];
  }

  SfMatrix transpose() const {
    SfMatrix out(chart_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  SfMatrix operator+(const SfMatrix& o) const;
  SfMatrix operator-(const SfMatrix& o) const;
  SfMatrix operator*(const SfMatrix& o) const;
  SfMatrix scaled(double c) const;

  /// Row-major values at a point.
  std::vector<double> eval(const ChartPoint& pt) const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const ScalarField& f : entries_) out.push_back(f(pt));
    return out;
  }

 private:
  ChartPtr chart_;
  int rows_ = 0, cols_ = 0;
  std::vector<ScalarField> entries_;
};

/// Determinant by cofactor expansion (structural zeros are skipped).
ScalarField sf_determinant(const SfMatrix& m);

/// Exact inverse as a matrix of scalar fields (adjugate over determinant),
/// so the inverse stays closed under differentiation. Cost grows
/// factorially with size; intended for the small fiber dimensions of a
/// phase chart.
SfMatrix sf_inverse(const SfMatrix& m);

}  // namespace ctgeo
