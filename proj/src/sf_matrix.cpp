#include "ctgeo/sf_matrix.hpp"

namespace ctgeo {

SfMatrix SfMatrix::operator+(const SfMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  SfMatrix out(chart_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  return out;
}

SfMatrix SfMatrix::operator-(const SfMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  SfMatrix out(chart_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - o.at(i, j);
  return out;
}

SfMatrix SfMatrix::operator*(const SfMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  SfMatrix out(chart_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      ScalarField acc = ScalarField::constant(chart_, 0.0);
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc = acc + at(i, k) * o.at(k, j);
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

SfMatrix SfMatrix::scaled(double c) const {
  SfMatrix out(chart_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = c * at(i, j);
  return out;
}

namespace {

SfMatrix minor_of(const SfMatrix& m, int row, int col) {
  SfMatrix out(m.chart(), m.rows() - 1, m.cols() - 1);
  int r = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    int c = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out.at(r, c) = m.at(i, j);
      ++c;
    }
    ++r;
  }
  return out;
}

}  // namespace

ScalarField sf_determinant(const SfMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  ScalarField acc = ScalarField::constant(m.chart(), 0.0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    ScalarField term = m.at(0, j) * sf_determinant(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

SfMatrix sf_inverse(const SfMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const int n = m.rows();
  ScalarField det = sf_determinant(m);
  if (det.is_zero()) throw RegularityError("matrix is identically singular");
  SfMatrix out(m.chart(), n, n);
  if (n == 1) {
    out.at(0, 0) = 1.0 / det;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // adjugate: cofactor of (j, i)
      ScalarField cof = sf_determinant(minor_of(m, j, i));
      out.at(i, j) = (((i + j) % 2 == 0) ? cof : -cof) / det;
    }
  }
  return out;
}

}  // namespace ctgeo
