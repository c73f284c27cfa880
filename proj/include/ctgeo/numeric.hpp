#pragma once

#include <span>
#include <vector>

namespace ctgeo {

/// Solve A x = b for a small dense row-major system by Gaussian elimination
/// with partial pivoting. Throws RegularityError on a (numerically)
/// singular matrix.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b);

double max_abs(std::span<const double> values);

}  // namespace ctgeo
