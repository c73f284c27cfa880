#pragma once

#include <cstdint>
#include <vector>

#include "ctgeo/chart.hpp"

namespace ctgeo {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Seeded sampling boxes for chart points. Fiber draws rejecting the
/// neighbourhood of the null section (|p| < p_min_norm) are redrawn.
struct SamplingConfig {
  std::vector<Interval> x_box;  // per base coordinate; default [-1, 1]
  std::vector<Interval> p_box;  // per fiber coordinate; default [-2, 2]
  double p_min_norm = 0.1;
  std::uint64_t seed = 42;
  int count = 100;
};

/// Name of the generator algorithm, recorded in reports for reproducibility.
inline constexpr const char* kSamplerAlgorithm = "mt19937_64";

/// Draw `config.count` points. `fiber_abs_min > 0` additionally rejects
/// fibers with any |p_i| below the floor (used by the fiber-inversion
/// pipeline to stay inside the iteration basin).
std::vector<ChartPoint> sample_chart_points(const ChartPtr& chart, const SamplingConfig& config,
                                            double fiber_abs_min = 0.0);

}  // namespace ctgeo
