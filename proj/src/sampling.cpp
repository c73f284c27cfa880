#include "ctgeo/sampling.hpp"

#include <cmath>
#include <random>

namespace ctgeo {

std::vector<ChartPoint> sample_chart_points(const ChartPtr& chart, const SamplingConfig& config,
                                            double fiber_abs_min) {
  const int n = chart->dimension();
  std::vector<Interval> x_box = config.x_box;
  std::vector<Interval> p_box = config.p_box;
  if (x_box.empty()) x_box.assign(static_cast<std::size_t>(n), Interval{-1.0, 1.0});
  if (p_box.empty()) p_box.assign(static_cast<std::size_t>(n), Interval{-2.0, 2.0});
  if (static_cast<int>(x_box.size()) != n || static_cast<int>(p_box.size()) != n)
    throw Error("sampling boxes must have one interval per coordinate");

  std::mt19937_64 rng(config.seed);
  auto draw = [&rng](const Interval& box) {
    std::uniform_real_distribution<double> dist(box.lo, box.hi);
    return dist(rng);
  };

  std::vector<ChartPoint> out;
  out.reserve(static_cast<std::size_t>(config.count));
  constexpr int max_rejections = 100000;
  int rejections = 0;
  while (static_cast<int>(out.size()) < config.count) {
    std::vector<double> values(static_cast<std::size_t>(2 * n), 0.0);
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = draw(x_box[static_cast<std::size_t>(i)]);
    double norm2 = 0.0;
    bool fiber_ok = true;
    for (int i = 0; i < n; ++i) {
      const double p = draw(p_box[static_cast<std::size_t>(i)]);
      values[static_cast<std::size_t>(n + i)] = p;
      norm2 += p * p;
      if (std::abs(p) < fiber_abs_min) fiber_ok = false;
    }
    if (!fiber_ok || std::sqrt(norm2) < config.p_min_norm) {
      if (++rejections > max_rejections)
        throw Error("sampling rejection budget exhausted; fiber box too tight");
      continue;
    }
    out.push_back(make_point(chart, std::move(values)));
  }
  return out;
}

}  // namespace ctgeo
