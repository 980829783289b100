#include "gabor/sampled_function.hpp"

#include <algorithm>
#include <cmath>

namespace gabor {

UniformGrid UniformGrid::symmetric(double half_width, double max_step) {
  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / max_step - 1e-9));
  UniformGrid grid;
  grid.step = 2.0 * half_width / static_cast<double>(intervals);
  grid.start = -half_width;
  grid.size = intervals + 1;
  return grid;
}

Complex SampledFunction::at(double t) const {
  if (grid.size == 0) return {};
  const double pos = (t - grid.start) / grid.step;
  const double last = static_cast<double>(grid.size - 1);
  if (pos < -1e-9 || pos > last + 1e-9) return {};
  const double clamped = std::clamp(pos, 0.0, last);
  auto i = static_cast<std::size_t>(std::floor(clamped));
  if (i >= grid.size - 1) return values.back();
  const double frac = clamped - static_cast<double>(i);
  return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

double SampledFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double SampledFunction::l2_norm() const {
  if (values.empty()) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = (i == 0 || i + 1 == values.size()) ? 0.5 : 1.0;
    s += w * std::norm(values[i]);
  }
  return std::sqrt(s * grid.step);
}

bool SampledFunction::symmetric() const {
  return grid.size > 1 && std::abs(grid.start + grid.end()) <= 1e-9 * std::abs(grid.start);
}

}  // namespace gabor
