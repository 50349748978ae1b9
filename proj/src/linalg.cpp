#include "grossgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grossgame/errors.hpp"

namespace grossgame {

double max_abs_diff(const Mat4<double>& a, const Mat4<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

Stationarity find_stationarity(const Mat4<double>& a,
                               const StationarityOptions& options) {
  if (!(options.epsilon > 0.0)) throw Error("stationarity epsilon must be > 0");
  Mat4<double> power = a;
  for (std::size_t k = 1; k <= options.max_power; ++k) {
    Mat4<double> next = mat_mul(power, a);
    if (max_abs_diff(power, next) < options.epsilon) return {k, power};
    power = next;
  }
  throw NotConverged("transition matrix not stationary within " +
                     std::to_string(options.max_power) + " steps");
}

}  // namespace grossgame
