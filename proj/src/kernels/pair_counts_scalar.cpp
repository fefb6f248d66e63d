#include "verbprof/kernels/pair_counts.hpp"

namespace verbprof::kernels {

PairCounts pair_counts_scalar(std::span<const double> xs, std::span<const double> ys) {
  PairCounts c;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = xs[i];
    const double yi = ys[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = (xi > xs[j]) - (xi < xs[j]);
      const int sy = (yi > ys[j]) - (yi < ys[j]);
      if (sx == 0 && sy == 0) {
        ++c.joint_ties;
      } else if (sx == 0) {
        ++c.x_ties;
      } else if (sy == 0) {
        ++c.y_ties;
      } else if (sx == sy) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  }
  return c;
}

}  // namespace verbprof::kernels
