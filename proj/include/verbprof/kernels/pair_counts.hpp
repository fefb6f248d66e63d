#pragma once

// Pair-classification kernels for rank correlation.
//
// Each kernel walks all n(n-1)/2 index pairs (i < j) of two equally long
// sample vectors and sorts every pair into exactly one bucket:
//
//   concordant   (xi - xj)(yi - yj) > 0
//   discordant   (xi - xj)(yi - yj) < 0
//   x_ties       xi == xj, yi != yj
//   y_ties       yi == yj, xi != xj
//   joint_ties   xi == xj, yi == yj
//
// The scalar kernel is the reference; vector variants must agree with it
// exactly on every input. Inputs must be free of NaN.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace verbprof::kernels {

struct PairCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t x_ties = 0;
  std::int64_t y_ties = 0;
  std::int64_t joint_ties = 0;

  std::int64_t total() const { return concordant + discordant + x_ties + y_ties + joint_ties; }
  bool operator==(const PairCounts&) const = default;
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

PairCounts pair_counts_scalar(std::span<const double> xs, std::span<const double> ys);

// Defined only in AVX2-enabled builds; call through pair_counts(Isa, ...).
PairCounts pair_counts_avx2(std::span<const double> xs, std::span<const double> ys);

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// The widest available variant. Setting VERBPROF_FORCE_SCALAR in the
/// environment pins the scalar kernel.
Isa best_isa();

/// Runs the requested variant; throws std::invalid_argument if it is not
/// available here.
PairCounts pair_counts(Isa isa, std::span<const double> xs, std::span<const double> ys);

inline PairCounts pair_counts(std::span<const double> xs, std::span<const double> ys) {
  return pair_counts(best_isa(), xs, ys);
}

}  // namespace verbprof::kernels
