#include "verbprof/kernels/pair_counts.hpp"

#include <cstdlib>
#include <stdexcept>

namespace verbprof::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(VERBPROF_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (std::getenv("VERBPROF_FORCE_SCALAR") != nullptr) return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

PairCounts pair_counts(Isa isa, std::span<const double> xs, std::span<const double> ys) {
  if (!isa_available(isa)) throw std::invalid_argument("kernel variant '" + std::string(to_string(isa)) + "' unavailable");
  switch (isa) {
    case Isa::Scalar:
      return pair_counts_scalar(xs, ys);
    case Isa::Avx2:
#ifdef VERBPROF_BUILD_AVX2
      return pair_counts_avx2(xs, ys);
#else
      break;
#endif
  }
  return pair_counts_scalar(xs, ys);
}

}  // namespace verbprof::kernels
