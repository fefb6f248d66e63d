#pragma once

// Tie-corrected Kendall rank correlation (tau-b) and correlation matrices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "verbprof/kernels/pair_counts.hpp"

namespace verbprof::stats {

using kernels::PairCounts;

/// Classifies all index pairs. Throws std::invalid_argument on length
/// mismatch, fewer than two samples, or NaN.
PairCounts pair_counts(std::span<const double> xs, std::span<const double> ys);

/// Sum of t(t-1)/2 over groups of equal values.
std::int64_t tied_pairs(std::span<const double> values);

/// tau_b = (C - D) / sqrt((n0 - n1)(n0 - n2)). Undefined (nullopt) when
/// either vector is constant. Same preconditions as pair_counts.
std::optional<double> tau_b(std::span<const double> xs, std::span<const double> ys);

struct ObservationTable {
  std::vector<std::string> row_ids;
  std::map<std::string, std::vector<double>> columns;

  /// Appends a column; throws std::invalid_argument if its length differs
  /// from row_ids or it holds a negative value.
  void add_column(std::string name, std::vector<double> values);
};

struct CorrelationMatrix {
  std::vector<std::string> categories;
  // values[i] holds tau for (categories[i], categories[j]) for j < i.
  std::vector<std::vector<std::optional<double>>> values;

  std::size_t entry_count() const;
  std::optional<double> at(std::size_t i, std::size_t j) const;
};

/// Lower-triangular tau_b over the given categories, in the given order.
/// Throws std::invalid_argument for unknown categories or fewer than two rows.
CorrelationMatrix correlation_matrix(const ObservationTable& table, std::span<const std::string> categories);

}  // namespace verbprof::stats
