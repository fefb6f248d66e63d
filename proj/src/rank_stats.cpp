#include "verbprof/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace verbprof::stats {

namespace {

void check_samples(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("sample vectors differ in length (" + std::to_string(xs.size()) + " vs " +
                                std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 2) throw std::invalid_argument("at least two samples are required");
  auto has_nan = [](std::span<const double> v) { return std::any_of(v.begin(), v.end(), [](double d) { return std::isnan(d); }); };
  if (has_nan(xs) || has_nan(ys)) throw std::invalid_argument("samples must not contain NaN");
}

}  // namespace

PairCounts pair_counts(std::span<const double> xs, std::span<const double> ys) {
  check_samples(xs, ys);
  return kernels::pair_counts(xs, ys);
}

std::int64_t tied_pairs(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto t = static_cast<std::int64_t>(j - i);
    total += t * (t - 1) / 2;
    i = j;
  }
  return total;
}

std::optional<double> tau_b(std::span<const double> xs, std::span<const double> ys) {
  const PairCounts c = pair_counts(xs, ys);
  const auto n = static_cast<std::int64_t>(xs.size());
  const std::int64_t n0 = n * (n - 1) / 2;
  const std::int64_t n1 = tied_pairs(xs);
  const std::int64_t n2 = tied_pairs(ys);
  if (n1 == n0 || n2 == n0) return std::nullopt;
  const double denom = std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2));
  const double tau = static_cast<double>(c.concordant - c.discordant) / denom;
  return std::clamp(tau, -1.0, 1.0);
}

void ObservationTable::add_column(std::string name, std::vector<double> values) {
  if (values.size() != row_ids.size()) {
    throw std::invalid_argument("column '" + name + "' has " + std::to_string(values.size()) + " values for " +
                                std::to_string(row_ids.size()) + " rows");
  }
  if (std::any_of(values.begin(), values.end(), [](double v) { return !(v >= 0.0); })) {
    throw std::invalid_argument("column '" + name + "' holds a negative or NaN value");
  }
  columns[std::move(name)] = std::move(values);
}

std::size_t CorrelationMatrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& row : values) n += row.size();
  return n;
}

std::optional<double> CorrelationMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) throw std::out_of_range("diagonal is not stored");
  if (i < j) std::swap(i, j);
  return values.at(i).at(j);
}

CorrelationMatrix correlation_matrix(const ObservationTable& table, std::span<const std::string> categories) {
  if (table.row_ids.size() < 2) throw std::invalid_argument("at least two rows are required");
  std::vector<const std::vector<double>*> cols;
  for (const auto& name : categories) {
    auto it = table.columns.find(name);
    if (it == table.columns.end()) throw std::invalid_argument("unknown category '" + name + "'");
    cols.push_back(&it->second);
  }
  CorrelationMatrix m;
  m.categories.assign(categories.begin(), categories.end());
  m.values.resize(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) m.values[i].push_back(tau_b(*cols[i], *cols[j]));
  }
  return m;
}

}  // namespace verbprof::stats
