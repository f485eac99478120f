#include "rrfair/fairness.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rrfair {

Rational delta_t(std::span<const Venue> row) {
  const int len = static_cast<int>(row.size());
  if (len < 2) {
    throw std::invalid_argument("ranked venue row needs at least 2 entries, got " +
                                std::to_string(len));
  }
  // prefix[k] = home games among the first k entries
  std::vector<std::int64_t> prefix(len + 1, 0);
  for (int k = 0; k < len; ++k) prefix[k + 1] = prefix[k] + (row[k] == Venue::home ? 1 : 0);

  // Work in halves: |2H - w| summed, divided by 2 at the end.
  std::int64_t twice = 0;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const std::int64_t home = prefix[j + 1] - prefix[i];
      const std::int64_t width = j - i + 1;
      const std::int64_t dev = 2 * home - width;
      twice += dev < 0 ? -dev : dev;
    }
  }
  return Rational(twice, 2);
}

Rational f_t(std::span<const Venue> row) {
  const Rational delta = delta_t(row);
  const std::int64_t m = static_cast<std::int64_t>(row.size()) + 1;
  const Rational baseline((m - 2) * (m - 2), 8);
  const Rational scale(m * (m - 1) * (m - 2), 24);
  return (delta - baseline) / scale;
}

FairnessReport fairness_report(const RankedVenueMatrix& matrix) {
  FairnessReport report;
  Rational total;
  for (int t = 1; t <= matrix.teams(); ++t) {
    const auto row = matrix.row(t);
    TeamFairness tf{t, delta_t(row), f_t(row)};
    total += tf.f;
    report.per_team.push_back(tf);
  }
  report.aggregate = total / Rational(matrix.teams());
  return report;
}

FairnessReport fairness_report(const Schedule& schedule) {
  return fairness_report(ranked_venue_matrix(schedule));
}

}  // namespace rrfair
