#pragma once

#include "ccsub/engine.hpp"

#include <optional>
#include <span>

namespace ccsub {

struct PeriodFit {
  Count preperiod = 0;
  Count period = 1;
  friend bool operator==(const PeriodFit &, const PeriodFit &) = default;
};

/// Smallest period q, then the smallest preperiod for that q, such that
/// values[n+q] == values[n] for every preperiod <= n < size-q, accepted only
/// when the periodic tail spans at least min_tail_multiple periods
/// (size-1-preperiod >= min_tail_multiple*q).
///
/// With max_preperiod set, fits starting later than that are skipped; short
/// windows near the end of a row can otherwise repeat three times by
/// coincidence.
///
/// Throws InvalidArgument for fewer than 4 values or min_tail_multiple == 0,
/// InsufficientData when no q meets the threshold.
PeriodFit detect_period(std::span<const GrundyValue> values, Count min_tail_multiple = 3,
                        std::optional<Count> max_preperiod = std::nullopt);

/// True iff values[n+period] == values[n] for all from <= n <= to (to is
/// clamped to size-1-period).
bool is_period_on(std::span<const GrundyValue> values, Count period, Count from, Count to);

} // namespace ccsub
