#include "ccsub/period.hpp"

#include "ccsub/errors.hpp"

#include <string>

namespace ccsub {

PeriodFit detect_period(std::span<const GrundyValue> values, Count min_tail_multiple,
                        std::optional<Count> max_preperiod) {
  if (values.size() < 4) {
    throw InvalidArgument("period detection needs at least 4 values, got " + std::to_string(values.size()));
  }
  if (min_tail_multiple == 0) {
    throw InvalidArgument("min_tail_multiple must be >= 1");
  }
  const Count last = values.size() - 1;
  for (Count q = 1; min_tail_multiple * q <= last; ++q) {
    // Walk back from the end while the shift-by-q match holds.
    Count start = last - q + 1;
    while (start > 0 && values[start - 1 + q] == values[start - 1]) {
      --start;
    }
    if (last - start >= min_tail_multiple * q && (!max_preperiod || start <= *max_preperiod)) {
      return {start, q};
    }
  }
  std::string message = "no period with a tail of at least " + std::to_string(min_tail_multiple) +
                        " repetitions in " + std::to_string(values.size()) + " values";
  if (max_preperiod) {
    message += " starting by n=" + std::to_string(*max_preperiod);
  }
  throw InsufficientData(message);
}

bool is_period_on(std::span<const GrundyValue> values, Count period, Count from, Count to) {
  if (period >= values.size()) {
    return true;
  }
  const Count limit = values.size() - 1 - period;
  for (Count n = from; n <= to && n <= limit; ++n) {
    if (values[n + period] != values[n]) {
      return false;
    }
  }
  return true;
}

} // namespace ccsub
