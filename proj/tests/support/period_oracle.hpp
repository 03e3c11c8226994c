#pragma once

// Literal transcription of the (preperiod, period) definition: try every q,
// then every preperiod, checking every index. Cubic; for small inputs only.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ccsub::testing {

inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
brute_force_period(const std::vector<std::uint32_t> &values, std::uint64_t min_tail_multiple) {
  const std::uint64_t len = values.size();
  for (std::uint64_t q = 1; q < len; ++q) {
    for (std::uint64_t rho = 0; rho < len; ++rho) {
      bool holds = true;
      for (std::uint64_t n = rho; n + q < len; ++n) {
        if (values[n + q] != values[n]) {
          holds = false;
          break;
        }
      }
      if (holds) {
        if (len - 1 - rho >= min_tail_multiple * q) {
          return std::make_pair(rho, q);
        }
        break; // smallest rho for this q fails the threshold; larger rho only worse
      }
    }
  }
  return std::nullopt;
}

/// True iff some suffix of word^reps has a period q' < word.size() spanning
/// at least min_tail_multiple*q' + 1 values, i.e. the sequence tail could be
/// explained by a shorter period within the evidence window.
inline bool has_short_tail_period(const std::vector<std::uint32_t> &word, std::uint64_t min_tail_multiple) {
  const std::uint64_t q = word.size();
  std::vector<std::uint32_t> tail;
  for (int r = 0; r < 3; ++r) {
    tail.insert(tail.end(), word.begin(), word.end());
  }
  const std::uint64_t len = tail.size();
  for (std::uint64_t shorter = 1; shorter < q; ++shorter) {
    std::uint64_t span = shorter; // suffix [len-span, len) has period `shorter`
    while (span < len && tail[len - 1 - span] == tail[len - 1 - span + shorter]) {
      ++span;
    }
    if (span >= min_tail_multiple * shorter + 1) {
      return true;
    }
  }
  return false;
}

} // namespace ccsub::testing
