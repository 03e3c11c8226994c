#pragma once

#include "ccsub/engine.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ccsub {

/// Which piece of the closed form applies to (k, n, side).
enum class ConsecutiveCase : std::uint8_t {
  BaseLow,           ///< Base, 0 <= n <= 2k: value n
  BasePeriodic,      ///< Base, n > 2k: (n+1) mod (k+1)
  ComplementZero,    ///< Complement, n < k: value 0
  ComplementLinear,  ///< Complement, k <= n <= 3k: value n-k
  ComplementGrowing, ///< Complement, n > 3k: 2k + ceil((n-3k)/(k+1))
};

inline constexpr std::size_t kConsecutiveCaseCount = 5;

std::string_view to_string(ConsecutiveCase c) noexcept;

ConsecutiveCase classify(Count k, Count n, Side side) noexcept;

/// Value of (n, {1..k}). Exact integer arithmetic.
GrundyValue closed_form_base(Count k, Count n);

/// Value of (n, Z+ \ {1..k}).
GrundyValue closed_form_complement(Count k, Count n);

GrundyValue closed_form(Count k, Position pos);

struct ConsecutiveMismatch {
  Count n;
  Side side;
  ConsecutiveCase piece;
  GrundyValue expected; ///< closed form
  GrundyValue actual;   ///< engine
};

struct ConsecutiveReport {
  Count k = 0;
  Count n_max = 0;
  std::size_t comparisons = 0;
  std::vector<ConsecutiveMismatch> mismatches;
  std::array<std::size_t, kConsecutiveCaseCount> mismatches_per_case{};
  /// Complement row nondecreasing from n = k+1 on.
  bool monotonicity_ok = true;
  std::vector<Count> monotonicity_violations; ///< n with G(n+1) < G(n)
  bool passed = false;
};

/// Engine table vs closed form at every (n, side), n <= n_max.
ConsecutiveReport verify_consecutive(Count k, Count n_max, EngineLimits limits = {});

/// Same comparison against an existing table (must be a Consecutive ruleset).
ConsecutiveReport verify_consecutive(const GrundyTable &table);

/// `{ "family":"consecutive", "k", "n_max", "passed", "mismatches":[...], "monotonicity_ok" }`
std::string to_json(const ConsecutiveReport &report);

} // namespace ccsub
