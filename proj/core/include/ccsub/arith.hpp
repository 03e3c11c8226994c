#pragma once

#include "ccsub/engine.hpp"
#include "ccsub/period.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccsub {

/// S = {b + i*c : 0 <= i <= i_max}.
struct ArithParams {
  Count b = 0;
  Count c = 0;
  Count i_max = 0;
  friend bool operator==(const ArithParams &, const ArithParams &) = default;
};

/// Throws HypothesisViolation unless (c+2)/2 <= b < c.
void require_hypothesis(const ArithParams &params);

/// p = 2b + i_max*c. Requires the hypothesis.
Count predicted_period(Count b, Count c, Count i_max);
Count predicted_period(const ArithParams &params);

/// Every hypothesis-satisfying triple with b_min <= b < c <= c_max and
/// i_max <= i_max_max, ordered by (c, b, i_max).
std::vector<ArithParams> hypothesis_grid(Count b_min, Count c_max, Count i_max_max);

/// Value class predicted for an offset within one period block (Base row).
enum class BlockPrediction : std::uint8_t { Zero, One, GreaterThanOne, Unspecified, Conflict };

std::string_view to_string(BlockPrediction prediction) noexcept;

/// Observed value class: Zero, One or GreaterThanOne.
BlockPrediction classify_value(GrundyValue value) noexcept;

/// The five families of offset claims a block carries. Offsets are relative
/// to the block start lp and reduced mod p.
enum class BlockClaimSource : std::uint8_t {
  ZeroPrefix, ///< [0, b): 0
  OnePrefix,  ///< [b, 2b): 1
  ZeroRun,    ///< 2b + i'c + j, 0 <= j <= c-b: 0
  OneRun,     ///< 3b + i'c + j, 0 <= j <= c-b: 1
  LargeRun,   ///< 3b + i'c + j, 0 <= j <= 2b-c: > 1
};

std::string_view to_string(BlockClaimSource source) noexcept;

struct BlockClaim {
  BlockClaimSource source;
  BlockPrediction value; ///< Zero, One or GreaterThanOne
};

/// Every claim covering offset (deduplicated by source).
std::vector<BlockClaim> block_claims(const ArithParams &params, Count offset);

/// Single class if all claims agree, Conflict if they disagree, Unspecified
/// if none apply. Requires the hypothesis and offset < p.
BlockPrediction predict_block_value(const ArithParams &params, Count offset);

/// Finite and infinite progressions give identical values
/// for all n < p on both sides.
bool check_finite_infinite_agreement(const ArithParams &params, EngineLimits limits = {});

struct BlockCheck {
  Count offset = 0;
  BlockPrediction prediction = BlockPrediction::Unspecified;
  std::vector<BlockClaim> claims;
  BlockPrediction observed = BlockPrediction::Unspecified; ///< class in block l = 1
  bool observed_consistent = true; ///< same class in every complete block l >= 1
  std::size_t mismatched_blocks = 0; ///< blocks contradicting an asserted prediction
  bool agrees = true;                ///< vacuously true for Conflict/Unspecified
  std::vector<BlockClaimSource> supported; ///< claims the data confirms in every block
};

struct CountRange {
  Count first = 0;
  Count last = 0;
  friend bool operator==(const CountRange &, const CountRange &) = default;
};

struct ArithOptions {
  bool allow_small_b = false;
  Count min_tail_multiple = 3;
  EngineLimits limits{};
};

struct PeriodReport {
  ArithParams params;
  Count predicted_period = 0;
  Count n_max = 0;
  /// Fit anchored at preperiod <= 2p; empty when detection lacked evidence.
  std::optional<PeriodFit> detected;
  /// Unanchored fit over the whole row, informational.
  std::optional<PeriodFit> shortest_fit;
  bool detected_divides_predicted = false;

  /// G(n+p) == G(n) on the Base row for 2p <= n <= n_max - p.
  bool tail_periodic = false;
  /// Same from n = p on; informational.
  bool periodic_from_p = false;

  std::vector<BlockCheck> blocks; ///< one per offset in [0, p)
  std::vector<Count> block_conflicts;
  std::size_t block_mismatches = 0; ///< asserted offsets contradicted somewhere
  std::size_t complete_blocks = 0;  ///< blocks l >= 1 fully inside the table
  bool blocks_ok = false;

  bool finite_infinite_agree = false;

  /// Complement row >= 2 for 2 <= n <= n_max.
  bool complement_at_least_two = false;
  /// Where the Base row is < 2 for n >= 2 (the S-side reading of that bound).
  std::vector<CountRange> base_below_two;
  /// Complement row > 2*i_max for p <= n <= n_max.
  bool complement_exceeds_twice_imax = false;

  GrundyValue max_base_value = 0;
  /// max_base_value <= 2*(i_max+1), the option-count bound.
  bool option_bound_ok = false;

  /// b < 5: complement lower bounds reported but excluded from passed.
  bool small_b = false;
  bool passed = false;
};

/// Builds the table to n_max and runs every progression check.
/// Throws HypothesisViolation (hypothesis fails, or b < 5 without
/// allow_small_b), InvalidArgument when n_max < 3p, ResourceLimit.
PeriodReport verify_arith(const ArithParams &params, Count n_max, const ArithOptions &options = {});

/// verify_arith over a grid with n_max = tail_multiple * p each, fanned out
/// over `workers` threads. Results are in grid order.
std::vector<PeriodReport> sweep_arith(std::span<const ArithParams> grid, Count tail_multiple,
                                      const ArithOptions &options = {}, unsigned workers = 0);

/// `{ "family":"arith", "b", "c", "i_max", "predicted_period", ... , "passed" }`
std::string to_json(const PeriodReport &report);

} // namespace ccsub
