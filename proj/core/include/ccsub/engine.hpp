#pragma once

#include "ccsub/game.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ccsub {

/// Nim-value. Bounded by the option count, so 32 bits cover any feasible table.
using GrundyValue = std::uint32_t;

struct EngineLimits {
  /// Largest heap size a table may be built to, per side.
  Count state_ceiling = 10'000'000;
};

/// Smallest nonnegative integer absent from values.
GrundyValue mex(std::span<const GrundyValue> values);

/// Grundy values for both sides of every heap size 0..n_max.
class GrundyTable {
public:
  GrundyTable(RuleSet rules, std::vector<GrundyValue> base, std::vector<GrundyValue> complement);

  const RuleSet &rules() const noexcept { return rules_; }
  Count n_max() const noexcept { return base_.size() - 1; }

  GrundyValue at(Position pos) const;
  std::span<const GrundyValue> row(Side side) const noexcept {
    return side == Side::Base ? std::span<const GrundyValue>(base_) : std::span<const GrundyValue>(complement_);
  }

  friend bool operator==(const GrundyTable &, const GrundyTable &) = default;

private:
  RuleSet rules_;
  std::vector<GrundyValue> base_;
  std::vector<GrundyValue> complement_;
};

/// Bottom-up mex DP, n ascending, both sides per n.
/// Throws ResourceLimit when n_max exceeds limits.state_ceiling.
GrundyTable build_table(const RuleSet &rules, Count n_max, EngineLimits limits = {});

/// One-shot value; builds the table up to pos.n.
GrundyValue grundy(const RuleSet &rules, Position pos, EngineLimits limits = {});

/// A move: take `take` stones and leave the opponent constrained to `opponent_side`.
struct Move {
  Count take = 0;
  Side opponent_side = Side::Base;
  friend bool operator==(const Move &, const Move &) = default;
};

/// Moves whose resulting position has value 0, ascending by take, Base before
/// Complement. The table must cover pos.n.
std::vector<Move> winning_moves(const GrundyTable &table, Position pos);
std::vector<Move> winning_moves(const RuleSet &rules, Position pos, EngineLimits limits = {});

} // namespace ccsub
