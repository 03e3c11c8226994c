#include "ccsub/engine.hpp"

#include "ccsub/errors.hpp"

#include <string>

namespace ccsub {

GrundyValue mex(std::span<const GrundyValue> values) {
  // Only values < size can matter.
  std::vector<bool> seen(values.size() + 1, false);
  for (GrundyValue v : values) {
    if (v < seen.size()) {
      seen[v] = true;
    }
  }
  GrundyValue result = 0;
  while (seen[result]) {
    ++result;
  }
  return result;
}

GrundyTable::GrundyTable(RuleSet rules, std::vector<GrundyValue> base, std::vector<GrundyValue> complement)
    : rules_(std::move(rules)), base_(std::move(base)), complement_(std::move(complement)) {
  if (base_.empty() || base_.size() != complement_.size()) {
    throw InvalidArgument("grundy table rows must be nonempty and of equal length");
  }
}

GrundyValue GrundyTable::at(Position pos) const {
  if (pos.n > n_max()) {
    throw InvalidArgument("position n=" + std::to_string(pos.n) + " beyond table n_max=" + std::to_string(n_max()));
  }
  return row(pos.side)[pos.n];
}

namespace {

/// Presence array sized |options|+1, reused across states.
class MexScratch {
public:
  template <typename Marker> GrundyValue run(std::size_t option_count, Marker &&mark_all) {
    present_.assign(option_count + 1, 0);
    mark_all([this](GrundyValue v) {
      if (v < present_.size()) {
        present_[v] = 1;
      }
    });
    GrundyValue result = 0;
    while (present_[result]) {
      ++result;
    }
    return result;
  }

private:
  std::vector<std::uint8_t> present_;
};

} // namespace

GrundyTable build_table(const RuleSet &rules, Count n_max, EngineLimits limits) {
  if (n_max > limits.state_ceiling) {
    throw ResourceLimit("n_max=" + std::to_string(n_max) + " exceeds state ceiling " +
                        std::to_string(limits.state_ceiling));
  }
  std::vector<GrundyValue> base(n_max + 1, 0);
  std::vector<GrundyValue> complement(n_max + 1, 0);
  std::vector<Count> moves;
  MexScratch scratch;

  for (Count n = 1; n <= n_max; ++n) {
    for (Side side : {Side::Base, Side::Complement}) {
      moves.clear();
      for_each_move(rules, Position{n, side}, [&moves](Count s) { moves.push_back(s); });
      const GrundyValue value = scratch.run(2 * moves.size(), [&](auto mark) {
        for (Count s : moves) {
          mark(base[n - s]);
          mark(complement[n - s]);
        }
      });
      (side == Side::Base ? base : complement)[n] = value;
    }
  }
  return GrundyTable(rules, std::move(base), std::move(complement));
}

GrundyValue grundy(const RuleSet &rules, Position pos, EngineLimits limits) {
  return build_table(rules, pos.n, limits).at(pos);
}

std::vector<Move> winning_moves(const GrundyTable &table, Position pos) {
  if (pos.n > table.n_max()) {
    throw InvalidArgument("position n=" + std::to_string(pos.n) + " beyond table n_max=" +
                          std::to_string(table.n_max()));
  }
  std::vector<Move> result;
  for_each_move(table.rules(), pos, [&](Count s) {
    for (Side next : {Side::Base, Side::Complement}) {
      if (table.at({pos.n - s, next}) == 0) {
        result.push_back({s, next});
      }
    }
  });
  return result;
}

std::vector<Move> winning_moves(const RuleSet &rules, Position pos, EngineLimits limits) {
  return winning_moves(build_table(rules, pos.n, limits), pos);
}

} // namespace ccsub
