#pragma once

#include "ccsub/engine.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ccsub {

/// Header `n,G_base,G_complement`, one row per n, LF endings.
void write_csv(std::ostream &out, const GrundyTable &table);
std::string to_csv(const GrundyTable &table);

/// Rows must be n = 0, 1, 2, ... in order. Throws InvalidArgument with the
/// offending line number otherwise.
GrundyTable parse_csv(const RuleSet &rules, std::string_view text);

/// `{ "ruleset", "n_max", "base", "complement" }`, plus `predicted_period`
/// when given.
std::string to_json(const GrundyTable &table, std::optional<Count> predicted_period = std::nullopt);

} // namespace ccsub
