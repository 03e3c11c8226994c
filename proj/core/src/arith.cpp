#include "ccsub/arith.hpp"

#include "ccsub/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace ccsub {

void require_hypothesis(const ArithParams &params) {
  if (params.b < 1 || params.c < 1) {
    throw InvalidArgument("progression needs b >= 1 and c >= 1");
  }
  if (!progression_hypothesis_holds(params.b, params.c)) {
    throw HypothesisViolation("progression b=" + std::to_string(params.b) + ", c=" + std::to_string(params.c) +
                              " violates (c+2)/2 <= b < c");
  }
}

Count predicted_period(const ArithParams &params) {
  require_hypothesis(params);
  return 2 * params.b + params.i_max * params.c;
}

Count predicted_period(Count b, Count c, Count i_max) { return predicted_period(ArithParams{b, c, i_max}); }

std::vector<ArithParams> hypothesis_grid(Count b_min, Count c_max, Count i_max_max) {
  std::vector<ArithParams> grid;
  for (Count c = 2; c <= c_max; ++c) {
    for (Count b = std::max<Count>(b_min, 1); b < c; ++b) {
      if (!progression_hypothesis_holds(b, c)) {
        continue;
      }
      for (Count i = 0; i <= i_max_max; ++i) {
        grid.push_back({b, c, i});
      }
    }
  }
  return grid;
}

std::string_view to_string(BlockPrediction prediction) noexcept {
  switch (prediction) {
  case BlockPrediction::Zero:
    return "zero";
  case BlockPrediction::One:
    return "one";
  case BlockPrediction::GreaterThanOne:
    return "greater_than_one";
  case BlockPrediction::Unspecified:
    return "unspecified";
  case BlockPrediction::Conflict:
    return "conflict";
  }
  return "?";
}

BlockPrediction classify_value(GrundyValue value) noexcept {
  if (value == 0) {
    return BlockPrediction::Zero;
  }
  return value == 1 ? BlockPrediction::One : BlockPrediction::GreaterThanOne;
}

std::string_view to_string(BlockClaimSource source) noexcept {
  switch (source) {
  case BlockClaimSource::ZeroPrefix:
    return "zero_prefix";
  case BlockClaimSource::OnePrefix:
    return "one_prefix";
  case BlockClaimSource::ZeroRun:
    return "zero_run";
  case BlockClaimSource::OneRun:
    return "one_run";
  case BlockClaimSource::LargeRun:
    return "large_run";
  }
  return "?";
}

namespace {

/// True iff offset == (start + j) mod p for some 0 <= j <= width (width < p).
bool in_wrapped_run(Count offset, Count start, Count width, Count p) {
  const Count distance = (offset + p - start % p) % p;
  return distance <= width;
}

bool any_run(const ArithParams &a, Count p, Count offset, Count lead, Count width) {
  for (Count i = 0; i <= a.i_max; ++i) {
    if (in_wrapped_run(offset, lead + i * a.c, width, p)) {
      return true;
    }
  }
  return false;
}

} // namespace

std::vector<BlockClaim> block_claims(const ArithParams &params, Count offset) {
  const Count p = predicted_period(params);
  if (offset >= p) {
    throw InvalidArgument("offset " + std::to_string(offset) + " outside block [0, " + std::to_string(p) + ")");
  }
  const Count b = params.b;
  const Count c = params.c;
  std::vector<BlockClaim> claims;
  if (offset < b) {
    claims.push_back({BlockClaimSource::ZeroPrefix, BlockPrediction::Zero});
  } else if (offset < 2 * b) {
    claims.push_back({BlockClaimSource::OnePrefix, BlockPrediction::One});
  }
  if (any_run(params, p, offset, 2 * b, c - b)) {
    claims.push_back({BlockClaimSource::ZeroRun, BlockPrediction::Zero});
  }
  if (any_run(params, p, offset, 3 * b, c - b)) {
    claims.push_back({BlockClaimSource::OneRun, BlockPrediction::One});
  }
  if (any_run(params, p, offset, 3 * b, 2 * b - c)) {
    claims.push_back({BlockClaimSource::LargeRun, BlockPrediction::GreaterThanOne});
  }
  return claims;
}

namespace {

BlockPrediction combine(const std::vector<BlockClaim> &claims) {
  if (claims.empty()) {
    return BlockPrediction::Unspecified;
  }
  const auto first = claims.front().value;
  const bool unanimous =
      std::all_of(claims.begin(), claims.end(), [first](const BlockClaim &c) { return c.value == first; });
  return unanimous ? first : BlockPrediction::Conflict;
}

bool asserted(BlockPrediction p) {
  return p == BlockPrediction::Zero || p == BlockPrediction::One || p == BlockPrediction::GreaterThanOne;
}

bool rows_agree_below(const GrundyTable &a, const GrundyTable &b, Count limit) {
  for (Side side : {Side::Base, Side::Complement}) {
    const auto ra = a.row(side);
    const auto rb = b.row(side);
    if (!std::equal(ra.begin(), ra.begin() + limit, rb.begin())) {
      return false;
    }
  }
  return true;
}

} // namespace

BlockPrediction predict_block_value(const ArithParams &params, Count offset) {
  return combine(block_claims(params, offset));
}

bool check_finite_infinite_agreement(const ArithParams &params, EngineLimits limits) {
  const Count p = predicted_period(params);
  const auto finite = build_table(RuleSet::finite_arithmetic(params.b, params.c, params.i_max), p - 1, limits);
  const auto infinite = build_table(RuleSet::infinite_arithmetic(params.b, params.c), p - 1, limits);
  return rows_agree_below(finite, infinite, p);
}

PeriodReport verify_arith(const ArithParams &params, Count n_max, const ArithOptions &options) {
  require_hypothesis(params);
  PeriodReport report;
  report.params = params;
  report.small_b = params.b < 5;
  if (report.small_b && !options.allow_small_b) {
    throw HypothesisViolation("b=" + std::to_string(params.b) + " < 5; the complement bounds assume b >= 5 "
                              "(pass the small-b override to run anyway)");
  }
  const Count p = predicted_period(params);
  report.predicted_period = p;
  report.n_max = n_max;
  if (n_max < 3 * p) {
    throw InvalidArgument("n_max=" + std::to_string(n_max) + " is below 3p=" + std::to_string(3 * p));
  }

  const auto rules = RuleSet::finite_arithmetic(params.b, params.c, params.i_max);
  const auto table = build_table(rules, n_max, options.limits);
  const auto base = table.row(Side::Base);
  const auto comp = table.row(Side::Complement);

  try {
    report.detected = detect_period(base, options.min_tail_multiple, 2 * p);
    report.detected_divides_predicted = p % report.detected->period == 0;
  } catch (const InsufficientData &) {
    report.detected.reset();
  }
  try {
    report.shortest_fit = detect_period(base, options.min_tail_multiple);
  } catch (const InsufficientData &) {
    report.shortest_fit.reset();
  }

  report.tail_periodic = is_period_on(base, p, 2 * p, n_max - p);
  report.periodic_from_p = is_period_on(base, p, p, n_max - p);

  report.complete_blocks = (n_max + 1) / p - 1;
  report.blocks.reserve(p);
  for (Count offset = 0; offset < p; ++offset) {
    BlockCheck check;
    check.offset = offset;
    check.claims = block_claims(params, offset);
    check.prediction = combine(check.claims);
    check.observed = classify_value(base[p + offset]);
    std::vector<bool> source_holds(check.claims.size(), true);
    for (Count l = 1; l <= report.complete_blocks; ++l) {
      const auto observed = classify_value(base[l * p + offset]);
      check.observed_consistent = check.observed_consistent && observed == check.observed;
      if (asserted(check.prediction) && observed != check.prediction) {
        ++check.mismatched_blocks;
      }
      for (std::size_t i = 0; i < check.claims.size(); ++i) {
        source_holds[i] = source_holds[i] && check.claims[i].value == observed;
      }
    }
    for (std::size_t i = 0; i < check.claims.size(); ++i) {
      if (source_holds[i]) {
        check.supported.push_back(check.claims[i].source);
      }
    }
    check.agrees = check.mismatched_blocks == 0;
    if (check.prediction == BlockPrediction::Conflict) {
      report.block_conflicts.push_back(offset);
    }
    if (!check.agrees) {
      ++report.block_mismatches;
    }
    report.blocks.push_back(std::move(check));
  }
  report.blocks_ok = report.block_mismatches == 0;

  const auto infinite = build_table(RuleSet::infinite_arithmetic(params.b, params.c), p - 1, options.limits);
  report.finite_infinite_agree = rows_agree_below(table, infinite, p);

  report.complement_at_least_two = true;
  for (Count n = 2; n <= n_max; ++n) {
    report.complement_at_least_two = report.complement_at_least_two && comp[n] >= 2;
    if (base[n] < 2) {
      if (!report.base_below_two.empty() && report.base_below_two.back().last + 1 == n) {
        report.base_below_two.back().last = n;
      } else {
        report.base_below_two.push_back({n, n});
      }
    }
  }
  report.complement_exceeds_twice_imax =
      std::all_of(comp.begin() + p, comp.end(), [&](GrundyValue v) { return v > 2 * params.i_max; });

  report.max_base_value = *std::max_element(base.begin(), base.end());
  report.option_bound_ok = report.max_base_value <= 2 * (params.i_max + 1);

  const bool lower_bounds = report.small_b || (report.complement_at_least_two && report.complement_exceeds_twice_imax);
  report.passed = report.detected.has_value() && report.detected_divides_predicted && report.tail_periodic &&
                  report.blocks_ok && report.finite_infinite_agree && report.option_bound_ok && lower_bounds;
  return report;
}

std::vector<PeriodReport> sweep_arith(std::span<const ArithParams> grid, Count tail_multiple,
                                      const ArithOptions &options, unsigned workers) {
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(grid.size(), 1)));
  std::vector<PeriodReport> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          try {
            results[i] = verify_arith(grid[i], tail_multiple * predicted_period(grid[i]), options);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto &error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  return results;
}

std::string to_json(const PeriodReport &report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["family"] = "arith";
  doc["b"] = report.params.b;
  doc["c"] = report.params.c;
  doc["i_max"] = report.params.i_max;
  doc["predicted_period"] = report.predicted_period;
  doc["detected_preperiod"] = report.detected ? ordered_json(report.detected->preperiod) : ordered_json(nullptr);
  doc["detected_period"] = report.detected ? ordered_json(report.detected->period) : ordered_json(nullptr);
  doc["n_max"] = report.n_max;
  doc["block_conflicts"] = report.block_conflicts;
  doc["lemma_3_1_ok"] = report.finite_infinite_agree;
  doc["lemma_3_2_ok"] = report.complement_at_least_two;
  doc["lemma_3_8_ok"] = report.complement_exceeds_twice_imax;
  doc["theorem_3_9_ok"] = report.tail_periodic;
  doc["passed"] = report.passed;

  auto mismatches = ordered_json::array();
  auto conflicts = ordered_json::array();
  for (const auto &block : report.blocks) {
    auto sources = ordered_json::array();
    for (const auto &claim : block.claims) {
      sources.push_back(std::string(to_string(claim.source)));
    }
    if (!block.agrees) {
      mismatches.push_back({{"offset", block.offset},
                            {"prediction", std::string(to_string(block.prediction))},
                            {"observed", std::string(to_string(block.observed))},
                            {"blocks", block.mismatched_blocks},
                            {"claims", sources}});
    }
    if (block.prediction == BlockPrediction::Conflict) {
      auto supported = ordered_json::array();
      for (auto source : block.supported) {
        supported.push_back(std::string(to_string(source)));
      }
      conflicts.push_back({{"offset", block.offset},
                           {"observed", std::string(to_string(block.observed))},
                           {"claims", sources},
                           {"supported", supported}});
    }
  }
  doc["block_mismatches"] = std::move(mismatches);
  doc["conflict_support"] = std::move(conflicts);
  doc["periodic_from_p"] = report.periodic_from_p;
  doc["detected_divides_predicted"] = report.detected_divides_predicted;
  if (report.shortest_fit) {
    doc["shortest_fit"] = {{"preperiod", report.shortest_fit->preperiod}, {"period", report.shortest_fit->period}};
  } else {
    doc["shortest_fit"] = nullptr;
  }
  auto below = ordered_json::array();
  for (const auto &range : report.base_below_two) {
    below.push_back({range.first, range.last});
  }
  doc["base_row_below_two"] = std::move(below);
  doc["max_base_value"] = report.max_base_value;
  doc["option_bound_ok"] = report.option_bound_ok;
  doc["small_b_informational"] = report.small_b;
  return doc.dump();
}

} // namespace ccsub
