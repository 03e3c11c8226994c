#include "ccsub/consecutive.hpp"

#include "ccsub/errors.hpp"

#include <json.hpp>

namespace ccsub {

namespace {

void require_k(Count k) {
  if (k < 1) {
    throw InvalidArgument("k must be >= 1");
  }
}

Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

} // namespace

std::string_view to_string(ConsecutiveCase c) noexcept {
  switch (c) {
  case ConsecutiveCase::BaseLow:
    return "A_low";
  case ConsecutiveCase::BasePeriodic:
    return "A_periodic";
  case ConsecutiveCase::ComplementZero:
    return "B_zero";
  case ConsecutiveCase::ComplementLinear:
    return "B_linear";
  case ConsecutiveCase::ComplementGrowing:
    return "B_log";
  }
  return "?";
}

ConsecutiveCase classify(Count k, Count n, Side side) noexcept {
  if (side == Side::Base) {
    return n <= 2 * k ? ConsecutiveCase::BaseLow : ConsecutiveCase::BasePeriodic;
  }
  if (n < k) {
    return ConsecutiveCase::ComplementZero;
  }
  return n <= 3 * k ? ConsecutiveCase::ComplementLinear : ConsecutiveCase::ComplementGrowing;
}

GrundyValue closed_form_base(Count k, Count n) {
  require_k(k);
  if (n <= 2 * k) {
    return static_cast<GrundyValue>(n);
  }
  return static_cast<GrundyValue>((n + 1) % (k + 1));
}

GrundyValue closed_form_complement(Count k, Count n) {
  require_k(k);
  if (n < k) {
    return 0;
  }
  if (n <= 3 * k) {
    return static_cast<GrundyValue>(n - k);
  }
  return static_cast<GrundyValue>(2 * k + ceil_div(n - 3 * k, k + 1));
}

GrundyValue closed_form(Count k, Position pos) {
  return pos.side == Side::Base ? closed_form_base(k, pos.n) : closed_form_complement(k, pos.n);
}

ConsecutiveReport verify_consecutive(Count k, Count n_max, EngineLimits limits) {
  return verify_consecutive(build_table(RuleSet::consecutive(k), n_max, limits));
}

ConsecutiveReport verify_consecutive(const GrundyTable &table) {
  const auto *cons = table.rules().get_if<Consecutive>();
  if (cons == nullptr) {
    throw InvalidArgument("verify_consecutive needs a k=K ruleset, got " + table.rules().to_string());
  }
  ConsecutiveReport report;
  report.k = cons->k;
  report.n_max = table.n_max();
  for (Count n = 0; n <= report.n_max; ++n) {
    for (Side side : {Side::Base, Side::Complement}) {
      const GrundyValue expected = closed_form(report.k, {n, side});
      const GrundyValue actual = table.at({n, side});
      ++report.comparisons;
      if (expected != actual) {
        const auto piece = classify(report.k, n, side);
        report.mismatches.push_back({n, side, piece, expected, actual});
        ++report.mismatches_per_case[static_cast<std::size_t>(piece)];
      }
    }
  }
  const auto comp = table.row(Side::Complement);
  for (Count n = report.k + 1; n + 1 <= report.n_max; ++n) {
    if (comp[n + 1] < comp[n]) {
      report.monotonicity_violations.push_back(n);
    }
  }
  report.monotonicity_ok = report.monotonicity_violations.empty();
  report.passed = report.mismatches.empty() && report.monotonicity_ok;
  return report;
}

std::string to_json(const ConsecutiveReport &report) {
  nlohmann::ordered_json doc;
  doc["family"] = "consecutive";
  doc["k"] = report.k;
  doc["n_max"] = report.n_max;
  doc["passed"] = report.passed;
  auto mismatches = nlohmann::ordered_json::array();
  for (const auto &m : report.mismatches) {
    mismatches.push_back({{"n", m.n},
                          {"side", std::string(to_string(m.side))},
                          {"case", std::string(to_string(m.piece))},
                          {"expected", m.expected},
                          {"actual", m.actual}});
  }
  doc["mismatches"] = std::move(mismatches);
  doc["monotonicity_ok"] = report.monotonicity_ok;
  return doc.dump();
}

} // namespace ccsub
