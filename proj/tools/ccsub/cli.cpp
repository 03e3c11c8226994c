#include "ccsub/cli.hpp"

#include "ccsub/arith.hpp"
#include "ccsub/consecutive.hpp"
#include "ccsub/errors.hpp"
#include "ccsub/period.hpp"
#include "ccsub/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ccsub::cli {

namespace {

Count parse_count(const std::string &text, std::string_view flag) {
  Count value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string(flag) + ": '" + text + "' is not a nonnegative integer");
  }
  return value;
}

Format parse_format(const std::string &text) {
  if (text == "pretty") {
    return Format::Pretty;
  }
  if (text == "csv") {
    return Format::Csv;
  }
  if (text == "json") {
    return Format::Json;
  }
  throw InvalidArgument("--format: '" + text + "' (expected pretty, csv or json)");
}

Count require(const std::optional<Count> &value, std::string_view flag) {
  if (!value) {
    throw InvalidArgument(std::string(flag) + " is required");
  }
  return *value;
}

EngineLimits limits_of(const CliConfig &config) { return EngineLimits{config.state_ceiling}; }

std::optional<Count> period_annotation(const RuleSet &rules) {
  const auto *fin = rules.get_if<FiniteArithmetic>();
  if (fin == nullptr || rules.hypothesis_violated()) {
    return std::nullopt;
  }
  return predicted_period(fin->b, fin->c, fin->i_max);
}

std::size_t digits(GrundyValue v) { return std::to_string(v).size(); }

void print_flat(std::ostream &out, const GrundyTable &table) {
  const auto base = table.row(Side::Base);
  const auto comp = table.row(Side::Complement);
  const auto w_n = std::max<std::size_t>(1, std::to_string(table.n_max()).size());
  const auto w_b = std::max<std::size_t>(6, digits(*std::max_element(base.begin(), base.end())));
  const auto w_c = std::max<std::size_t>(12, digits(*std::max_element(comp.begin(), comp.end())));
  out << std::setw(static_cast<int>(w_n)) << "n" << "  " << std::setw(static_cast<int>(w_b)) << "G_base" << "  "
      << std::setw(static_cast<int>(w_c)) << "G_complement" << '\n';
  for (std::size_t n = 0; n < base.size(); ++n) {
    out << std::setw(static_cast<int>(w_n)) << n << "  " << std::setw(static_cast<int>(w_b)) << base[n] << "  "
        << std::setw(static_cast<int>(w_c)) << comp[n] << '\n';
  }
}

// One line per period block, like the labelled progression tables.
void print_blocks(std::ostream &out, const GrundyTable &table, Count p) {
  const auto w_n = static_cast<int>(std::to_string(table.n_max()).size());
  for (Side side : {Side::Base, Side::Complement}) {
    const auto row = table.row(side);
    const auto w = static_cast<int>(digits(*std::max_element(row.begin(), row.end())));
    out << (side == Side::Base ? "G(n,S)" : "G(n,S-bar)") << ", period block width " << p << ":\n";
    for (std::size_t start = 0; start < row.size(); start += p) {
      out << std::setw(w_n) << start << " |";
      for (std::size_t n = start; n < std::min<std::size_t>(start + p, row.size()); ++n) {
        out << ' ' << std::setw(w) << row[n];
      }
      out << '\n';
    }
  }
}

void print_moves(std::ostream &out, const std::vector<Move> &moves) {
  out << "winning moves:";
  if (moves.empty()) {
    out << " none";
  }
  for (const auto &m : moves) {
    out << ' ' << m.take << ':' << to_string(m.opponent_side);
  }
  out << '\n';
}

void print_consecutive(std::ostream &out, const ConsecutiveReport &r) {
  out << "consecutive k=" << r.k << " n_max=" << r.n_max << ": " << r.comparisons << " comparisons, "
      << r.mismatches.size() << " mismatches, monotonicity " << (r.monotonicity_ok ? "ok" : "VIOLATED") << '\n';
  for (std::size_t i = 0; i < kConsecutiveCaseCount; ++i) {
    if (r.mismatches_per_case[i] != 0) {
      out << "  case " << to_string(static_cast<ConsecutiveCase>(i)) << ": " << r.mismatches_per_case[i]
          << " mismatches\n";
    }
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(r.mismatches.size(), 20); ++i) {
    const auto &m = r.mismatches[i];
    out << "  n=" << m.n << " side=" << to_string(m.side) << " formula=" << m.expected << " engine=" << m.actual
        << '\n';
  }
  out << (r.passed ? "PASSED" : "FAILED") << '\n';
}

void print_arith(std::ostream &out, const PeriodReport &r) {
  const auto ok = [](bool v) { return v ? "ok" : "FAILED"; };
  out << "arith b=" << r.params.b << " c=" << r.params.c << " i_max=" << r.params.i_max << " n_max=" << r.n_max
      << '\n';
  out << "  predicted period       " << r.predicted_period << '\n';
  if (r.detected) {
    out << "  detected               preperiod " << r.detected->preperiod << ", period " << r.detected->period
        << (r.detected_divides_predicted ? " (divides p)" : " (does NOT divide p)") << '\n';
  } else {
    out << "  detected               insufficient data\n";
  }
 if (r.shortest_fit) {
    out << "  shortest tail fit      preperiod " << r.shortest_fit->preperiod << ", period " << r.shortest_fit->period
        << " (informational)\n";
  }
  out << "  periodic for n >= 2p   " << ok(r.tail_periodic) << '\n';
  out << "  periodic for n >= p    " << (r.periodic_from_p ? "yes" : "no") << " (informational)\n";
  out << "  block predictions      " << ok(r.blocks_ok) << " (" << r.block_mismatches << " offsets contradicted, "
      << r.block_conflicts.size() << " conflicted, " << r.complete_blocks << " blocks)\n";
  for (const auto &block : r.blocks) {
    if (!block.agrees) {
      out << "    offset " << block.offset << ": predicted " << to_string(block.prediction) << ", observed "
          << to_string(block.observed) << '\n';
    }
  }
  out << "  finite == infinite     " << ok(r.finite_infinite_agree) << '\n';
  const char *tag = r.small_b ? " (informational, b < 5)" : "";
  out << "  G(n,S-bar) >= 2        " << ok(r.complement_at_least_two) << tag << '\n';
  out << "  G(n,S-bar) > 2*i_max   " << ok(r.complement_exceeds_twice_imax) << tag << '\n';
  out << "  G(n,S) < 2 at          ";
  for (std::size_t i = 0; i < std::min<std::size_t>(r.base_below_two.size(), 4); ++i) {
    out << '[' << r.base_below_two[i].first << ',' << r.base_below_two[i].last << "] ";
  }
  out << (r.base_below_two.size() > 4 ? "..." : "") << '\n';
  out << "  max G(n,S)             " << r.max_base_value << " (bound " << 2 * (r.params.i_max + 1) << ")\n";
  out << (r.passed ? "PASSED" : "FAILED") << '\n';
}

} // namespace

int cmd_grundy(const CliConfig &config, std::ostream &out) {
  const auto rules = RuleSet::parse(config.ruleset_spec);
  const Position pos{require(config.n, "--n"), config.side};
  const auto table = build_table(rules, pos.n, limits_of(config));
  const auto value = table.at(pos);
  if (config.format == Format::Json) {
    nlohmann::ordered_json doc{{"ruleset", rules.to_string()},
                               {"n", pos.n},
                               {"side", std::string(to_string(pos.side))},
                               {"grundy", value}};
    if (config.verbose) {
      auto moves = nlohmann::ordered_json::array();
      for (const auto &m : winning_moves(table, pos)) {
        moves.push_back({{"take", m.take}, {"side", std::string(to_string(m.opponent_side))}});
      }
      doc["winning_moves"] = std::move(moves);
    }
    out << doc.dump() << '\n';
  } else {
    out << value << '\n';
    if (config.verbose) {
      print_moves(out, winning_moves(table, pos));
    }
  }
  return kOk;
}

int cmd_table(const CliConfig &config, std::ostream &out) {
  const auto rules = RuleSet::parse(config.ruleset_spec);
  const auto table = build_table(rules, require(config.n_max, "--nmax"), limits_of(config));
  const auto period = period_annotation(rules);
  switch (config.format) {
  case Format::Csv:
    write_csv(out, table);
    break;
  case Format::Json:
    out << to_json(table, period) << '\n';
    break;
  case Format::Pretty:
    out << "ruleset " << rules.to_string() << ", n_max " << table.n_max() << '\n';
    if (period) {
      print_blocks(out, table, *period);
    } else {
      print_flat(out, table);
    }
    break;
  }
  return kOk;
}

int cmd_verify(const CliConfig &config, std::ostream &out) {
  const auto rules = RuleSet::parse(config.ruleset_spec);
  const Count n_max = require(config.n_max, "--nmax");
  if (const auto *cons = rules.get_if<Consecutive>()) {
    const auto report = verify_consecutive(cons->k, n_max, limits_of(config));
    if (config.format == Format::Json) {
      out << to_json(report) << '\n';
    } else {
      print_consecutive(out, report);
    }
    return report.passed ? kOk : kFailure;
  }
  if (const auto *fin = rules.get_if<FiniteArithmetic>()) {
    ArithOptions options;
    options.allow_small_b = config.allow_small_b;
    options.min_tail_multiple = config.min_tail_multiple;
    options.limits = limits_of(config);
    const auto report = verify_arith({fin->b, fin->c, fin->i_max}, n_max, options);
    if (config.format == Format::Json) {
      out << to_json(report) << '\n';
    } else {
      print_arith(out, report);
    }
    return report.passed ? kOk : kFailure;
  }
  throw InvalidArgument("verify supports k=K and arith:B,C,IMAX rulesets, got " + rules.to_string());
}

int cmd_period(const CliConfig &config, std::ostream &out, std::ostream &err) {
  const auto rules = RuleSet::parse(config.ruleset_spec);
  const auto table = build_table(rules, require(config.n_max, "--nmax"), limits_of(config));
  const auto annotation = period_annotation(rules);
  PeriodFit fit;
  try {
    fit = detect_period(table.row(config.side), config.min_tail_multiple);
  } catch (const InsufficientData &e) {
    err << "insufficient data: " << e.what() << '\n';
    return kFailure;
  }
  if (config.format == Format::Json) {
    nlohmann::ordered_json doc{{"ruleset", rules.to_string()},
                               {"side", std::string(to_string(config.side))},
                               {"n_max", table.n_max()},
                               {"preperiod", fit.preperiod},
                               {"period", fit.period}};
    if (annotation) {
      doc["predicted_period"] = *annotation;
    }
    out << doc.dump() << '\n';
  } else {
    out << "preperiod=" << fit.preperiod << " period=" << fit.period;
    if (annotation) {
      out << " predicted_period=" << *annotation;
    }
    out << '\n';
  }
  return kOk;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Grundy values of comply/constrain subtraction games", "ccsub"};
  app.require_subcommand(1);

  CliConfig config;
  std::string n_text;
  std::string n_max_text;
  std::string side_text = "base";
  std::string format_text = "pretty";
  std::string out_path;
  std::string ceiling_text;
  std::string tail_text;

  const auto add_common = [&](CLI::App *sub, bool wants_n, bool wants_n_max) {
    sub->add_option("--set", config.ruleset_spec, "Ruleset: k=K | arith:B,C,IMAX | inf-arith:B,C | set:a,b,...")
        ->required();
    if (wants_n) {
      sub->add_option("--n", n_text, "Heap size");
    }
    if (wants_n_max) {
      sub->add_option("--nmax", n_max_text, "Largest heap size in the table");
    }
    sub->add_option("--side", side_text, "Constraint side: base | comp");
    sub->add_option("--format", format_text, "Output format: pretty | csv | json");
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    sub->add_flag("--allow-small-b", config.allow_small_b, "Run progression checks with b < 5");
    sub->add_option("--state-ceiling", ceiling_text, "Largest heap size the engine may tabulate");
    sub->add_option("--min-tail-multiple", tail_text, "Periods the periodic tail must span (default 3)");
    sub->add_flag("-v,--verbose", config.verbose, "Also print winning moves");
  };

  auto *grundy_cmd = app.add_subcommand("grundy", "Grundy value of one position");
  add_common(grundy_cmd, true, false);
  auto *table_cmd = app.add_subcommand("table", "Grundy table for 0..nmax");
  add_common(table_cmd, false, true);
  auto *verify_cmd = app.add_subcommand("verify", "Check closed forms / progression predictions against the engine");
  add_common(verify_cmd, false, true);
  auto *period_cmd = app.add_subcommand("period", "Detect the eventual period of one row");
  add_common(period_cmd, false, true);
  auto *play_cmd = app.add_subcommand("play", "Play against the engine");
  add_common(play_cmd, true, false);
  play_cmd->add_flag("--engine-first", config.engine_first, "Engine makes the first move");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ccsub");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_store) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!n_text.empty()) {
      config.n = parse_count(n_text, "--n");
    }
    if (!n_max_text.empty()) {
      config.n_max = parse_count(n_max_text, "--nmax");
    }
    if (!ceiling_text.empty()) {
      config.state_ceiling = parse_count(ceiling_text, "--state-ceiling");
    }
    if (!tail_text.empty()) {
      config.min_tail_multiple = parse_count(tail_text, "--min-tail-multiple");
    }
    config.side = parse_side(side_text);
    config.format = parse_format(format_text);
    if (!out_path.empty()) {
      config.output_path = out_path;
    }

    std::ofstream file;
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) {
        throw InvalidArgument("--out: cannot open '" + *config.output_path + "' for writing");
      }
    }
    std::ostream &sink = config.output_path ? static_cast<std::ostream &>(file) : out;

    if (grundy_cmd->parsed()) {
      return cmd_grundy(config, sink);
    }
    if (table_cmd->parsed()) {
      return cmd_table(config, sink);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(config, sink);
    }
    if (period_cmd->parsed()) {
      return cmd_period(config, sink, err);
    }
    return cmd_play(config, in, out);
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HypothesisViolation &e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit &e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InsufficientData &e) {
    err << "insufficient data: " << e.what() << '\n';
    return kFailure;
  } catch (const std::bad_alloc &) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace ccsub::cli
