#include "ccsub/cli.hpp"

#include "ccsub/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace ccsub::cli {

namespace {

/// Winning move if there is one (smallest take, Base first), otherwise the
/// smallest legal take constraining the opponent to Base.
Move engine_choice(const GrundyTable &table, Position pos) {
  const auto winners = winning_moves(table, pos);
  if (!winners.empty()) {
    return winners.front();
  }
  return {legal_moves(table.rules(), pos).front(), Side::Base};
}

void show(std::ostream &out, const RuleSet &rules, Position pos) {
  out << "position: n=" << pos.n << ", must take from " << (pos.side == Side::Base ? "S" : "S-bar")
      << "; legal moves:";
  for (Count s : legal_moves(rules, pos)) {
    out << ' ' << s;
  }
  out << '\n';
}

std::optional<Move> read_move(std::istream &in, std::ostream &out, const RuleSet &rules, Position pos, bool &quit) {
  out << "your move (TAKE base|comp, or q): " << std::flush;
  std::string line;
  if (!std::getline(in, line)) {
    quit = true;
    return std::nullopt;
  }
  std::istringstream tokens(line);
  std::string take_text;
  std::string side_text;
  tokens >> take_text >> side_text;
  if (take_text == "q" || take_text == "quit") {
    quit = true;
    return std::nullopt;
  }
  Count take = 0;
  auto [ptr, ec] = std::from_chars(take_text.data(), take_text.data() + take_text.size(), take);
  if (take_text.empty() || ec != std::errc{} || ptr != take_text.data() + take_text.size()) {
    out << "could not read a move from '" << line << "'\n";
    return std::nullopt;
  }
  Side side = Side::Base;
  try {
    side = parse_side(side_text);
  } catch (const InvalidArgument &) {
    out << "side must be base or comp\n";
    return std::nullopt;
  }
  const auto moves = legal_moves(rules, pos);
  if (!std::binary_search(moves.begin(), moves.end(), take)) {
    out << "illegal move " << take << "\n";
    return std::nullopt;
  }
  return Move{take, side};
}

} // namespace

int cmd_play(const CliConfig &config, std::istream &in, std::ostream &out) {
  const auto rules = RuleSet::parse(config.ruleset_spec);
  Position pos{config.n.value_or(0), config.side};
  if (!config.n) {
    throw InvalidArgument("--n is required");
  }
  const auto table = build_table(rules, pos.n, EngineLimits{config.state_ceiling});
  bool human_to_move = !config.engine_first;

  while (true) {
    if (legal_moves(rules, pos).empty()) {
      out << "no legal move from n=" << pos.n << ". The loser is " << (human_to_move ? "you" : "the engine")
          << ": " << (human_to_move ? "engine wins" : "you win") << ".\n";
      return kOk;
    }
    if (human_to_move) {
      show(out, rules, pos);
      bool quit = false;
      const auto move = read_move(in, out, rules, pos, quit);
      if (quit) {
        out << "bye\n";
        return kOk;
      }
      if (!move) {
        continue;
      }
      pos = {pos.n - move->take, move->opponent_side};
    } else {
      const auto move = engine_choice(table, pos);
      out << "engine takes " << move.take << ", you must take from " << (move.opponent_side == Side::Base ? "S" : "S-bar")
          << '\n';
      pos = {pos.n - move.take, move.opponent_side};
    }
    human_to_move = !human_to_move;
  }
}

} // namespace ccsub::cli
