#include "ccsub/errors.hpp"
#include "ccsub/game.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ccsub;

TEST_CASE("contains") {
  CHECK(RuleSet::parse("set:8,21,34,47").contains(Side::Base, 21));
  CHECK_FALSE(RuleSet::consecutive(3).contains(Side::Complement, 2));
  CHECK(RuleSet::infinite_arithmetic(5, 8).contains(Side::Base, 29));
  CHECK_FALSE(RuleSet::finite_arithmetic(5, 8, 2).contains(Side::Base, 29));
  CHECK(RuleSet::finite_arithmetic(5, 8, 2).contains(Side::Complement, 29));
  CHECK(RuleSet::finite_arithmetic(5, 8, 2).contains(Side::Base, 21));
  CHECK_FALSE(RuleSet::consecutive(3).contains(Side::Base, 0));
  CHECK_FALSE(RuleSet::consecutive(3).contains(Side::Complement, 0));
}

TEST_CASE("legal_moves") {
  const auto fig = RuleSet::parse("set:8,21,34,47");
  CHECK(legal_moves(fig, {7, Side::Base}).empty());
  CHECK(legal_moves(fig, {25, Side::Base}) == std::vector<Count>{8, 21});
  CHECK(legal_moves(RuleSet::consecutive(2), {5, Side::Complement}) == std::vector<Count>{3, 4, 5});
  CHECK(legal_moves(RuleSet::finite_arithmetic(5, 8, 2), {30, Side::Base}) == std::vector<Count>{5, 13, 21});
  CHECK(legal_moves(RuleSet::infinite_arithmetic(5, 8), {30, Side::Base}) == std::vector<Count>{5, 13, 21, 29});
}

TEST_CASE("options") {
  CHECK(options(RuleSet::consecutive(1), {1, Side::Base}) ==
        std::vector<Position>{{0, Side::Base}, {0, Side::Complement}});
  CHECK(options(RuleSet::consecutive(2), {1, Side::Complement}).empty());
  CHECK(options(RuleSet::parse("set:8,21,34,47"), {25, Side::Base}) ==
        std::vector<Position>{{17, Side::Base}, {17, Side::Complement}, {4, Side::Base}, {4, Side::Complement}});
}

TEST_CASE("side helpers") {
  CHECK(opposite(opposite(Side::Base)) == Side::Base);
  CHECK(opposite(Side::Base) == Side::Complement);
  CHECK(parse_side("comp") == Side::Complement);
  CHECK(parse_side("complement") == Side::Complement);
  CHECK(parse_side("base") == Side::Base);
  CHECK_THROWS_AS(parse_side("both"), InvalidArgument);
}

TEST_CASE("ruleset text syntax") {
  for (const char *text : {"k=3", "arith:8,13,3", "inf-arith:5,8", "set:8,21,34,47", "set:1"}) {
    CHECK(RuleSet::parse(text).to_string() == text);
  }
  CHECK(RuleSet::parse("arith:8,13,3") == RuleSet::finite_arithmetic(8, 13, 3));
  CHECK(RuleSet::parse("k=7").get_if<Consecutive>()->k == 7);
  CHECK(RuleSet::parse("set:3,9").min_element() == 3);
}

TEST_CASE("ruleset parse errors name the offending token") {
  const auto message = [](const char *text) {
    try {
      RuleSet::parse(text);
    } catch (const InvalidArgument &e) {
      return std::string(e.what());
    }
    return std::string("<no error>");
  };
  CHECK(message("k=0").find("k=0") != std::string::npos);
  CHECK(message("k=x").find("'x'") != std::string::npos);
  CHECK(message("k=-1").find("'-1'") != std::string::npos);
  CHECK(message("k=3.5").find("'3.5'") != std::string::npos);
  CHECK(message("arith:8,13").find("expected 3") != std::string::npos);
  CHECK(message("arith:8,,3").find("''") != std::string::npos);
  CHECK(message("set:5,3").find("'3'") != std::string::npos);
  CHECK(message("set:3,3").find("'3'") != std::string::npos);
  CHECK(message("set:0,4").find("'0'") != std::string::npos);
  CHECK(message("set:").find("''") != std::string::npos);
  CHECK(message("subtract:1,2").find("'subtract'") != std::string::npos);
  CHECK_THROWS_AS(RuleSet::explicit_set({}), InvalidArgument);
  CHECK_THROWS_AS(RuleSet::finite_arithmetic(0, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(RuleSet::infinite_arithmetic(2, 0), InvalidArgument);
}

TEST_CASE("hypothesis flag") {
  CHECK_FALSE(RuleSet::finite_arithmetic(8, 13, 3).hypothesis_violated());
  CHECK(RuleSet::finite_arithmetic(3, 10, 1).hypothesis_violated());
  CHECK(RuleSet::finite_arithmetic(13, 8, 1).hypothesis_violated());
  CHECK(RuleSet::infinite_arithmetic(3, 10).hypothesis_violated());
  CHECK_FALSE(RuleSet::consecutive(2).hypothesis_violated());
  // boundary: 2b == c + 2
  CHECK_FALSE(RuleSet::finite_arithmetic(5, 8, 0).hypothesis_violated());
  CHECK(RuleSet::finite_arithmetic(4, 8, 0).hypothesis_violated());
}

namespace {

std::vector<RuleSet> sample_rulesets(std::mt19937_64 &rng) {
  std::vector<RuleSet> out{RuleSet::consecutive(1), RuleSet::consecutive(4), RuleSet::finite_arithmetic(8, 13, 3),
                           RuleSet::finite_arithmetic(3, 10, 1), RuleSet::infinite_arithmetic(5, 8)};
  std::uniform_int_distribution<Count> elem(1, 40);
  for (int i = 0; i < 10; ++i) {
    std::vector<Count> e(1 + i % 5);
    for (auto &x : e) {
      x = elem(rng);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    out.push_back(RuleSet::explicit_set(e));
  }
  return out;
}

} // namespace

TEST_CASE("property: S and its complement partition Z+") {
  std::mt19937_64 rng(7);
  for (const auto &rules : sample_rulesets(rng)) {
    for (Count s = 1; s <= 200; ++s) {
      CHECK(rules.contains(Side::Base, s) != rules.contains(Side::Complement, s));
    }
  }
}

TEST_CASE("property: moves accumulate with n and options shrink the heap") {
  std::mt19937_64 rng(11);
  for (const auto &rules : sample_rulesets(rng)) {
    for (Side side : {Side::Base, Side::Complement}) {
      std::vector<Count> previous;
      for (Count n = 0; n <= 120; ++n) {
        const auto moves = legal_moves(rules, {n, side});
        CHECK(std::is_sorted(moves.begin(), moves.end()));
        CHECK(std::includes(moves.begin(), moves.end(), previous.begin(), previous.end()));
        for (Count s = 1; s <= n; ++s) {
          CHECK(std::binary_search(moves.begin(), moves.end(), s) == rules.contains(side, s));
        }
        const auto opts = options(rules, {n, side});
        CHECK(opts.size() == 2 * moves.size());
        for (const auto &o : opts) {
          CHECK(o.n < n);
        }
        previous = moves;
      }
    }
  }
}

TEST_CASE("property: empty option sets at the bottom of the heap") {
  for (Count k = 1; k <= 12; ++k) {
    const auto rules = RuleSet::consecutive(k);
    for (Count n = 0; n <= 3 * k + 3; ++n) {
      CHECK(options(rules, {n, Side::Complement}).empty() == (n <= k));
    }
  }
  const auto fig = RuleSet::parse("set:8,21,34,47");
  for (Count n = 0; n < 8; ++n) {
    CHECK(options(fig, {n, Side::Base}).empty());
  }
}
