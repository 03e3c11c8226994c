#include "ccsub/engine.hpp"
#include "ccsub/errors.hpp"
#include "support/naive_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ccsub;
using ccsub::testing::NaiveOracle;

TEST_CASE("mex") {
  CHECK(mex(std::vector<GrundyValue>{}) == 0);
  CHECK(mex(std::vector<GrundyValue>{0, 1, 3}) == 2);
  CHECK(mex(std::vector<GrundyValue>{1, 2, 2}) == 0);
  CHECK(mex(std::vector<GrundyValue>{4, 0, 2, 1, 3}) == 5);
  CHECK(mex(std::vector<GrundyValue>{0, 0, 0}) == 1);
}

TEST_CASE("property: mex laws on random multisets") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<GrundyValue> value(0, 12);
  std::uniform_int_distribution<std::size_t> size(0, 15);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<GrundyValue> values(size(rng));
    for (auto &v : values) {
      v = value(rng);
    }
    const auto m = mex(values);
    std::set<GrundyValue> present(values.begin(), values.end());
    CHECK(present.count(m) == 0);
    for (GrundyValue v = 0; v < m; ++v) {
      CHECK(present.count(v) == 1);
    }
    CHECK(m <= values.size());
    values.push_back(m);
    CHECK(mex(values) > m);
  }
}

TEST_CASE("grundy examples") {
  CHECK(grundy(RuleSet::parse("set:8,21,34,47"), {0, Side::Base}) == 0);
  CHECK(grundy(RuleSet::consecutive(4), {0, Side::Complement}) == 0);
  CHECK(grundy(RuleSet::consecutive(2), {5, Side::Base}) == 0);
  CHECK(grundy(RuleSet::consecutive(2), {7, Side::Complement}) == 5);
  CHECK(grundy(RuleSet::consecutive(1), {2, Side::Base}) == 2);
}

TEST_CASE("build_table examples") {
  const auto k1 = build_table(RuleSet::consecutive(1), 4);
  const auto base = k1.row(Side::Base);
  const auto comp = k1.row(Side::Complement);
  CHECK(std::vector<GrundyValue>(base.begin(), base.end()) == std::vector<GrundyValue>{0, 1, 2, 0, 1});
  CHECK(std::vector<GrundyValue>(comp.begin(), comp.end()) == std::vector<GrundyValue>{0, 0, 1, 2, 3});

  // Below 8 the base side has no moves; the complement side may take any s <= n,
  // reaching every (m, S) = 0 and (m, S-bar) = m for m < n, so its value is n.
  const auto fig = build_table(RuleSet::parse("set:8,21,34,47"), 7);
  for (Count n = 0; n <= 7; ++n) {
    CHECK(fig.at({n, Side::Base}) == 0);
    CHECK(fig.at({n, Side::Complement}) == n);
  }

  CHECK(build_table(RuleSet::consecutive(3), 6).at({6, Side::Base}) == 6);
  CHECK(build_table(RuleSet::consecutive(3), 0).n_max() == 0);
}

TEST_CASE("state ceiling") {
  EngineLimits tight{100};
  CHECK_NOTHROW(build_table(RuleSet::consecutive(2), 100, tight));
  CHECK_THROWS_AS(build_table(RuleSet::consecutive(2), 101, tight), ResourceLimit);
  CHECK_THROWS_AS(grundy(RuleSet::consecutive(2), {101, Side::Base}, tight), ResourceLimit);
  CHECK_THROWS_AS(build_table(RuleSet::consecutive(2), 10'000'001), ResourceLimit);
}

TEST_CASE("table accessors") {
  const auto t = build_table(RuleSet::consecutive(2), 10);
  CHECK_THROWS_AS(t.at({11, Side::Base}), InvalidArgument);
  CHECK_THROWS_AS(GrundyTable(RuleSet::consecutive(2), {0}, {0, 0}), InvalidArgument);
}

TEST_CASE("winning_moves") {
  CHECK(winning_moves(RuleSet::consecutive(1), {1, Side::Base}) ==
        std::vector<Move>{{1, Side::Base}, {1, Side::Complement}});
  CHECK(winning_moves(RuleSet::consecutive(2), {5, Side::Base}).empty());
  CHECK(winning_moves(RuleSet::consecutive(1), {2, Side::Base}) == std::vector<Move>{{1, Side::Complement}});
  CHECK(winning_moves(RuleSet::consecutive(3), {0, Side::Base}).empty());
}

namespace {

struct Case {
  RuleSet rules;
  std::function<bool(std::uint64_t)> membership;
};

std::vector<Case> oracle_cases() {
  std::vector<Case> cases;
  for (std::uint64_t k : {1, 2, 3, 5}) {
    cases.push_back({RuleSet::consecutive(k), [k](std::uint64_t s) { return s >= 1 && s <= k; }});
  }
  cases.push_back({RuleSet::finite_arithmetic(8, 13, 3), [](std::uint64_t s) {
                     return s == 8 || s == 21 || s == 34 || s == 47;
                   }});
  cases.push_back({RuleSet::finite_arithmetic(3, 10, 1), [](std::uint64_t s) { return s == 3 || s == 13; }});
  cases.push_back({RuleSet::infinite_arithmetic(5, 8), [](std::uint64_t s) { return s % 8 == 5; }});
  cases.push_back({RuleSet::parse("set:2,3,7"), [](std::uint64_t s) { return s == 2 || s == 3 || s == 7; }});
  return cases;
}

} // namespace

TEST_CASE("engine matches the recursive brute force") {
  for (auto &c : oracle_cases()) {
    CAPTURE(c.rules.to_string());
    NaiveOracle oracle(c.membership);
    const auto table = build_table(c.rules, 150);
    for (Count n = 0; n <= 150; ++n) {
      CHECK(table.at({n, Side::Base}) == oracle.value(n, false));
      CHECK(table.at({n, Side::Complement}) == oracle.value(n, true));
    }
  }
}

TEST_CASE("property: value bounds, zero soundness, one-shot consistency") {
  for (auto &c : oracle_cases()) {
    CAPTURE(c.rules.to_string());
    const auto table = build_table(c.rules, 200);
    for (Count n = 0; n <= 200; ++n) {
      for (Side side : {Side::Base, Side::Complement}) {
        const Position pos{n, side};
        const auto value = table.at(pos);
        const auto opts = options(c.rules, pos);
        CHECK(value <= opts.size());
        const bool some_zero_option =
            std::any_of(opts.begin(), opts.end(), [&](const Position &o) { return table.at(o) == 0; });
        CHECK((value > 0) == some_zero_option);
        const auto wins = winning_moves(table, pos);
        CHECK(wins.empty() == (value == 0 || opts.empty()));
        for (const auto &m : wins) {
          CHECK(table.at({n - m.take, m.opponent_side}) == 0);
        }
        if (n % 37 == 0) {
          CHECK(grundy(c.rules, pos) == value);
        }
      }
    }
  }
}

TEST_CASE("property: option-count bound for finite progressions") {
  for (Count i_max = 0; i_max <= 4; ++i_max) {
    const auto table = build_table(RuleSet::finite_arithmetic(8, 13, i_max), 800);
    const auto base = table.row(Side::Base);
    CHECK(*std::max_element(base.begin(), base.end()) <= 2 * (i_max + 1));
  }
}

TEST_CASE("determinism") {
  const auto rules = RuleSet::parse("set:8,21,34,47");
  CHECK(build_table(rules, 500) == build_table(rules, 500));
}
