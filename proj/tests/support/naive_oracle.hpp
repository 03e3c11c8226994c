#pragma once

// Brute-force Grundy values straight from the definition: recursive, memoized
// in a map, membership given by an arbitrary predicate. Shares no code with
// the engine or with RuleSet.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace ccsub::testing {

class NaiveOracle {
public:
  explicit NaiveOracle(std::function<bool(std::uint64_t)> in_base) : in_base_(std::move(in_base)) {}

  /// complement == false: move from S; true: move from Z+ \ S.
  std::uint32_t value(std::uint64_t n, bool complement) {
    const auto key = std::make_pair(n, complement);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    std::set<std::uint32_t> seen;
    for (std::uint64_t s = 1; s <= n; ++s) {
      if (in_base_(s) != complement) {
        seen.insert(value(n - s, false));
        seen.insert(value(n - s, true));
      }
    }
    std::uint32_t m = 0;
    while (seen.count(m) != 0) {
      ++m;
    }
    memo_[key] = m;
    return m;
  }

private:
  std::function<bool(std::uint64_t)> in_base_;
  std::map<std::pair<std::uint64_t, bool>, std::uint32_t> memo_;
};

} // namespace ccsub::testing
