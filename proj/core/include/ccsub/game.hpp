#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ccsub {

/// Heap sizes and subtraction amounts.
using Count = std::uint64_t;

/// Which set the player to move must draw from: S itself or Z+ \ S.
enum class Side : std::uint8_t { Base, Complement };

constexpr Side opposite(Side side) noexcept {
  return side == Side::Base ? Side::Complement : Side::Base;
}

std::string_view to_string(Side side) noexcept;

/// Accepts "base" and "comp"/"complement".
Side parse_side(std::string_view text);

/// S = {1..k}.
struct Consecutive {
  Count k;
  friend bool operator==(const Consecutive &, const Consecutive &) = default;
};

/// S = {b + i*c : 0 <= i <= i_max}.
struct FiniteArithmetic {
  Count b;
  Count c;
  Count i_max;
  friend bool operator==(const FiniteArithmetic &, const FiniteArithmetic &) = default;
};

/// S' = {b + i*c : i >= 0}.
struct InfiniteArithmetic {
  Count b;
  Count c;
  friend bool operator==(const InfiniteArithmetic &, const InfiniteArithmetic &) = default;
};

/// Any finite set, strictly increasing, all elements >= 1.
struct ExplicitSet {
  std::vector<Count> elements;
  friend bool operator==(const ExplicitSet &, const ExplicitSet &) = default;
};

/// (c+2)/2 <= b < c, compared exactly as 2b >= c+2.
constexpr bool progression_hypothesis_holds(Count b, Count c) noexcept {
  return b < c && 2 * b >= c + 2;
}

/// The base subtraction set S. Immutable once built; the complement is
/// only ever consulted through contains() and never materialized.
///
/// Progressions violating (c+2)/2 <= b < c can still be built (the engine
/// handles any set) but carry hypothesis_violated() so the progression
/// analysis can refuse them.
class RuleSet {
public:
  using Family = std::variant<Consecutive, FiniteArithmetic, InfiniteArithmetic, ExplicitSet>;

  static RuleSet consecutive(Count k);
  static RuleSet finite_arithmetic(Count b, Count c, Count i_max);
  static RuleSet infinite_arithmetic(Count b, Count c);
  static RuleSet explicit_set(std::vector<Count> elements);

  /// Text syntax: "k=K", "arith:B,C,IMAX", "inf-arith:B,C", "set:a,b,...".
  static RuleSet parse(std::string_view text);

  const Family &family() const noexcept { return family_; }

  template <typename T> const T *get_if() const noexcept { return std::get_if<T>(&family_); }

  bool hypothesis_violated() const noexcept { return hypothesis_violated_; }

  /// True iff s is in S (Base) or in Z+ \ S (Complement). s = 0 is in neither.
  bool contains(Side side, Count s) const noexcept;

  /// Smallest element of S.
  Count min_element() const noexcept;

  /// Inverse of parse().
  std::string to_string() const;

  friend bool operator==(const RuleSet &lhs, const RuleSet &rhs) { return lhs.family_ == rhs.family_; }

private:
  explicit RuleSet(Family family);

  bool in_base(Count s) const noexcept;

  Family family_;
  bool hypothesis_violated_ = false;
};

struct Position {
  Count n = 0;
  Side side = Side::Base;
  friend bool operator==(const Position &, const Position &) = default;
};

/// Invokes fn(s) for every legal subtraction s from pos, ascending.
template <typename Fn> void for_each_move(const RuleSet &rules, Position pos, Fn &&fn);

/// { s in [n] : contains(rules, side, s) }, ascending.
std::vector<Count> legal_moves(const RuleSet &rules, Position pos);

/// Both (n-s, Base) and (n-s, Complement) for every legal s, in move order.
/// Distinct moves give distinct n-s, so the list has no repeated pairs.
std::vector<Position> options(const RuleSet &rules, Position pos);

// -- implementation ---------------------------------------------------------

template <typename Fn> void for_each_move(const RuleSet &rules, Position pos, Fn &&fn) {
  const Count n = pos.n;
  if (n == 0) {
    return;
  }
  if (const auto *cons = rules.get_if<Consecutive>()) {
    if (pos.side == Side::Base) {
      const Count top = cons->k < n ? cons->k : n;
      for (Count s = 1; s <= top; ++s) {
        fn(s);
      }
    } else {
      for (Count s = cons->k + 1; s <= n; ++s) {
        fn(s);
      }
    }
    return;
  }
  if (pos.side == Side::Base) {
    if (const auto *fin = rules.get_if<FiniteArithmetic>()) {
      for (Count i = 0, s = fin->b; i <= fin->i_max && s <= n; ++i, s += fin->c) {
        fn(s);
      }
    } else if (const auto *inf = rules.get_if<InfiniteArithmetic>()) {
      for (Count s = inf->b; s <= n; s += inf->c) {
        fn(s);
      }
    } else {
      for (Count s : std::get<ExplicitSet>(rules.family()).elements) {
        if (s > n) {
          break;
        }
        fn(s);
      }
    }
    return;
  }
  for (Count s = 1; s <= n; ++s) {
    if (rules.contains(Side::Complement, s)) {
      fn(s);
    }
  }
}

} // namespace ccsub
