#include "ccsub/game.hpp"

#include "ccsub/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ccsub {

namespace {

Count parse_count(std::string_view token, std::string_view context) {
  Count value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument("invalid integer '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    parts.push_back(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) {
      return parts;
    }
    start = comma + 1;
  }
}

std::vector<Count> parse_list(std::string_view body, std::string_view context, std::size_t expected) {
  const auto parts = split_commas(body);
  if (expected != 0 && parts.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) + " comma-separated values in '" +
                          std::string(context) + "', got " + std::to_string(parts.size()));
  }
  std::vector<Count> values;
  values.reserve(parts.size());
  for (auto part : parts) {
    values.push_back(parse_count(part, context));
  }
  return values;
}

} // namespace

std::string_view to_string(Side side) noexcept { return side == Side::Base ? "base" : "comp"; }

Side parse_side(std::string_view text) {
  if (text == "base") {
    return Side::Base;
  }
  if (text == "comp" || text == "complement") {
    return Side::Complement;
  }
  throw InvalidArgument("invalid side '" + std::string(text) + "' (expected base or comp)");
}

RuleSet::RuleSet(Family family) : family_(std::move(family)) {
  if (const auto *fin = get_if<FiniteArithmetic>()) {
    hypothesis_violated_ = !progression_hypothesis_holds(fin->b, fin->c);
  } else if (const auto *inf = get_if<InfiniteArithmetic>()) {
    hypothesis_violated_ = !progression_hypothesis_holds(inf->b, inf->c);
  }
}

RuleSet RuleSet::consecutive(Count k) {
  if (k < 1) {
    throw InvalidArgument("consecutive ruleset needs k >= 1, got k=" + std::to_string(k));
  }
  return RuleSet(Consecutive{k});
}

RuleSet RuleSet::finite_arithmetic(Count b, Count c, Count i_max) {
  if (b < 1 || c < 1) {
    throw InvalidArgument("arithmetic progression needs b >= 1 and c >= 1");
  }
  return RuleSet(FiniteArithmetic{b, c, i_max});
}

RuleSet RuleSet::infinite_arithmetic(Count b, Count c) {
  if (b < 1 || c < 1) {
    throw InvalidArgument("arithmetic progression needs b >= 1 and c >= 1");
  }
  return RuleSet(InfiniteArithmetic{b, c});
}

RuleSet RuleSet::explicit_set(std::vector<Count> elements) {
  if (elements.empty()) {
    throw InvalidArgument("explicit set must be nonempty");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1) {
      throw InvalidArgument("explicit set elements must be >= 1, got '0'");
    }
    if (i > 0 && elements[i] <= elements[i - 1]) {
      throw InvalidArgument("explicit set must be strictly increasing at '" + std::to_string(elements[i]) + "'");
    }
  }
  return RuleSet(ExplicitSet{std::move(elements)});
}

RuleSet RuleSet::parse(std::string_view text) {
  if (text.starts_with("k=")) {
    return consecutive(parse_count(text.substr(2), text));
  }
  if (text.starts_with("arith:")) {
    const auto v = parse_list(text.substr(6), text, 3);
    return finite_arithmetic(v[0], v[1], v[2]);
  }
  if (text.starts_with("inf-arith:")) {
    const auto v = parse_list(text.substr(10), text, 2);
    return infinite_arithmetic(v[0], v[1]);
  }
  if (text.starts_with("set:")) {
    const auto parts = split_commas(text.substr(4));
    std::vector<Count> elements;
    for (auto part : parts) {
      const Count value = parse_count(part, text);
      if (value == 0) {
        throw InvalidArgument("set element '" + std::string(part) + "' must be >= 1");
      }
      if (!elements.empty() && value <= elements.back()) {
        throw InvalidArgument("set element '" + std::string(part) + "' breaks strictly increasing order");
      }
      elements.push_back(value);
    }
    return explicit_set(std::move(elements));
  }
  const auto colon = text.find_first_of(":=");
  throw InvalidArgument("unknown ruleset kind '" + std::string(text.substr(0, colon)) +
                        "' (expected k=, arith:, inf-arith: or set:)");
}

bool RuleSet::in_base(Count s) const noexcept {
  if (s == 0) {
    return false;
  }
  return std::visit(
      [s](const auto &f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Consecutive>) {
          return s <= f.k;
        } else if constexpr (std::is_same_v<T, FiniteArithmetic>) {
          return s >= f.b && (s - f.b) % f.c == 0 && (s - f.b) / f.c <= f.i_max;
        } else if constexpr (std::is_same_v<T, InfiniteArithmetic>) {
          return s >= f.b && (s - f.b) % f.c == 0;
        } else {
          return std::binary_search(f.elements.begin(), f.elements.end(), s);
        }
      },
      family_);
}

bool RuleSet::contains(Side side, Count s) const noexcept {
  if (s == 0) {
    return false;
  }
  return in_base(s) == (side == Side::Base);
}

Count RuleSet::min_element() const noexcept {
  return std::visit(
      [](const auto &f) -> Count {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Consecutive>) {
          return 1;
        } else if constexpr (std::is_same_v<T, ExplicitSet>) {
          return f.elements.front();
        } else {
          return f.b;
        }
      },
      family_);
}

std::string RuleSet::to_string() const {
  std::ostringstream out;
  std::visit(
      [&out](const auto &f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Consecutive>) {
          out << "k=" << f.k;
        } else if constexpr (std::is_same_v<T, FiniteArithmetic>) {
          out << "arith:" << f.b << ',' << f.c << ',' << f.i_max;
        } else if constexpr (std::is_same_v<T, InfiniteArithmetic>) {
          out << "inf-arith:" << f.b << ',' << f.c;
        } else {
          out << "set:";
          for (std::size_t i = 0; i < f.elements.size(); ++i) {
            out << (i ? "," : "") << f.elements[i];
          }
        }
      },
      family_);
  return out.str();
}

std::vector<Count> legal_moves(const RuleSet &rules, Position pos) {
  std::vector<Count> moves;
  for_each_move(rules, pos, [&moves](Count s) { moves.push_back(s); });
  return moves;
}

std::vector<Position> options(const RuleSet &rules, Position pos) {
  std::vector<Position> result;
  for_each_move(rules, pos, [&](Count s) {
    result.push_back({pos.n - s, Side::Base});
    result.push_back({pos.n - s, Side::Complement});
  });
  return result;
}

} // namespace ccsub
