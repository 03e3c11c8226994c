#include "ccsub/table_io.hpp"

#include "ccsub/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

namespace ccsub {

void write_csv(std::ostream &out, const GrundyTable &table) {
  out << "n,G_base,G_complement\n";
  const auto base = table.row(Side::Base);
  const auto comp = table.row(Side::Complement);
  for (std::size_t n = 0; n < base.size(); ++n) {
    out << n << ',' << base[n] << ',' << comp[n] << '\n';
  }
}

std::string to_csv(const GrundyTable &table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

namespace {

template <typename T> T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw InvalidArgument("csv line " + std::to_string(line_no) + ": invalid field '" + std::string(field) + "'");
  }
  return value;
}

} // namespace

GrundyTable parse_csv(const RuleSet &rules, std::string_view text) {
  std::vector<GrundyValue> base;
  std::vector<GrundyValue> comp;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != "n,G_base,G_complement") {
        throw InvalidArgument("csv line 1: unexpected header '" + std::string(line) + "'");
      }
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected 3 fields");
    }
    const auto n = parse_field<Count>(line.substr(0, c1), line_no);
    if (n != base.size()) {
      throw InvalidArgument("csv line " + std::to_string(line_no) + ": expected n=" + std::to_string(base.size()));
    }
    base.push_back(parse_field<GrundyValue>(line.substr(c1 + 1, c2 - c1 - 1), line_no));
    comp.push_back(parse_field<GrundyValue>(line.substr(c2 + 1), line_no));
  }
  if (base.empty()) {
    throw InvalidArgument("csv has no data rows");
  }
  return GrundyTable(rules, std::move(base), std::move(comp));
}

std::string to_json(const GrundyTable &table, std::optional<Count> predicted_period) {
  const auto base = table.row(Side::Base);
  const auto comp = table.row(Side::Complement);
  nlohmann::ordered_json doc;
  doc["ruleset"] = table.rules().to_string();
  doc["n_max"] = table.n_max();
  if (predicted_period) {
    doc["predicted_period"] = *predicted_period;
  }
  doc["base"] = std::vector<GrundyValue>(base.begin(), base.end());
  doc["complement"] = std::vector<GrundyValue>(comp.begin(), comp.end());
  return doc.dump();
}

} // namespace ccsub
