#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "dgsp/error.hpp"
#include "dgsp/ranked.hpp"

namespace dgsp {

using nlohmann::json;

std::vector<RankedRow> to_rows(const DatabaseGraph& graph, const RankedPatterns& ranked) {
  std::vector<RankedRow> rows;
  rows.reserve(ranked.entries.size());
  for (const auto& e : ranked.entries) {
    rows.push_back(RankedRow{e.rank, to_text(graph, e.pattern), e.support, e.frequency});
  }
  return rows;
}

namespace {

json row_to_json(const RankedRow& row) {
  json obj{{"rank", row.rank}, {"pattern", row.pattern}, {"support", row.support}};
  obj["freq"] = row.frequency ? json(*row.frequency) : json(nullptr);
  return obj;
}

std::string format_double(double value) {
  // Same shortest round-trip text as the JSON writer.
  return json(value).dump();
}

std::vector<RankedRow> read_json_rows(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed ranked-pattern JSON: ") + e.what());
  }
  if (!doc.is_array()) throw parse_error("ranked-pattern JSON must be an array");
  std::vector<RankedRow> rows;
  for (const auto& obj : doc) {
    if (!obj.is_object() || !obj.contains("rank") || !obj["rank"].is_number_unsigned() ||
        !obj.contains("pattern") || !obj["pattern"].is_string() || !obj.contains("support") ||
        !obj["support"].is_number_unsigned()) {
      throw parse_error("ranked-pattern entries need rank, pattern and support");
    }
    RankedRow row;
    row.rank = obj["rank"].get<size_t>();
    row.pattern = obj["pattern"].get<std::string>();
    row.support = obj["support"].get<uint64_t>();
    if (obj.contains("freq") && obj["freq"].is_number()) row.frequency = obj["freq"].get<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RankedRow> read_csv_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("rank,pattern,support,freq", 0) != 0) {
    throw parse_error("ranked-pattern CSV needs the header rank,pattern,support,freq");
  }
  std::vector<RankedRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    RankedRow row;
    char comma = 0;
    std::string freq;
    if (!(fields >> row.rank >> comma) || comma != ',' ||
        !(fields >> std::quoted(row.pattern) >> comma) || comma != ',' ||
        !(fields >> row.support >> comma) || comma != ',') {
      throw parse_error("malformed ranked-pattern CSV line: " + line);
    }
    std::getline(fields, freq);
    if (!freq.empty()) {
      try {
        row.frequency = std::stod(freq);
      } catch (const std::exception&) {
        throw parse_error("malformed frequency in CSV line: " + line);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_ranked_json(const std::vector<RankedRow>& rows, std::ostream& out) {
  out << "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << row_to_json(rows[i]).dump();
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

void write_ranked_csv(const std::vector<RankedRow>& rows, std::ostream& out) {
  out << "rank,pattern,support,freq\n";
  for (const auto& row : rows) {
    out << row.rank << ',' << std::quoted(row.pattern) << ',' << row.support << ',';
    if (row.frequency) out << format_double(*row.frequency);
    out << '\n';
  }
}

std::vector<RankedRow> read_ranked(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return read_json_rows(text);
  std::istringstream csv(text);
  return read_csv_rows(csv);
}

std::vector<RankedRow> read_ranked_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open ranked-pattern file '" + path + "'");
  return read_ranked(in);
}

}  // namespace dgsp
