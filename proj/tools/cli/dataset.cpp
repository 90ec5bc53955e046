#include "cli/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "orient/cmat.hpp"

namespace orient::cli {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Dataset Dataset::from_table(const Table& t) {
  Dataset d;
  d.columns = t.columns;
  d.rows.reserve(t.rows.size());
  for (const auto& r : t.rows) d.rows.emplace_back(r.begin(), r.end());
  return d;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

void write_csv(const Dataset& d, std::ostream& os) {
  for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << d.columns[i];
  os << '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

void write_json(const Dataset& d, const nlohmann::ordered_json& metadata, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  doc["columns"] = d.columns;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& row : d.rows) {
      std::visit([&](const auto& v) { col.push_back(v); }, row[c]);
    }
    data[d.columns[c]] = std::move(col);
  }
  doc["data"] = std::move(data);
  os << doc.dump(2) << '\n';
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (t.columns.empty()) {
      for (auto& f : split(line, ',')) t.columns.push_back(trim(f));
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != t.columns.size()) {
      throw InvalidInput("csv: row has " + std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(t.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      const std::string s = trim(f);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw InvalidInput("csv: non-numeric field '" + s + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw InvalidInput("csv: missing header");
  return t;
}

}  // namespace orient::cli
