#include "fracspline/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "fracspline/errors.hpp"

namespace fracspline {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream os;
  for (const auto& c : table.leading_comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ",";
    os << table.header[i];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << format_real(row[i]);
    }
    os << "\n";
  }
  for (const auto& c : table.trailing_comments) os << "# " << c << "\n";
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string c = line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1);
      (have_header ? table.trailing_comments : table.leading_comments).push_back(c);
      continue;
    }
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(pos));
        break;
      }
      cells.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (!have_header) {
      table.header = cells;
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) throw DomainError("csv: ragged row");
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      char* end = nullptr;
      row[i] = std::strtod(cells[i].c_str(), &end);
      if (end == cells[i].c_str()) throw DomainError("csv: non-numeric cell '" + cells[i] + "'");
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw DomainError("csv: missing header row");
  return table;
}

}  // namespace fracspline
