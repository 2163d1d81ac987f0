#ifndef FRACSPLINE_CSV_HPP
#define FRACSPLINE_CSV_HPP

#include <string>
#include <vector>

namespace fracspline {

// Rectangular numeric table with '#'-prefixed comment lines above the header
// and below the rows.  Reals are serialized with 17 significant digits so
// parse -> serialize is byte-identical.
struct CsvTable {
  std::vector<std::string> leading_comments;   // without the '# ' prefix
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> trailing_comments;
};

std::string format_real(double v);

std::string to_csv(const CsvTable& table);

// Parses what to_csv emits.  Throws DomainError on ragged rows or a missing
// header.
CsvTable parse_csv(const std::string& text);

}  // namespace fracspline

#endif
