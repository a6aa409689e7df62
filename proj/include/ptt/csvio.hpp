#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace ptt {

/// Shortest representation with 12 significant digits (CSV float contract).
std::string format_float(double v);

/// Line-oriented CSV writer: UTF-8, LF endings, floats via format_float.
/// Non-finite values print as empty cells.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header);
  void row(const std::vector<std::string>& cells);
  static std::string cell(double v);

 private:
  std::ofstream out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reader counterpart used by the round-trip checks.
CsvTable read_csv(const std::string& path);

}  // namespace ptt
