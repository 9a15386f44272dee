#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperprob::cli {

/// Fixed-width, left-aligned text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  void print(std::ostream& os) const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string fixed(double v, int precision = 6);

}  // namespace hyperprob::cli
