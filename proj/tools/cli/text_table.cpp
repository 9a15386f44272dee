#include "cli/text_table.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>

namespace hyperprob::cli {

TextTable::TextTable(std::vector<std::string> header) {
  rows_.push_back(std::move(header));
}

void TextTable::add_row(std::vector<std::string> row) {
  row.resize(rows_.front().size());
  rows_.push_back(std::move(row));
}

void TextTable::print(std::ostream& os) const {
  std::vector<std::size_t> width(rows_.front().size(), 0);
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto rule = [&] {
    for (std::size_t c = 0; c < width.size(); ++c) {
      os << std::string(width[c], '-') << (c + 1 < width.size() ? "  " : "\n");
    }
  };
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c + 1 == width.size()) {
        os << rows_[r][c] << '\n';
      } else {
        os << std::left << std::setw(static_cast<int>(width[c])) << rows_[r][c]
           << "  ";
      }
    }
    if (r == 0) rule();
  }
}

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace hyperprob::cli
