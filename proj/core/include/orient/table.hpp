#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orient {

/// A rectangular numeric dataset with named columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return i;
    throw std::out_of_range("Table: no column named " + std::string(name));
  }

  bool has_column(std::string_view name) const {
    for (const auto& c : columns)
      if (c == name) return true;
    return false;
  }
};

}  // namespace orient
