#pragma once

// Loader for the reference tables in tests/data: p,d2,d3,... with an optional
// trailing "d<k>plus" column that aggregates every delta >= k.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Row {
  std::uint64_t p = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // nonzero cells only
};

struct Table {
  std::uint64_t s = 0;
  /// Deltas at or above this are reported in one aggregated cell; 0 if none.
  std::uint64_t aggregate_from = 0;
  std::vector<Row> rows;
};

inline Table load(const std::string& path, std::uint64_t s) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Table table;
  table.s = s;
  std::string line;
  std::getline(in, line);
  std::vector<std::uint64_t> columns;
  std::stringstream header(line);
  std::string cell;
  std::getline(header, cell, ',');
  while (std::getline(header, cell, ',')) {
    const bool plus = cell.size() > 4 && cell.compare(cell.size() - 4, 4, "plus") == 0;
    const std::uint64_t k = std::stoull(cell.substr(1, cell.size() - 1 - (plus ? 4 : 0)));
    if (plus) table.aggregate_from = k;
    columns.push_back(k);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    Row row;
    std::getline(fields, cell, ',');
    row.p = std::stoull(cell);
    for (std::uint64_t k : columns) {
      std::getline(fields, cell, ',');
      const std::uint64_t n = std::stoull(cell);
      if (n != 0) row.counts[k] = n;
    }
    table.rows.push_back(row);
  }
  return table;
}

/// Folds deltas >= table.aggregate_from into one cell, as the table does.
inline std::map<std::uint64_t, std::uint64_t> fold(const Table& table, std::map<std::uint64_t, std::uint64_t> counts) {
  if (table.aggregate_from == 0) return counts;
  std::uint64_t tail = 0;
  for (auto it = counts.lower_bound(table.aggregate_from); it != counts.end();) {
    tail += it->second;
    it = counts.erase(it);
  }
  if (tail != 0) counts[table.aggregate_from] = tail;
  return counts;
}

}  // namespace golden
