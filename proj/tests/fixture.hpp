#pragma once

// Loader for the shipped first-benchmark table.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mds::testing {

using Columns = std::map<std::string, std::vector<double>>;

inline Columns load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> names;
  {
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) names.push_back(f);
  }
  Columns cols;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::size_t i = 0;
    for (std::string f; std::getline(ss, f, ','); ++i) {
      if (i == 0) continue;  // instance label
      cols[names.at(i)].push_back(std::stod(f));
    }
  }
  return cols;
}

inline std::vector<std::vector<double>> rows_of(const Columns& c, const std::vector<std::string>& names) {
  std::vector<std::vector<double>> rows(c.at(names.front()).size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& n : names) rows[r].push_back(c.at(n)[r]);
  return rows;
}

}  // namespace mds::testing
