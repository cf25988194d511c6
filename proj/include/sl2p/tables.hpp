#pragma once

#include <string>
#include <vector>

#include "sl2p/classes.hpp"
#include "sl2p/projectors.hpp"

namespace sl2p {

struct TableRow {
  RegSSClass cls;
  Rational value;
};

struct DepthTable {
  std::string name;  // "e0", "cusp", "e", "sigma"
  long long q;
  HalfInt depth;
  std::vector<TableRow> rows;
};

// depth-zero values, the cuspidal sums at integral depth, the half-integral
// depth sums, and the cumulative sigma grids, over the canonical class grid
std::vector<DepthTable> make_tables(long long q, HalfInt depth_max);
// identical layout with every sigma value produced by summing e_k instead of
// the closed form; emitted bytes must coincide with make_tables
std::vector<DepthTable> make_tables_by_summation(long long q, HalfInt depth_max);

std::string tables_to_markdown(const std::vector<DepthTable>& tables);
std::string tables_to_csv(const std::vector<DepthTable>& tables);
std::string tables_to_json(const std::vector<DepthTable>& tables);

struct CensusTable {
  long long q;
  std::vector<CensusRecord> records;
};
CensusTable make_census(long long q, HalfInt depth_max);
std::string census_to_markdown(const CensusTable& t);
std::string census_to_csv(const CensusTable& t);
std::string census_to_json(const CensusTable& t);

}  // namespace sl2p
