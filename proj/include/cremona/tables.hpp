#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cremona {

// One checked row of a reference table.
struct RowCheck {
  int table = 0;
  std::string row;  // row number or decomposition name
  bool pass = false;
  nlohmann::json detail;
};

// Table 0: the 21 weighted graphs. Table 1: classification of the formulas and their inverses.
// Table 2: enriched graphs, Noether equations and length bounds. Table 3: ordinary decompositions.
// Table 4: quadratic decompositions and the classical ones.
// Rows are checked on up to `threads` threads; the result order does not depend on it.
std::vector<RowCheck> verify_table(int table, unsigned threads = 1);

// Thread count from CREMONA_THREADS, defaulting to the hardware concurrency (at most 8).
unsigned default_threads();

nlohmann::json table_report_to_json(int table, const std::vector<RowCheck>& rows);

}  // namespace cremona
