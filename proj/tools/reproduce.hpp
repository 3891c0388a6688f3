#pragma once

#include "schurlab/characters.hpp"
#include "schurlab/designs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schurlab::cli {

/// One constructed scheme checked against every claim made about it.
struct ReproRow {
  std::string construction;  // "z2" or "z4"
  int n = 0;
  std::string w;             // W generators for z4, empty for z2
  bool symmetric = false;
  std::uint32_t points = 0;
  std::optional<XuTemplate> expected;
  std::optional<XuTemplate> matched;
  std::optional<std::vector<int>> duality;
  bool multiplicities_match_valencies = false;
  std::vector<PgdSuiteEntry> pgd;
  std::optional<std::string> aut_order;
  std::optional<std::string> expected_aut_order;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// z2 for n = 1..4 and z4 for n = 2, 3 with every W; |Aut| for the z4 n = 3
/// rows. Rows come back in instance order regardless of `jobs`.
std::vector<ReproRow> reproduce_all(int jobs);

}  // namespace schurlab::cli
