#pragma once

#include <array>
#include <string>
#include <vector>

namespace aggression {

/// One row of Raj's response table for the three- and four-edge matching
/// scripts, after a triumphant first reply.
///
/// Slots after the opening edge w/p are x/q, y/r and (four edges only) z/s.
/// `lata` lists Lata's placements on x, y, z; `raj` lists Raj's prescribed
/// placements on q, r, s. Rows are keyed by Lata's troops left after her
/// opening move.
struct CaseRow {
  std::string id;
  int edges = 3;           // 3 or 4
  int opening = 0;         // Lata's troops on w
  int lata_remaining = 0;  // her troops left after w
  int raj_remaining = 0;   // Raj's troops left after the triumphant reply
  std::array<int, 3> lata{};
  std::array<int, 3> raj{};
  bool swapped = false;    // generated by exchanging two interchangeable slots
  int slots() const { return edges - 1; }
};

/// Rows in table order; each transcribed row is followed by its swapped
/// variant when the swap yields a different row.
const std::vector<CaseRow>& three_edge_rows();
const std::vector<CaseRow>& four_edge_rows();

/// Consistency problems found in the tables: placements that do not add up to
/// the stated budgets, and prefixes where rows disagree on the next reply.
std::vector<std::string> audit_case_rows();

}  // namespace aggression
