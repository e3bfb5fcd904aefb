#include "aggression/case_tables.hpp"

#include <map>
#include <numeric>
#include <set>

namespace aggression {

namespace {

// {opening, x, y, z, q, r, s}; z and s are zero for the three-edge table.
struct Raw {
  int w, x, y, z, q, r, s;
};

// Conditions the source writes as f2(z) or f2(s) are read as Lata's
// placement on z.
constexpr Raw kThree[] = {
    {4, 5, 0, 0, 1, 1, 0}, {4, 4, 1, 0, 1, 2, 0}, {4, 3, 2, 0, 1, 3, 0},
    {3, 6, 0, 0, 1, 1, 0}, {3, 5, 1, 0, 1, 2, 0}, {3, 4, 2, 0, 1, 3, 0}, {3, 3, 3, 0, 4, 1, 0},
    {2, 7, 0, 0, 1, 1, 0}, {2, 6, 1, 0, 1, 2, 0}, {2, 5, 2, 0, 1, 3, 0}, {2, 4, 3, 0, 1, 4, 0},
    {1, 8, 0, 0, 1, 1, 0}, {1, 7, 1, 0, 1, 2, 0}, {1, 6, 2, 0, 1, 3, 0}, {1, 5, 3, 0, 1, 4, 0},
    {1, 4, 4, 0, 5, 1, 0},
};

constexpr Raw kFour[] = {
    {4, 6, 0, 0, 1, 1, 1}, {4, 5, 1, 0, 1, 2, 1}, {4, 4, 2, 0, 1, 3, 1}, {4, 4, 1, 1, 1, 2, 2},
    {4, 3, 3, 0, 1, 4, 0}, {4, 3, 2, 1, 1, 3, 1}, {4, 2, 4, 0, 3, 1, 1}, {4, 2, 3, 1, 3, 1, 1},
    {4, 2, 2, 2, 3, 2, 0}, {4, 1, 5, 0, 2, 1, 1}, {4, 1, 4, 1, 2, 1, 2}, {4, 1, 3, 2, 2, 1, 2},

    {3, 7, 0, 0, 1, 1, 1}, {3, 6, 1, 0, 1, 2, 1}, {3, 5, 1, 1, 1, 2, 2}, {3, 4, 3, 0, 1, 4, 1},
    {3, 4, 2, 1, 1, 3, 2}, {3, 3, 4, 0, 4, 1, 1}, {3, 3, 3, 1, 4, 1, 1}, {3, 3, 2, 2, 4, 2, 0},
    {3, 2, 5, 0, 3, 1, 1}, {3, 2, 4, 1, 3, 1, 2}, {3, 2, 3, 2, 3, 1, 2}, {3, 1, 6, 0, 2, 1, 1},
    {3, 1, 5, 1, 2, 1, 2}, {3, 1, 4, 2, 2, 1, 2}, {3, 1, 3, 3, 2, 3, 0},

    {2, 8, 0, 0, 1, 1, 1}, {2, 7, 1, 0, 1, 2, 1}, {2, 6, 2, 0, 1, 3, 1}, {2, 6, 1, 1, 1, 2, 2},
    {2, 5, 3, 0, 1, 4, 1}, {2, 5, 2, 1, 1, 3, 2}, {2, 4, 4, 0, 1, 5, 1}, {2, 4, 3, 1, 1, 4, 2},
    {2, 4, 2, 2, 1, 3, 3}, {2, 3, 5, 0, 4, 1, 1}, {2, 3, 4, 1, 4, 1, 2}, {2, 3, 3, 2, 4, 1, 2},
    {2, 2, 6, 0, 3, 1, 1}, {2, 2, 5, 1, 3, 1, 2}, {2, 2, 4, 2, 3, 1, 3}, {2, 2, 3, 3, 3, 1, 3},
    {2, 1, 7, 0, 2, 1, 1}, {2, 1, 6, 1, 2, 1, 2}, {2, 1, 5, 2, 2, 1, 3}, {2, 1, 4, 3, 2, 5, 0},

    {1, 9, 0, 0, 1, 1, 1}, {1, 8, 1, 0, 1, 2, 1}, {1, 7, 2, 0, 1, 3, 1}, {1, 7, 1, 1, 1, 2, 2},
    {1, 6, 3, 0, 1, 4, 1}, {1, 6, 2, 1, 1, 3, 2}, {1, 5, 4, 0, 1, 5, 1}, {1, 5, 3, 1, 1, 4, 2},
    {1, 5, 2, 2, 1, 3, 3}, {1, 4, 5, 0, 5, 1, 1}, {1, 4, 4, 1, 5, 1, 2}, {1, 4, 3, 2, 5, 1, 2},
    {1, 3, 6, 0, 4, 1, 1}, {1, 3, 5, 1, 3, 1, 2}, {1, 3, 4, 2, 3, 1, 3}, {1, 3, 3, 3, 4, 1, 3},
    {1, 2, 7, 0, 3, 1, 1}, {1, 2, 6, 1, 3, 1, 2}, {1, 2, 5, 2, 3, 1, 3}, {1, 2, 4, 3, 3, 5, 0},
    {1, 1, 8, 0, 2, 1, 1}, {1, 1, 7, 1, 2, 1, 2}, {1, 1, 6, 2, 2, 1, 3}, {1, 1, 5, 3, 2, 1, 4},
    {1, 1, 4, 4, 2, 4, 0},
};

template <std::size_t N>
std::vector<CaseRow> build(const Raw (&raw)[N], int edges, int budget) {
  std::vector<CaseRow> out;
  std::map<int, int> numbering;
  const char* name = edges == 3 ? "three-edge" : "four-edge";
  for (const Raw& r : raw) {
    CaseRow row;
    const int k = ++numbering[r.w];
    row.id = std::string(name) + " w=" + std::to_string(r.w) + " row " + std::to_string(k);
    row.edges = edges;
    row.opening = r.w;
    row.lata_remaining = budget - r.w;
    row.raj_remaining = budget - r.w - 1;
    row.lata = {r.x, r.y, r.z};
    row.raj = {r.q, r.r, r.s};
    out.push_back(row);
    CaseRow sw = row;
    sw.swapped = true;
    sw.id += " swapped";
    if (edges == 3) {
      std::swap(sw.lata[0], sw.lata[1]);
      std::swap(sw.raj[0], sw.raj[1]);
    } else {
      std::swap(sw.lata[1], sw.lata[2]);
      std::swap(sw.raj[1], sw.raj[2]);
    }
    // Identical placements by Lata make the swap a relabeling, not a new case.
    if (sw.lata != row.lata) out.push_back(sw);
  }
  return out;
}

void audit(const std::vector<CaseRow>& rows, std::vector<std::string>& issues) {
  for (const auto& r : rows) {
    const int lata = std::accumulate(r.lata.begin(), r.lata.end(), 0);
    const int raj = std::accumulate(r.raj.begin(), r.raj.end(), 0);
    if (lata != r.lata_remaining)
      issues.push_back(r.id + ": Lata places " + std::to_string(lata) + " but has " +
                       std::to_string(r.lata_remaining));
    if (raj > r.raj_remaining)
      issues.push_back(r.id + ": Raj places " + std::to_string(raj) + " but has " +
                       std::to_string(r.raj_remaining));
  }
  // Rows sharing Lata's already-played prefix must agree on Raj's next reply.
  for (int slot = 0; slot < rows.front().slots(); ++slot) {
    std::map<std::vector<int>, std::set<int>> seen;
    std::map<std::vector<int>, std::vector<std::string>> who;
    for (const auto& r : rows) {
      std::vector<int> prefix{r.lata_remaining};
      for (int j = 0; j <= slot; ++j) prefix.push_back(r.lata[j]);
      seen[prefix].insert(r.raj[slot]);
      who[prefix].push_back(r.id);
    }
    for (const auto& [prefix, replies] : seen) {
      if (replies.size() < 2) continue;
      std::string msg = "ambiguous reply on slot " + std::to_string(slot + 1) + " after Lata played";
      for (std::size_t j = 1; j < prefix.size(); ++j) msg += " " + std::to_string(prefix[j]);
      msg += " with " + std::to_string(prefix[0]) + " left:";
      for (int v : replies) msg += " " + std::to_string(v);
      msg += " (";
      for (std::size_t j = 0; j < who[prefix].size(); ++j) msg += (j ? ", " : "") + who[prefix][j];
      msg += ")";
      issues.push_back(msg);
    }
  }
}

}  // namespace

const std::vector<CaseRow>& three_edge_rows() {
  static const std::vector<CaseRow> rows = build(kThree, 3, 9);
  return rows;
}

const std::vector<CaseRow>& four_edge_rows() {
  static const std::vector<CaseRow> rows = build(kFour, 4, 10);
  return rows;
}

std::vector<std::string> audit_case_rows() {
  std::vector<std::string> issues;
  audit(three_edge_rows(), issues);
  audit(four_edge_rows(), issues);
  return issues;
}

}  // namespace aggression
