#pragma once

#include <cstddef>
#include <vector>

namespace affgr {

// A finite graded poset given by its Hasse diagram.
struct RankedPoset {
  std::vector<int> rank;
  std::vector<std::vector<int>> down;  // lower covers

  std::size_t size() const { return rank.size(); }
  std::vector<std::vector<int>> up() const;
  std::vector<int> rank_sizes() const;
};

// Isomorphism of Hasse diagrams (hence of posets): colour refinement on
// rank and cover degrees, then backtracking over the refined classes.
// Throws ResourceLimit after step_cap backtracking steps.
bool isomorphic(const RankedPoset& a, const RankedPoset& b, std::size_t step_cap = 50'000'000);

}  // namespace affgr
