#pragma once

// Maximum bipartite matching by repeated augmenting-path search.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace ihd {

struct BipartiteMatching {
  std::vector<std::optional<std::size_t>> left_to_right;
  std::vector<std::optional<std::size_t>> right_to_left;
  std::size_t size = 0;

  bool saturates_left() const { return size == left_to_right.size(); }
};

/// adjacency[l] lists the right vertices adjacent to left vertex l. Left
/// vertices are augmented in index order and neighbours tried in list order,
/// so the result is deterministic.
inline BipartiteMatching maximum_matching(const std::vector<std::vector<std::size_t>>& adjacency,
                                          std::size_t right_count) {
  BipartiteMatching m;
  m.left_to_right.assign(adjacency.size(), std::nullopt);
  m.right_to_left.assign(right_count, std::nullopt);

  std::vector<char> visited(right_count, 0);
  auto augment = [&](auto&& self, std::size_t left) -> bool {
    for (std::size_t right : adjacency[left]) {
      if (visited[right]) continue;
      visited[right] = 1;
      if (!m.right_to_left[right] || self(self, *m.right_to_left[right])) {
        m.left_to_right[left] = right;
        m.right_to_left[right] = left;
        return true;
      }
    }
    return false;
  };

  for (std::size_t left = 0; left < adjacency.size(); ++left) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, left)) ++m.size;
  }
  return m;
}

}  // namespace ihd
