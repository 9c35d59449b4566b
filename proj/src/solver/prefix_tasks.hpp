#pragma once

#include <cstddef>
#include <vector>

#include "abcvote/candidate_set.hpp"

namespace abcvote::detail {

/// Splits the size-k committee tree over {0..m-1} into independent subtrees.
/// Each task is a feasible sorted prefix; tasks come out in lexicographic order,
/// so the subtree of task i precedes that of task i+1 in the committee order.
/// Serial searches use the single empty prefix.
inline std::vector<std::vector<Candidate>> split_prefixes(std::size_t m, std::size_t k, bool parallel) {
  std::vector<std::vector<Candidate>> tasks;
  const std::size_t depth = parallel ? (k < 2 ? k : 2) : 0;
  if (depth == 0) {
    tasks.emplace_back();
    return tasks;
  }
  std::vector<Candidate> prefix;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (prefix.size() == depth) {
      tasks.push_back(prefix);
      return;
    }
    const std::size_t remaining = k - prefix.size();
    for (std::size_t c = start; c + remaining <= m; ++c) {
      prefix.push_back(static_cast<Candidate>(c));
      self(self, c + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return tasks;
}

/// True when every committee extending `prefix` is lexicographically greater
/// than `key`.
inline bool completions_exceed(const std::vector<Candidate>& prefix, const std::vector<Candidate>& key) {
  for (std::size_t i = 0; i < prefix.size() && i < key.size(); ++i) {
    if (prefix[i] != key[i]) return prefix[i] > key[i];
  }
  return false;
}

}  // namespace abcvote::detail
