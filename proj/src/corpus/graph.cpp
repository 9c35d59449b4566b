#include <algorithm>

#include "abcvote/corpus.hpp"
#include "abcvote/error.hpp"

namespace abcvote {

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size,
                               std::vector<std::pair<std::size_t, std::size_t>> edges)
    : left_(left_size), right_(right_size), edges_(std::move(edges)) {
  if (left_ == 0 || right_ == 0) throw InvalidArgument("graph sides must be non-empty");
  for (const auto& [l, r] : edges_) {
    if (l >= left_ || r >= right_) {
      throw InvalidArgument("edge " + std::to_string(l) + " " + std::to_string(r) + " out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  }
}

BipartiteGraph BipartiteGraph::complete(std::size_t left_size, std::size_t right_size) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t l = 0; l < left_size; ++l) {
    for (std::size_t r = 0; r < right_size; ++r) edges.emplace_back(l, r);
  }
  return BipartiteGraph(left_size, right_size, std::move(edges));
}

bool BipartiteGraph::has_edge(std::size_t l, std::size_t r) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{l, r});
}

std::vector<std::size_t> BipartiteGraph::left_neighbors(std::size_t r) const {
  std::vector<std::size_t> out;
  for (const auto& [l, rr] : edges_) {
    if (rr == r) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReducedInstance reduce_biclique(const BipartiteGraph& graph, std::size_t ell) {
  const std::size_t s = graph.right_size();
  if (s < 3) throw ConstraintViolation("right side needs s >= 3 vertices (s=" + std::to_string(s) + ")");
  if (ell < 3) throw ConstraintViolation("biclique size needs ell >= 3 (ell=" + std::to_string(ell) + ")");

  const std::size_t left = graph.left_size();
  const auto c1 = static_cast<Candidate>(left);
  const auto c1_prime = static_cast<Candidate>(left + ell - 1);
  const auto c2 = static_cast<Candidate>(left + 2 * (ell - 1));
  const std::size_t c2_size = s * ell + ell - 3 * s;
  const std::size_t m = c2 + c2_size;

  std::vector<Ballot> ballots;
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<Candidate> approvals;
    for (std::size_t l : graph.left_neighbors(r)) approvals.push_back(static_cast<Candidate>(l));
    for (std::size_t i = 0; i + 1 < ell; ++i) approvals.push_back(static_cast<Candidate>(c1 + i));
    ballots.push_back({CandidateSet(std::move(approvals)), 1});
  }
  {
    std::vector<Candidate> approvals;
    for (std::size_t l = 0; l < left; ++l) approvals.push_back(static_cast<Candidate>(l));
    for (std::size_t i = 0; i + 1 < ell; ++i) approvals.push_back(static_cast<Candidate>(c1_prime + i));
    ballots.push_back({CandidateSet(std::move(approvals)), ell * (s - 1)});
  }
  for (std::size_t i = 0; i < c2_size; ++i) ballots.push_back({CandidateSet{static_cast<Candidate>(c2 + i)}, 1});

  std::vector<Candidate> committee;
  for (Candidate c = c1; c < c2; ++c) committee.push_back(c);
  return ReducedInstance{BallotProfile(m, std::move(ballots)), 2 * ell - 2, Committee(std::move(committee))};
}

}  // namespace abcvote
