#include "abcvote/candidate_set.hpp"

#include <iterator>

namespace abcvote {

CandidateSet::CandidateSet(std::vector<Candidate> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CandidateSet CandidateSet::range(Candidate first, std::size_t count) {
  std::vector<Candidate> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = first + static_cast<Candidate>(i);
  CandidateSet s;
  s.members_ = std::move(v);
  return s;
}

std::size_t intersection_size(const CandidateSet& a, const CandidateSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b) {
  std::vector<Candidate> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return CandidateSet(std::move(out));
}

CandidateSet set_union(const CandidateSet& a, const CandidateSet& b) {
  std::vector<Candidate> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return CandidateSet(std::move(out));
}

bool is_subset(const CandidateSet& inner, const CandidateSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::size_t hamming_distance(const CandidateSet& a, const CandidateSet& b) {
  return a.size() + b.size() - 2 * intersection_size(a, b);
}

std::string join_indices(const CandidateSet& s, char sep) {
  std::string out;
  for (Candidate c : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(c);
  }
  return out;
}

}  // namespace abcvote
