#include "abcvote/committee.hpp"

#include <algorithm>

#include "abcvote/error.hpp"

namespace abcvote {

Committee::Committee(std::vector<Candidate> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidArgument("committee lists a candidate twice");
  }
  members_ = CandidateSet(std::move(members));
}

void Committee::validate(std::size_t num_candidates) const {
  if (members_.span_end() > num_candidates) {
    throw InvalidArgument("committee member " + std::to_string(members_.span_end() - 1) +
                          " out of range for m=" + std::to_string(num_candidates));
  }
}

}  // namespace abcvote
