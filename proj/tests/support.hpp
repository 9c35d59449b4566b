#pragma once

#include <string>

#include "abcvote/io.hpp"

namespace abcvote::test {

inline BallotProfile profile_of(const std::string& text) { return parse_profile(text).profile; }

// 3x{0,1}, 2x{2}, 2x{2,3}, {4}, {0,4}; n = 9. Used across rule tests.
inline BallotProfile mixed_profile() { return profile_of("m 5\n3: 0 1\n2: 2\n2: 2 3\n1: 4\n1: 0 4\n"); }

}  // namespace abcvote::test
