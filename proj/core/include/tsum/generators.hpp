#pragma once

#include <cstdint>

#include "tsum/instance.hpp"

namespace tsum {

/// Deterministic per seed (within this implementation). A and B are distinct
/// integers drawn without replacement from [-magnitude, magnitude]; C from
/// [-2*magnitude, 0] so that mixed signs are likely. Requires magnitude >= n.
Instance gen_random(std::size_t n, std::uint64_t seed, std::uint64_t magnitude);

/// a_1 = 1, a_2 = 2, a_i = a_{i-1} + a_{i-2}; b = a; c_i = -a_{n-i+1} - 1.
/// Satisfies a_i + b_1 + c_{n-i+1} = 0, a_1 + b_i + c_{n-i+1} = 0, and
/// a_{i-1} + b_{i-2} + c_{n-i+1} = -1 for i in {3..n}. Requires n >= 2.
Instance gen_fibonacci(std::size_t n);

/// A = (1..n), B = (1..n), C = (-2n .. -n-1); many triples sum to exactly 0.
Instance gen_ties(std::size_t n);

} // namespace tsum
