#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsum/rational.hpp"

namespace tsum {

/// Dense ranking of a multiset: equal values share one rank, ranks form a
/// contiguous range starting at 0, and comparing two ranks reproduces the
/// exact value comparison (including equality).
struct DenseRanking {
    std::size_t distinct_count = 0;
    std::vector<std::uint64_t> rank_of; // rank per input position
};

/// Throws std::invalid_argument on empty input.
DenseRanking dense_ranks(std::span<const Rational> values);

} // namespace tsum
