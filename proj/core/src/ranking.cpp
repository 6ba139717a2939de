#include "tsum/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsum {

DenseRanking dense_ranks(std::span<const Rational> values) {
    if (values.empty()) {
        throw std::invalid_argument("dense_ranks: empty input");
    }
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return values[x] < values[y];
    });

    DenseRanking ranking;
    ranking.rank_of.resize(values.size());
    std::uint64_t rank = 0;
    ranking.rank_of[order[0]] = 0;
    for (std::size_t p = 1; p < order.size(); ++p) {
        if (values[order[p - 1]] < values[order[p]]) {
            ++rank;
        }
        ranking.rank_of[order[p]] = rank;
    }
    ranking.distinct_count = rank + 1;
    return ranking;
}

} // namespace tsum
