#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsum/bit_array.hpp"
#include "tsum/instance.hpp"
#include "tsum/sign.hpp"

namespace tsum {

/// Per pair (i,j), the largest k with a_i + b_j + c_k < 0 (0 if none) and the
/// smallest k with a_i + b_j + c_k > 0 (n+1 if none). Row-major in (i,j).
/// Computed with a two-pointer sweep in O(n^2) total.
struct PairwiseThresholds {
    std::size_t n = 0;
    std::vector<std::uint32_t> k_lt;
    std::vector<std::uint32_t> k_gt;

    std::uint32_t lt(std::size_t i, std::size_t j) const { return k_lt[(i - 1) * n + (j - 1)]; }
    std::uint32_t gt(std::size_t i, std::size_t j) const { return k_gt[(i - 1) * n + (j - 1)]; }
};

PairwiseThresholds pairwise_thresholds(const Instance& inst);

/// Dense n^3 sign table, two bits per entry (00 minus, 01 zero, 10 plus).
class TrivialEncoding {
public:
    static TrivialEncoding build(const Instance& inst);

    Sign query(std::size_t i, std::size_t j, std::size_t k) const;

    std::size_t n() const { return n_; }
    std::uint64_t payload_bits() const { return table_.bit_size(); }

    std::vector<std::uint8_t> seal() const;
    static TrivialEncoding open(std::span<const std::uint8_t> bytes);

private:
    std::size_t n_ = 0;
    BitArray table_;
};

/// The two thresholds per pair, each packed with width ceil(log2(n + 2)).
class PairwiseEncoding {
public:
    static PairwiseEncoding build(const Instance& inst);

    Sign query(std::size_t i, std::size_t j, std::size_t k) const;

    std::size_t n() const { return n_; }
    unsigned field_width() const { return k_lt_.width(); }
    std::uint64_t payload_bits() const { return k_lt_.bit_size() + k_gt_.bit_size(); }
    std::uint64_t lt(std::size_t i, std::size_t j) const;
    std::uint64_t gt(std::size_t i, std::size_t j) const;

    std::vector<std::uint8_t> seal() const;
    static PairwiseEncoding open(std::span<const std::uint8_t> bytes);

private:
    std::size_t n_ = 0;
    BitArray k_lt_;
    BitArray k_gt_;
};

} // namespace tsum
