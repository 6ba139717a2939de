#pragma once

#include <cstddef>
#include <vector>

#include "tsum/instance.hpp"
#include "tsum/sign.hpp"

namespace tsum {

/// sign(a_i + b_j + c_k) by exact rational arithmetic. Indices are 1-based.
/// This is the ground truth every encoder is tested against.
Sign oracle_sign(const Instance& inst, std::size_t i, std::size_t j, std::size_t k);

/// Dense map of all n^3 signs, flat index ((i-1)n + (j-1))n + (k-1).
/// Monotone non-decreasing along each of the three indices.
struct TypeTable {
    std::size_t n = 0;
    std::vector<Sign> signs;

    Sign at(std::size_t i, std::size_t j, std::size_t k) const;

    friend bool operator==(const TypeTable& x, const TypeTable& y) = default;
};

TypeTable type_table(const Instance& inst);

/// True iff both instances have identical type tables entrywise.
bool equivalent(const Instance& x, const Instance& y);
bool equivalent(const Instance& x, const IntegerInstance& y);
bool equivalent(const IntegerInstance& x, const Instance& y);
bool equivalent(const IntegerInstance& x, const IntegerInstance& y);

} // namespace tsum
