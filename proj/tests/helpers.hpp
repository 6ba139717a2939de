#pragma once

// Shared brute-force helpers for the test suites. These deliberately avoid
// the encoder code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tsum/instance.hpp"
#include "tsum/rational.hpp"
#include "tsum/sign.hpp"

namespace test_helpers {

using tsum::Instance;
using tsum::Rational;
using tsum::Sign;

// Direct definition: sign of a_i + b_j + c_k, 1-based indices.
inline Sign brute_sign(const Instance& inst, std::size_t i, std::size_t j, std::size_t k) {
    Rational sum = inst.a[i - 1] + inst.b[j - 1] + inst.c[k - 1];
    return sum.sign();
}

// Scans every entry of grid square (I, J) and reports which relations to t
// occur. Independent of BlockGeometry corner shortcuts.
struct SquareScan {
    bool below = false;
    bool equal = false;
    bool above = false;
};

inline SquareScan scan_square(const Instance& inst, const Rational& t, std::size_t s,
                              std::size_t I, std::size_t J) {
    SquareScan scan;
    const std::size_t n = inst.n();
    std::size_t rlo = (I - 1) * s + 1, rhi = std::min(I * s, n);
    std::size_t clo = (J - 1) * s + 1, chi = std::min(J * s, n);
    for (std::size_t i = rlo; i <= rhi; ++i) {
        for (std::size_t j = clo; j <= chi; ++j) {
            Rational g = inst.a[i - 1] + inst.b[j - 1];
            if (g < t) scan.below = true;
            else if (g == t) scan.equal = true;
            else scan.above = true;
        }
    }
    return scan;
}

// The instance with all values negated (arrays reversed to stay increasing).
inline Instance negated_reversed(const Instance& inst) {
    Instance out;
    const std::size_t n = inst.n();
    out.a.reserve(n);
    out.b.reserve(n);
    out.c.reserve(n);
    for (std::size_t i = n; i >= 1; --i) out.a.push_back(-inst.a[i - 1]);
    for (std::size_t i = n; i >= 1; --i) out.b.push_back(-inst.b[i - 1]);
    for (std::size_t i = n; i >= 1; --i) out.c.push_back(-inst.c[i - 1]);
    return out;
}

} // namespace test_helpers
