#include "tsum/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace tsum {

namespace {

std::vector<Rational> draw_distinct_sorted(std::size_t n, long long lo, long long hi,
                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    std::unordered_set<long long> seen;
    std::vector<long long> values;
    values.reserve(n);
    while (values.size() < n) {
        long long v = dist(rng);
        if (seen.insert(v).second) {
            values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    std::vector<Rational> out;
    out.reserve(n);
    for (long long v : values) out.emplace_back(static_cast<long>(v));
    return out;
}

} // namespace

Instance gen_random(std::size_t n, std::uint64_t seed, std::uint64_t magnitude) {
    if (n < 1) {
        throw std::invalid_argument("gen_random: n must be >= 1");
    }
    if (magnitude < n) {
        throw std::invalid_argument("gen_random: cannot draw " + std::to_string(n) +
                                    " distinct values, magnitude must be >= n");
    }
    if (magnitude > (1ull << 60)) {
        throw std::invalid_argument("gen_random: magnitude out of range");
    }
    const long long mag = static_cast<long long>(magnitude);
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.a = draw_distinct_sorted(n, -mag, mag, rng);
    inst.b = draw_distinct_sorted(n, -mag, mag, rng);
    inst.c = draw_distinct_sorted(n, -2 * mag, 0, rng);
    return inst;
}

Instance gen_fibonacci(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("gen_fibonacci: n must be >= 2");
    }
    std::vector<BigInt> fib(n);
    fib[0] = 1;
    fib[1] = 2;
    for (std::size_t i = 2; i < n; ++i) {
        fib[i] = fib[i - 1] + fib[i - 2];
    }
    Instance inst;
    inst.a.reserve(n);
    inst.b.reserve(n);
    inst.c.reserve(n);
    for (const auto& v : fib) {
        inst.a.emplace_back(v);
        inst.b.emplace_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        // c_i = -a_{n-i+1} - 1, increasing because fib decreases in reverse
        BigInt v = -fib[n - 1 - i] - 1;
        inst.c.emplace_back(v);
    }
    return inst;
}

Instance gen_ties(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("gen_ties: n must be >= 1");
    }
    Instance inst;
    inst.a.reserve(n);
    inst.b.reserve(n);
    inst.c.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        inst.a.emplace_back(static_cast<long>(i));
        inst.b.emplace_back(static_cast<long>(i));
        inst.c.emplace_back(static_cast<long>(i) - static_cast<long>(2 * n) - 1);
    }
    return inst;
}

} // namespace tsum
