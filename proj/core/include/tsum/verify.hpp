#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tsum/any_codec.hpp"
#include "tsum/instance.hpp"
#include "tsum/sign.hpp"

namespace tsum {

struct Mismatch {
    std::size_t i, j, k;
    Sign expected;
    Sign got;
};

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyReport {
    CodecId codec;
    std::size_t n = 0;
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t checked = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<Mismatch> mismatches; // capped at kMaxListed

    static constexpr std::size_t kMaxListed = 100;
    bool ok() const { return mismatch_count == 0; }
};

/// Checks every n^3 triple of the encoding against the exact oracle.
/// Throws std::invalid_argument when instance and encoding disagree on n.
VerifyReport verify_exhaustive(const Instance& inst, const AnyEncoding& enc);

/// Checks `samples` uniformly random triples, deterministic per seed.
VerifyReport verify_sampled(const Instance& inst, const AnyEncoding& enc,
                            std::uint64_t samples, std::uint64_t seed);

void print_report(std::ostream& os, const VerifyReport& report);

} // namespace tsum
