#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tsum/any_codec.hpp"

namespace tsum {

/// Measured payload size of one encoding, broken down per component, with
/// the ratios against the usual growth laws. The log factor in every ratio
/// is log2(n + 2), matching the stored field widths.
struct StatsReport {
    CodecId codec;
    std::size_t n = 0;
    std::uint64_t payload_bits = 0;
    std::vector<std::pair<std::string, std::uint64_t>> components;
    double per_n3 = 0;
    double per_n2_log = 0;
    double per_n15_log = 0;
    double per_n_log = 0;
};

StatsReport stats_for(const AnyEncoding& enc);

void print_stats(std::ostream& os, const StatsReport& report);

} // namespace tsum
