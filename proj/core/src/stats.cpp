#include "tsum/stats.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace tsum {

StatsReport stats_for(const AnyEncoding& enc) {
    StatsReport report;
    report.codec = enc.codec();
    report.n = enc.n();
    report.payload_bits = enc.payload_bits();
    switch (enc.codec()) {
        case CodecId::Trivial:
            report.components.emplace_back("table", report.payload_bits);
            break;
        case CodecId::Pairwise:
            report.components.emplace_back("k_lt", report.payload_bits / 2);
            report.components.emplace_back("k_gt", report.payload_bits / 2);
            break;
        case CodecId::Staircase: {
            auto sizes = enc.staircase()->measure_bits();
            report.components.emplace_back("header", sizes.header_bits);
            report.components.emplace_back("diffs", sizes.diff_bits);
            report.components.emplace_back("vh", sizes.vh_bits);
            report.components.emplace_back("ranges", sizes.range_bits);
            report.components.emplace_back("records", sizes.record_bits);
            break;
        }
        case CodecId::Vertex:
            report.components.emplace_back("basis", report.payload_bits);
            break;
    }
    const double n = static_cast<double>(report.n);
    const double bits = static_cast<double>(report.payload_bits);
    const double log_n = std::log2(n + 2);
    report.per_n3 = bits / (n * n * n);
    report.per_n2_log = bits / (n * n * log_n);
    report.per_n15_log = bits / (n * std::sqrt(n) * log_n);
    report.per_n_log = bits / (n * log_n);
    return report;
}

void print_stats(std::ostream& os, const StatsReport& report) {
    os << "codec: " << codec_name(report.codec) << "  n: " << report.n
       << "  payload bits: " << report.payload_bits << '\n';
    for (const auto& [name, bits] : report.components) {
        os << "  " << std::left << std::setw(10) << name << std::right << std::setw(14) << bits
           << " bits\n";
    }
    os << std::setprecision(6);
    os << "codec=" << codec_name(report.codec) << '\n';
    os << "n=" << report.n << '\n';
    os << "payload_bits=" << report.payload_bits << '\n';
    for (const auto& [name, bits] : report.components) {
        os << "component." << name << "=" << bits << '\n';
    }
    os << "bits_per_n3=" << report.per_n3 << '\n';
    os << "bits_per_n2_log=" << report.per_n2_log << '\n';
    os << "bits_per_n15_log=" << report.per_n15_log << '\n';
    os << "bits_per_n_log=" << report.per_n_log << '\n';
}

} // namespace tsum
