#include "tsum/verify.hpp"

#include <ostream>
#include <random>
#include <stdexcept>

#include "tsum/oracle.hpp"

namespace tsum {

namespace {

void record(VerifyReport& report, std::size_t i, std::size_t j, std::size_t k,
            Sign expected, Sign got) {
    if (expected == got) return;
    ++report.mismatch_count;
    if (report.mismatches.size() < VerifyReport::kMaxListed) {
        report.mismatches.push_back({i, j, k, expected, got});
    }
}

void check_same_n(const Instance& inst, const AnyEncoding& enc) {
    if (inst.n() != enc.n()) {
        throw std::invalid_argument("instance and encoding disagree on n");
    }
}

} // namespace

VerifyReport verify_exhaustive(const Instance& inst, const AnyEncoding& enc) {
    check_same_n(inst, enc);
    const std::size_t n = inst.n();
    VerifyReport report;
    report.codec = enc.codec();
    report.n = n;
    report.mode = VerifyMode::Exhaustive;
    mpq_class pair_sum, sum;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            pair_sum = inst.a[i - 1].mpq() + inst.b[j - 1].mpq();
            for (std::size_t k = 1; k <= n; ++k) {
                sum = pair_sum + inst.c[k - 1].mpq();
                Sign expected = sign_of_cmp(sgn(sum));
                record(report, i, j, k, expected, enc.query(i, j, k));
                ++report.checked;
            }
        }
    }
    return report;
}

VerifyReport verify_sampled(const Instance& inst, const AnyEncoding& enc,
                            std::uint64_t samples, std::uint64_t seed) {
    check_same_n(inst, enc);
    const std::size_t n = inst.n();
    VerifyReport report;
    report.codec = enc.codec();
    report.n = n;
    report.mode = VerifyMode::Sampled;
    report.samples = samples;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(1, n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t i = dist(rng), j = dist(rng), k = dist(rng);
        record(report, i, j, k, oracle_sign(inst, i, j, k), enc.query(i, j, k));
        ++report.checked;
    }
    return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
    os << "codec=" << codec_name(report.codec) << " n=" << report.n << " mode="
       << (report.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled");
    if (report.mode == VerifyMode::Sampled) {
        os << " samples=" << report.samples << " seed=" << report.seed;
    }
    os << " checked=" << report.checked << " mismatches=" << report.mismatch_count << '\n';
    for (const auto& mm : report.mismatches) {
        os << "mismatch i=" << mm.i << " j=" << mm.j << " k=" << mm.k
           << " expected=" << mm.expected << " got=" << mm.got << '\n';
    }
    if (report.mismatch_count > report.mismatches.size()) {
        os << "... " << (report.mismatch_count - report.mismatches.size())
           << " more mismatches not listed\n";
    }
}

} // namespace tsum
