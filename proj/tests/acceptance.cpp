// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "tsum/any_codec.hpp"
#include "tsum/bit_array.hpp"
#include "tsum/envelope.hpp"
#include "tsum/generators.hpp"
#include "tsum/instance.hpp"
#include "tsum/oracle.hpp"
#include "tsum/ranking.hpp"
#include "tsum/staircase_codec.hpp"
#include "tsum/table_codec.hpp"
#include "tsum/verify.hpp"
#include "tsum/vertex_codec.hpp"

using namespace tsum;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

constexpr std::uint64_t kMagnitude = 1'000'000;

struct Corpus {
    // name -> instance, per n: random seeds 1..5, ties, fibonacci (n >= 2)
    static std::vector<std::pair<std::string, Instance>> at(std::size_t n) {
        std::vector<std::pair<std::string, Instance>> out;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            out.emplace_back("random/seed" + std::to_string(seed),
                             gen_random(n, seed, std::max<std::uint64_t>(n, kMagnitude)));
        }
        out.emplace_back("ties", gen_ties(n));
        if (n >= 2) out.emplace_back("fibonacci", gen_fibonacci(n));
        return out;
    }
};

const std::vector<std::size_t> kSmallSizes = {1, 2, 3, 4, 5, 8, 9, 16, 25, 36, 49, 64};
const std::vector<std::size_t> kLargeSizes = {256, 1024, 4096};

// staircase encodings reused across criteria (n -> instance name -> encoding)
std::map<std::pair<std::size_t, std::string>, StaircaseEncoding> g_staircases;

const StaircaseEncoding& staircase_for(std::size_t n, const std::string& name,
                                       const Instance& inst) {
    auto key = std::make_pair(n, name);
    auto it = g_staircases.find(key);
    if (it == g_staircases.end()) {
        it = g_staircases.emplace(key, StaircaseEncoding::build(inst)).first;
    }
    return it->second;
}

Instance random_large(std::size_t n) { return gen_random(n, 1, kMagnitude); }

void criterion1_oracle_equivalence() {
    auto start = Clock::now();
    std::uint64_t encodings = 0, mismatches = 0;
    std::ostringstream fails;
    for (std::size_t n : kSmallSizes) {
        for (const auto& [name, inst] : Corpus::at(n)) {
            std::vector<CodecId> codecs = {CodecId::Trivial, CodecId::Pairwise, CodecId::Staircase};
            if (n <= 12) codecs.push_back(CodecId::Vertex);
            for (CodecId codec : codecs) {
                auto enc = AnyEncoding::open(AnyEncoding::build(codec, inst).seal());
                auto rep = verify_exhaustive(inst, enc);
                ++encodings;
                if (!rep.ok()) {
                    mismatches += rep.mismatch_count;
                    fails << " [" << codec_name(codec) << " n=" << n << " " << name << ": "
                          << rep.mismatch_count << "]";
                }
            }
        }
    }
    double elapsed = seconds_since(start);
    bool pass = mismatches == 0 && elapsed < 300.0;
    std::ostringstream detail;
    detail << "oracle equivalence, exhaustive: " << encodings << " encodings, " << mismatches
           << " mismatches, " << elapsed << " s (budget 300 s)" << fails.str();
    report(1, pass, detail.str());
}

void criterion2_space_laws() {
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t n : kSmallSizes) {
        auto inst = gen_random(n, 1, std::max<std::uint64_t>(n, kMagnitude));
        auto trivial = TrivialEncoding::build(inst);
        if (trivial.payload_bits() != 2ull * n * n * n) {
            pass = false;
            detail << " [trivial n=" << n << " bits=" << trivial.payload_bits() << "]";
        }
        auto pairwise = PairwiseEncoding::build(inst);
        if (pairwise.payload_bits() != 2ull * n * n * bits_for(n + 2)) {
            pass = false;
            detail << " [pairwise n=" << n << " bits=" << pairwise.payload_bits() << "]";
        }
        if (n <= 12) {
            auto vertex = VertexEncoding::build(inst);
            if (vertex.payload_bits() > 3ull * n * (4 + 3 * bits_for(n + 2))) {
                pass = false;
                detail << " [vertex n=" << n << " bits=" << vertex.payload_bits() << "]";
            }
        }
    }
    std::vector<double> payloads;
    for (std::size_t n : kLargeSizes) {
        const auto& enc = staircase_for(n, "random/seed1", random_large(n));
        double bits = static_cast<double>(enc.payload_bits());
        double norm = bits / (std::pow(static_cast<double>(n), 1.5) *
                              std::log2(static_cast<double>(n) + 2));
        payloads.push_back(bits);
        detail << " [staircase n=" << n << " bits/(n^1.5 lg)=" << norm << "]";
        if (norm > 40.0) pass = false;
    }
    for (std::size_t step = 0; step + 1 < payloads.size(); ++step) {
        double ratio = payloads[step + 1] / payloads[step];
        detail << " [growth x4 -> " << ratio << "]";
        if (ratio < 5.5 || ratio > 10.0) pass = false;
    }
    report(2, pass, "space laws:" + detail.str());
}

void criterion3_constant_query() {
    auto max_reads = [](const StaircaseEncoding& enc, std::size_t n) {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<std::size_t> dist(1, n);
        std::uint64_t worst = 0;
        for (int q = 0; q < 100'000; ++q) {
            ReadStats stats;
            enc.query(dist(rng), dist(rng), dist(rng), &stats);
            worst = std::max(worst, stats.reads);
        }
        return worst;
    };
    auto small = StaircaseEncoding::build(gen_random(64, 1, kMagnitude));
    const auto& large = staircase_for(4096, "random/seed1", random_large(4096));
    std::uint64_t reads64 = max_reads(small, 64);
    std::uint64_t reads4096 = max_reads(large, 4096);
    bool pass = reads64 == reads4096 && reads64 <= 16;
    std::ostringstream detail;
    detail << "constant-time query: max reads over 1e5 queries, n=64 -> " << reads64
           << ", n=4096 -> " << reads4096 << " (bound 16)";
    report(3, pass, detail.str());
}

void criterion4_sparsity() {
    bool pass = true;
    std::uint64_t staircases = 0;
    std::ostringstream detail;
    auto check = [&](std::size_t n, const std::string& name, const StaircaseEncoding& enc) {
        auto g = enc.geometry();
        ++staircases;
        for (std::size_t k = 1; k <= n; ++k) {
            if (enc.record_count(k) > 4 * g.m + 2) {
                pass = false;
                detail << " [n=" << n << " " << name << " k=" << k << " records="
                       << enc.record_count(k) << " bound=" << 4 * g.m + 2 << "]";
                return;
            }
        }
    };
    for (std::size_t n : kSmallSizes) {
        for (const auto& [name, inst] : Corpus::at(n)) {
            check(n, name, StaircaseEncoding::build(inst));
        }
    }
    for (std::size_t n : kLargeSizes) {
        check(n, "random/seed1", staircase_for(n, "random/seed1", random_large(n)));
        check(n, "ties", staircase_for(n, "ties", gen_ties(n)));
        check(n, "fibonacci", staircase_for(n, "fibonacci", gen_fibonacci(n)));
    }
    std::ostringstream head;
    head << "staircase sparsity <= 4m+2 per c: " << staircases << " encodings";
    report(4, pass, head.str() + detail.str());
}

void criterion5_integer_rounding() {
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t n : kSmallSizes) {
        if (n > 12) break;
        for (const auto& [name, inst] : Corpus::at(n)) {
            auto rounded = round_to_integers(inst);
            if (!equivalent(inst, rounded)) {
                pass = false;
                detail << " [n=" << n << " " << name << " not equivalent]";
                continue;
            }
            for (const auto* arr : {&rounded.a, &rounded.b, &rounded.c}) {
                for (const auto& v : *arr) {
                    if (v != 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > 12 * n) {
                        pass = false;
                        detail << " [n=" << n << " " << name << " bitlen "
                               << mpz_sizeinbase(v.get_mpz_t(), 2) << " > " << 12 * n << "]";
                    }
                }
            }
        }
    }
    // Fibonacci growth: the rounded instance needs values >= F_n (F_1 = F_2 = 1).
    std::vector<unsigned long> fib = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    for (std::size_t n = 5; n <= 12; ++n) {
        auto rounded = round_to_integers(gen_fibonacci(n));
        BigInt max_abs = 0;
        for (const auto* arr : {&rounded.a, &rounded.b, &rounded.c}) {
            for (const auto& v : *arr) {
                BigInt a = abs(v);
                if (a > max_abs) max_abs = a;
            }
        }
        if (max_abs < fib[n]) {
            pass = false;
            detail << " [fib n=" << n << " max=" << max_abs.get_str() << " < F_n=" << fib[n] << "]";
        }
    }
    report(5, pass, "integer rounding: equivalence, bit length <= 12n, Fibonacci growth" +
                        detail.str());
}

void criterion6_vertex_roundtrip() {
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t n : kSmallSizes) {
        if (n > 12) break;
        for (const auto& [name, inst] : Corpus::at(n)) {
            auto sol = solve_vertex(build_constraints(inst));
            auto decoded = decode_basis(encode_basis(sol.basis));
            if (!equivalent(inst, decoded)) {
                pass = false;
                detail << " [n=" << n << " " << name << " round-trip mismatch]";
            }
        }
    }
    // Payload growth in the n log n regime; LP budget 600 s at n=32, with the
    // allowed fallback to the n=16 cap when exceeded.
    std::vector<std::size_t> sizes = {4, 8, 16, 32};
    std::vector<double> bits;
    for (std::size_t n : sizes) {
        auto inst = gen_random(n, 1, kMagnitude);
        auto start = Clock::now();
        auto enc = VertexEncoding::build(inst);
        double elapsed = seconds_since(start);
        detail << " [n=" << n << " " << elapsed << " s]";
        if (n == 32 && elapsed > 600.0) {
            detail << " [n=32 over budget, capping at n=16]";
            break;
        }
        bits.push_back(static_cast<double>(enc.payload_bits()));
    }
    for (std::size_t step = 0; step + 1 < bits.size(); ++step) {
        double ratio = bits[step + 1] / bits[step];
        detail << " [growth x2 -> " << ratio << "]";
        if (ratio < 1.8 || ratio > 2.6) pass = false;
    }
    report(6, pass, "vertex round-trip and payload growth:" + detail.str());
}

void criterion7_preprocessing_budget() {
    auto t0 = Clock::now();
    auto staircase = StaircaseEncoding::build(random_large(1024));
    double staircase_s = seconds_since(t0);

    auto t1 = Clock::now();
    auto pairwise = PairwiseEncoding::build(gen_random(4096, 1, kMagnitude));
    double pairwise_s = seconds_since(t1);

    bool pass = staircase_s < 60.0 && pairwise_s < 10.0;
    std::ostringstream detail;
    detail << "preprocessing: staircase n=1024 " << staircase_s << " s (< 60), pairwise n=4096 "
           << pairwise_s << " s (< 10); payloads " << staircase.payload_bits() << " / "
           << pairwise.payload_bits() << " bits";
    report(7, pass, detail.str());
}

void criterion8_property_suites() {
    bool pass = true;
    std::ostringstream detail;

    // Dense ranking order isomorphism over >= 1e5 random pairs.
    {
        std::mt19937_64 rng(500);
        std::uint64_t pairs = 0, wrong = 0;
        for (int iter = 0; iter < 30; ++iter) {
            std::size_t count = 60 + rng() % 40;
            std::vector<Rational> values;
            for (std::size_t i = 0; i < count; ++i) {
                long num = static_cast<long>(rng() % 101) - 50;
                long den = 1 + static_cast<long>(rng() % 9);
                values.emplace_back(BigInt(num), BigInt(den));
            }
            auto ranking = dense_ranks(values);
            for (std::size_t x = 0; x < count; ++x) {
                for (std::size_t y = 0; y < count; ++y) {
                    ++pairs;
                    bool lt_ok = (ranking.rank_of[x] < ranking.rank_of[y]) == (values[x] < values[y]);
                    bool eq_ok =
                        (ranking.rank_of[x] == ranking.rank_of[y]) == (values[x] == values[y]);
                    if (!lt_ok || !eq_ok) ++wrong;
                }
            }
        }
        if (pairs < 100'000 || wrong != 0) pass = false;
        detail << " [ranking pairs=" << pairs << " wrong=" << wrong << "]";
    }

    // Bit array and envelope round-trips over >= 1e4 random cases.
    {
        std::mt19937_64 rng(600);
        std::uint64_t cases = 0, wrong = 0;
        for (int iter = 0; iter < 10'000; ++iter) {
            unsigned width = 1 + static_cast<unsigned>(rng() % 64);
            std::size_t count = rng() % 24;
            std::vector<std::uint64_t> values(count);
            for (auto& v : values) {
                v = rng();
                if (width < 64) v &= (1ull << width) - 1;
            }
            auto arr = BitArray::pack(values, width);
            BitWriter w;
            w.put_array(arr);
            auto codec = static_cast<CodecId>(1 + rng() % 4);
            auto sealed = envelope_seal(codec, count, w.bit_count(), w.bytes());
            auto opened = envelope_open(sealed);
            BitReader r(opened.bytes, opened.bit_length);
            bool ok = opened.codec == codec && opened.n == count;
            for (std::size_t i = 0; i < count; ++i) ok &= r.get(width) == values[i];
            ok &= r.remaining() == 0;
            ++cases;
            if (!ok) ++wrong;
        }
        if (cases < 10'000 || wrong != 0) pass = false;
        detail << " [roundtrip cases=" << cases << " wrong=" << wrong << "]";
    }

    // V/H prefix/suffix laws against classify_square: all squares, all k.
    {
        std::uint64_t checks = 0, wrong = 0;
        for (std::size_t n : {4u, 16u, 49u, 64u}) {
            for (const auto& [name, inst] : Corpus::at(n)) {
                auto enc = StaircaseEncoding::build(inst);
                auto g = enc.geometry();
                for (std::size_t k = 1; k <= n; ++k) {
                    Rational t = -inst.c[k - 1];
                    for (std::size_t I = 1; I <= g.m; ++I) {
                        for (std::size_t J = 1; J <= g.m; ++J) {
                            auto cls = classify_square(inst, t, I, J);
                            Rational min_entry = inst.a[g.lo(I) - 1] + inst.b[g.lo(J) - 1];
                            Rational max_entry = inst.a[g.hi(I) - 1] + inst.b[g.hi(J) - 1];
                            bool lt = J <= enc.v_at(k, I);
                            bool gt = I >= enc.h_at(k, J);
                            ++checks;
                            if (lt != (min_entry < t) || gt != (max_entry > t)) ++wrong;
                            // classification consistency with the corner reads
                            bool cls_ok = true;
                            switch (cls) {
                                case SquareClass::Low: cls_ok = max_entry < t; break;
                                case SquareClass::High: cls_ok = min_entry > t; break;
                                case SquareClass::AllEqual:
                                    cls_ok = min_entry == t && max_entry == t;
                                    break;
                                case SquareClass::Straddle:
                                    cls_ok = min_entry <= t && t <= max_entry &&
                                             !(min_entry == t && max_entry == t);
                                    break;
                            }
                            if (!cls_ok) ++wrong;
                        }
                    }
                }
            }
        }
        if (wrong != 0) pass = false;
        detail << " [vh checks=" << checks << " wrong=" << wrong << "]";
    }

    // Type table monotonicity along each index.
    {
        std::uint64_t wrong = 0;
        for (std::size_t n : {6u, 9u, 12u}) {
            for (const auto& [name, inst] : Corpus::at(n)) {
                auto table = type_table(inst);
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 1; j <= n; ++j) {
                        for (std::size_t k = 1; k <= n; ++k) {
                            if (i < n && table.at(i, j, k) > table.at(i + 1, j, k)) ++wrong;
                            if (j < n && table.at(i, j, k) > table.at(i, j + 1, k)) ++wrong;
                            if (k < n && table.at(i, j, k) > table.at(i, j, k + 1)) ++wrong;
                        }
                    }
                }
            }
        }
        if (wrong != 0) pass = false;
        detail << " [monotonicity wrong=" << wrong << "]";
    }

    report(8, pass, "property suites:" + detail.str());
}

} // namespace

int main() {
    auto start = Clock::now();
    criterion1_oracle_equivalence();
    criterion2_space_laws();
    criterion3_constant_query();
    criterion4_sparsity();
    criterion5_integer_rounding();
    criterion6_vertex_roundtrip();
    criterion7_preprocessing_budget();
    criterion8_property_suites();
    std::cout << "acceptance: " << (8 - g_failures) << "/8 passed, " << seconds_since(start)
              << " s total" << std::endl;
    return g_failures;
}
