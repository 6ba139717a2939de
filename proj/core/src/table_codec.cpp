#include "tsum/table_codec.hpp"

#include <stdexcept>

#include "tsum/envelope.hpp"
#include "tsum/errors.hpp"

namespace tsum {

namespace {

void check_index(std::size_t v, std::size_t n, const char* name) {
    if (v < 1 || v > n) {
        throw std::out_of_range(std::string(name) + " index out of range");
    }
}

} // namespace

PairwiseThresholds pairwise_thresholds(const Instance& inst) {
    require_valid(inst);
    const std::size_t n = inst.n();

    // Targets t_k = -c_k, strictly decreasing in k. For a pair sum s,
    // k_lt = |{k : s < t_k}| (a prefix of [1..n]) and k_gt is the start of
    // the suffix {k : s > t_k}, n+1 if empty.
    std::vector<mpq_class> t(n);
    for (std::size_t k = 0; k < n; ++k) {
        t[k] = -inst.c[k].mpq();
    }

    PairwiseThresholds th;
    th.n = n;
    th.k_lt.resize(n * n);
    th.k_gt.resize(n * n);

    mpq_class s;
    for (std::size_t i = 0; i < n; ++i) {
        // Both pointers move monotonically as j grows, so each row costs O(n).
        std::size_t lt = n;     // current k_lt
        std::size_t gt = n + 1; // current k_gt
        for (std::size_t j = 0; j < n; ++j) {
            s = inst.a[i].mpq() + inst.b[j].mpq();
            while (lt >= 1 && mpq_cmp(s.get_mpq_t(), t[lt - 1].get_mpq_t()) >= 0) {
                --lt;
            }
            while (gt >= 2 && mpq_cmp(s.get_mpq_t(), t[gt - 2].get_mpq_t()) > 0) {
                --gt;
            }
            th.k_lt[i * n + j] = static_cast<std::uint32_t>(lt);
            th.k_gt[i * n + j] = static_cast<std::uint32_t>(gt);
        }
    }
    return th;
}

TrivialEncoding TrivialEncoding::build(const Instance& inst) {
    auto th = pairwise_thresholds(inst);
    const std::size_t n = inst.n();
    TrivialEncoding enc;
    enc.n_ = n;
    enc.table_ = BitArray(n * n * n, 2);
    std::size_t flat = 0;
    for (std::size_t ij = 0; ij < n * n; ++ij) {
        std::uint32_t lt = th.k_lt[ij];
        std::uint32_t gt = th.k_gt[ij];
        for (std::size_t k = 1; k <= n; ++k, ++flat) {
            std::uint64_t code = k <= lt ? 0 : (k >= gt ? 2 : 1);
            enc.table_.set(flat, code);
        }
    }
    return enc;
}

Sign TrivialEncoding::query(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i, n_, "i");
    check_index(j, n_, "j");
    check_index(k, n_, "k");
    std::uint64_t code = table_.read(((i - 1) * n_ + (j - 1)) * n_ + (k - 1));
    switch (code) {
        case 0: return Sign::Minus;
        case 1: return Sign::Zero;
        case 2: return Sign::Plus;
        default: throw CorruptEncoding("reserved sign code 11 in trivial table");
    }
}

std::vector<std::uint8_t> TrivialEncoding::seal() const {
    BitWriter w;
    w.put_array(table_);
    return envelope_seal(CodecId::Trivial, n_, w.bit_count(), w.bytes());
}

TrivialEncoding TrivialEncoding::open(std::span<const std::uint8_t> bytes) {
    Payload p = envelope_open(bytes);
    if (p.codec != CodecId::Trivial) {
        throw CorruptEncoding("not a trivial encoding");
    }
    std::size_t n = static_cast<std::size_t>(p.n);
    // wide arithmetic so oversized n cannot wrap the size check
    unsigned __int128 expect = 2 * static_cast<unsigned __int128>(n) * n * n;
    if (n == 0 || expect != p.bit_length) {
        throw CorruptEncoding("trivial payload bit length mismatch");
    }
    BitReader r(p.bytes, p.bit_length);
    TrivialEncoding enc;
    enc.n_ = n;
    enc.table_ = r.get_array(n * n * n, 2);
    return enc;
}

PairwiseEncoding PairwiseEncoding::build(const Instance& inst) {
    auto th = pairwise_thresholds(inst);
    const std::size_t n = inst.n();
    const unsigned width = bits_for(n + 2); // sentinels 0 and n+1 stored verbatim
    PairwiseEncoding enc;
    enc.n_ = n;
    enc.k_lt_ = BitArray(n * n, width);
    enc.k_gt_ = BitArray(n * n, width);
    for (std::size_t ij = 0; ij < n * n; ++ij) {
        enc.k_lt_.set(ij, th.k_lt[ij]);
        enc.k_gt_.set(ij, th.k_gt[ij]);
    }
    return enc;
}

std::uint64_t PairwiseEncoding::lt(std::size_t i, std::size_t j) const {
    check_index(i, n_, "i");
    check_index(j, n_, "j");
    return k_lt_.read((i - 1) * n_ + (j - 1));
}

std::uint64_t PairwiseEncoding::gt(std::size_t i, std::size_t j) const {
    check_index(i, n_, "i");
    check_index(j, n_, "j");
    return k_gt_.read((i - 1) * n_ + (j - 1));
}

Sign PairwiseEncoding::query(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i, n_, "i");
    check_index(j, n_, "j");
    check_index(k, n_, "k");
    std::size_t ij = (i - 1) * n_ + (j - 1);
    if (k <= k_lt_.read(ij)) return Sign::Minus;
    if (k >= k_gt_.read(ij)) return Sign::Plus;
    return Sign::Zero;
}

std::vector<std::uint8_t> PairwiseEncoding::seal() const {
    BitWriter w;
    w.put_array(k_lt_);
    w.put_array(k_gt_);
    return envelope_seal(CodecId::Pairwise, n_, w.bit_count(), w.bytes());
}

PairwiseEncoding PairwiseEncoding::open(std::span<const std::uint8_t> bytes) {
    Payload p = envelope_open(bytes);
    if (p.codec != CodecId::Pairwise) {
        throw CorruptEncoding("not a pairwise encoding");
    }
    std::size_t n = static_cast<std::size_t>(p.n);
    if (n == 0 || p.n > (1ull << 32)) {
        throw CorruptEncoding("pairwise payload bit length mismatch");
    }
    const unsigned width = bits_for(n + 2);
    unsigned __int128 expect = 2 * static_cast<unsigned __int128>(n) * n * width;
    if (expect != p.bit_length) {
        throw CorruptEncoding("pairwise payload bit length mismatch");
    }
    BitReader r(p.bytes, p.bit_length);
    PairwiseEncoding enc;
    enc.n_ = n;
    enc.k_lt_ = r.get_array(n * n, width);
    enc.k_gt_ = r.get_array(n * n, width);
    return enc;
}

} // namespace tsum
