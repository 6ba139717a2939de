#include "tsum/staircase_codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsum/envelope.hpp"
#include "tsum/errors.hpp"
#include "tsum/ranking.hpp"

namespace tsum {

namespace {

void check_index(std::size_t v, std::size_t n, const char* name) {
    if (v < 1 || v > n) {
        throw std::out_of_range(std::string(name) + " index out of range");
    }
}

// Number of entries in the sorted range that are < u, resp. <= u.
std::size_t count_less(const std::vector<mpq_class>& arr, const mpq_class& u) {
    auto it = std::lower_bound(arr.begin(), arr.end(), u, [](const mpq_class& x, const mpq_class& v) {
        return mpq_cmp(x.get_mpq_t(), v.get_mpq_t()) < 0;
    });
    return static_cast<std::size_t>(it - arr.begin());
}

std::size_t count_leq(const std::vector<mpq_class>& arr, const mpq_class& u) {
    auto it = std::upper_bound(arr.begin(), arr.end(), u, [](const mpq_class& v, const mpq_class& x) {
        return mpq_cmp(v.get_mpq_t(), x.get_mpq_t()) < 0;
    });
    return static_cast<std::size_t>(it - arr.begin());
}

bool rat_less_q(const Rational& x, const mpq_class& u) {
    return mpq_cmp(x.mpq().get_mpq_t(), u.get_mpq_t()) < 0;
}

bool q_less_rat(const mpq_class& u, const Rational& x) {
    return mpq_cmp(u.get_mpq_t(), x.mpq().get_mpq_t()) < 0;
}

} // namespace

BlockGeometry BlockGeometry::for_n(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("block geometry needs n >= 1");
    }
    std::size_t s = 1;
    while (s * s < n) ++s;
    std::size_t m = (n + s - 1) / s;
    return BlockGeometry{n, s, m};
}

SquareClass classify_square(const Instance& inst, const Rational& t,
                            std::size_t I, std::size_t J) {
    const auto geom = BlockGeometry::for_n(inst.n());
    check_index(I, geom.m, "row band");
    check_index(J, geom.m, "column band");
    mpq_class min_entry = inst.a[geom.lo(I) - 1].mpq() + inst.b[geom.lo(J) - 1].mpq();
    mpq_class max_entry = inst.a[geom.hi(I) - 1].mpq() + inst.b[geom.hi(J) - 1].mpq();
    int cmin = mpq_cmp(min_entry.get_mpq_t(), t.mpq().get_mpq_t());
    int cmax = mpq_cmp(max_entry.get_mpq_t(), t.mpq().get_mpq_t());
    if (cmax < 0) return SquareClass::Low;
    if (cmin > 0) return SquareClass::High;
    if (cmin == 0 && cmax == 0) return SquareClass::AllEqual;
    return SquareClass::Straddle;
}

StaircaseEncoding StaircaseEncoding::build(const Instance& inst) {
    require_valid(inst);
    const auto geom = BlockGeometry::for_n(inst.n());
    const std::size_t n = geom.n, s = geom.s, m = geom.m;

    StaircaseEncoding enc;
    enc.geom_ = geom;

    // Differences: every ordered intra-band pair of A and of B, pooled into
    // one multiset so that cross-family rank comparison is valid. Each band
    // gets a full s*s slot block; ragged-band padding slots stay zero.
    {
        std::vector<Rational> diffs;
        std::vector<std::pair<bool, std::size_t>> slots; // (is_b_family, slot)
        diffs.reserve(2 * m * s * s);
        slots.reserve(2 * m * s * s);
        for (int family = 0; family < 2; ++family) {
            const auto& arr = family == 0 ? inst.a : inst.b;
            for (std::size_t band = 1; band <= m; ++band) {
                const std::size_t base = geom.lo(band) - 1;
                const std::size_t size = geom.band_size(band);
                for (std::size_t x = 0; x < size; ++x) {
                    for (std::size_t y = 0; y < size; ++y) {
                        diffs.push_back(arr[base + x] - arr[base + y]);
                        slots.emplace_back(family == 1, enc.diff_slot(band, x, y));
                    }
                }
            }
        }
        auto ranking = dense_ranks(diffs);
        enc.distinct_ = ranking.distinct_count;
        enc.w_diff_ = bits_for(ranking.distinct_count + 1);
        enc.a_ranks_ = BitArray(m * s * s, enc.w_diff_);
        enc.b_ranks_ = BitArray(m * s * s, enc.w_diff_);
        for (std::size_t p = 0; p < slots.size(); ++p) {
            (slots[p].first ? enc.b_ranks_ : enc.a_ranks_).set(slots[p].second, ranking.rank_of[p]);
        }
    }

    // Band-corner values: the sum grid is monotone, so a square's min/max sit
    // at its corners and every per-band question becomes a binary search.
    std::vector<mpq_class> a_lo(m), a_hi(m), b_lo(m), b_hi(m);
    for (std::size_t band = 1; band <= m; ++band) {
        a_lo[band - 1] = inst.a[geom.lo(band) - 1].mpq();
        a_hi[band - 1] = inst.a[geom.hi(band) - 1].mpq();
        b_lo[band - 1] = inst.b[geom.lo(band) - 1].mpq();
        b_hi[band - 1] = inst.b[geom.hi(band) - 1].mpq();
    }

    const unsigned w_m = enc.w_band();
    const unsigned w_off = enc.w_offset();
    const unsigned w_s = enc.w_cell();
    const std::uint64_t absent = s + 1;

    enc.per_c_.resize(n);

    struct BandRange {
        std::size_t lo = 1, hi = 0; // empty when lo > hi
    };

    mpq_class t, u_lo, u_hi, u_row, cand;
    for (std::size_t k = 1; k <= n; ++k) {
        t = -inst.c[k - 1].mpq();
        PerC& pc = enc.per_c_[k - 1];
        pc.v = BitArray(m, w_m);
        pc.h = BitArray(m, w_m);
        pc.range_lo = BitArray(2 * m, w_m);
        pc.range_hi = BitArray(2 * m, w_m);
        pc.range_off = BitArray(2 * m, w_off);

        // H[J]: smallest I whose square max exceeds t, m+1 if none.
        for (std::size_t J = 1; J <= m; ++J) {
            u_hi = t - b_hi[J - 1];
            pc.h.set(J - 1, count_leq(a_hi, u_hi) + 1);
        }

        std::vector<BandRange> ranges(2 * m);
        std::uint64_t next_off = 0;
        std::vector<std::uint64_t> record_fields;
        auto emit_square = [&](std::size_t I, std::size_t J) {
            // Predecessor (max entry < t) and successor (min entry > t) of the
            // square, located by a binary search per row.
            bool has_pred = false, has_succ = false;
            std::size_t pr = 0, pcn = 0, sr = 0, scn = 0;
            mpq_class best_pred, best_succ;
            const std::size_t clo = geom.lo(J), chi = geom.hi(J);
            for (std::size_t gi = geom.lo(I); gi <= geom.hi(I); ++gi) {
                u_row = t - inst.a[gi - 1].mpq();
                auto first = inst.b.begin() + static_cast<std::ptrdiff_t>(clo - 1);
                auto last = inst.b.begin() + static_cast<std::ptrdiff_t>(chi);
                auto ge = std::lower_bound(first, last, u_row, rat_less_q);
                if (ge != first) {
                    auto j = static_cast<std::size_t>(ge - inst.b.begin()); // 1-based col of pred
                    cand = inst.a[gi - 1].mpq() + inst.b[j - 1].mpq();
                    if (!has_pred || mpq_cmp(cand.get_mpq_t(), best_pred.get_mpq_t()) > 0) {
                        has_pred = true;
                        best_pred = cand;
                        pr = gi - geom.lo(I) + 1;
                        pcn = j - clo + 1;
                    }
                }
                auto gt = std::upper_bound(first, last, u_row, q_less_rat);
                if (gt != last) {
                    auto j = static_cast<std::size_t>(gt - inst.b.begin()) + 1;
                    cand = inst.a[gi - 1].mpq() + inst.b[j - 1].mpq();
                    if (!has_succ || mpq_cmp(cand.get_mpq_t(), best_succ.get_mpq_t()) < 0) {
                        has_succ = true;
                        best_succ = cand;
                        sr = gi - geom.lo(I) + 1;
                        scn = j - clo + 1;
                    }
                }
            }
            record_fields.push_back(has_pred ? pr : absent);
            record_fields.push_back(has_pred ? pcn : absent);
            record_fields.push_back(has_succ ? sr : absent);
            record_fields.push_back(has_succ ? scn : absent);
        };

        for (std::size_t I = 1; I <= m; ++I) {
            u_lo = t - a_lo[I - 1];
            u_hi = t - a_hi[I - 1];
            std::size_t v = count_less(b_lo, u_lo); // largest J with square min < t
            pc.v.set(I - 1, v);

            // Straddlers of the {<t}/{>=t} boundary: min < t and max >= t.
            BandRange& r1 = ranges[I - 1];
            r1.lo = count_less(b_hi, u_hi) + 1;
            r1.hi = v;
            // Straddlers of the {<=t}/{>t} boundary: min <= t and max > t.
            BandRange& r2 = ranges[m + I - 1];
            r2.lo = count_leq(b_hi, u_hi) + 1;
            r2.hi = count_leq(b_lo, u_lo);
        }
        for (std::size_t d = 0; d < 2 * m; ++d) {
            const std::size_t I = d < m ? d + 1 : d - m + 1;
            BandRange& r = ranges[d];
            if (r.lo > r.hi) {
                r.lo = 1;
                r.hi = 0;
            }
            pc.range_lo.set(d, r.lo);
            pc.range_hi.set(d, r.hi);
            pc.range_off.set(d, r.lo <= r.hi ? next_off : 0);
            for (std::size_t J = r.lo; J <= r.hi; ++J) {
                emit_square(I, J);
                ++next_off;
            }
        }
        pc.records = BitArray(record_fields.size(), w_s);
        for (std::size_t p = 0; p < record_fields.size(); ++p) {
            pc.records.set(p, record_fields[p]);
        }
    }
    return enc;
}

Sign StaircaseEncoding::query(std::size_t i, std::size_t j, std::size_t k,
                              ReadStats* stats) const {
    const std::size_t n = geom_.n, s = geom_.s, m = geom_.m;
    check_index(i, n, "i");
    check_index(j, n, "j");
    check_index(k, n, "k");

    auto rd = [&](const BitArray& arr, std::size_t idx) {
        if (stats) ++stats->reads;
        return arr.read(idx);
    };

    const PerC& pc = per_c_[k - 1];
    const std::size_t I = geom_.band_of(i);
    const std::size_t J = geom_.band_of(j);
    const bool lt = J <= rd(pc.v, I - 1);    // square has an entry < t
    const bool gt = I >= rd(pc.h, J - 1);    // square has an entry > t
    if (!lt && !gt) {
        return Sign::Zero; // every entry equals t
    }

    // Both boundary descriptors of band I are read unconditionally so the
    // lookup count does not depend on which one matches.
    const std::size_t d1 = I - 1, d2 = m + I - 1;
    const std::uint64_t lo1 = rd(pc.range_lo, d1);
    const std::uint64_t hi1 = rd(pc.range_hi, d1);
    const std::uint64_t off1 = rd(pc.range_off, d1);
    const std::uint64_t lo2 = rd(pc.range_lo, d2);
    const std::uint64_t hi2 = rd(pc.range_hi, d2);
    const std::uint64_t off2 = rd(pc.range_off, d2);
    const bool in1 = lo1 <= J && J <= hi1;
    const bool in2 = lo2 <= J && J <= hi2;
    if (!in1 && !in2) {
        if (lt && !gt) return Sign::Minus; // square entirely < t
        if (!lt && gt) return Sign::Plus;  // square entirely > t
        throw CorruptEncoding("straddling square missing from staircase ranges");
    }

    const std::uint64_t rec = in1 ? off1 + (J - lo1) : off2 + (J - lo2);
    if ((rec + 1) * 4 > pc.records.size()) {
        throw CorruptEncoding("staircase record offset out of range");
    }
    const std::uint64_t pred_row = rd(pc.records, 4 * rec);
    const std::uint64_t pred_col = rd(pc.records, 4 * rec + 1);
    const std::uint64_t succ_row = rd(pc.records, 4 * rec + 2);
    const std::uint64_t succ_col = rd(pc.records, 4 * rec + 3);
    const std::uint64_t absent = s + 1;
    const bool has_pred = pred_row != absent;
    const bool has_succ = succ_row != absent;

    // sign(G[i,j] - G[p,q]) = sign((a_i - a_p) - (b_q - b_j)); both are
    // intra-band differences, compared through their pooled ranks.
    const std::size_t xi = i - geom_.lo(I);
    const std::size_t yj = j - geom_.lo(J);
    int cmp_pred = 0, cmp_succ = 0;
    if (has_pred) {
        if (pred_row < 1 || pred_row > s || pred_col < 1 || pred_col > s) {
            throw CorruptEncoding("staircase record cell out of range");
        }
        std::uint64_t ra = rd(a_ranks_, diff_slot(I, xi, pred_row - 1));
        std::uint64_t rb = rd(b_ranks_, diff_slot(J, pred_col - 1, yj));
        cmp_pred = ra < rb ? -1 : (ra > rb ? 1 : 0);
    }
    if (has_succ) {
        if (succ_row < 1 || succ_row > s || succ_col < 1 || succ_col > s) {
            throw CorruptEncoding("staircase record cell out of range");
        }
        std::uint64_t ra = rd(a_ranks_, diff_slot(I, xi, succ_row - 1));
        std::uint64_t rb = rd(b_ranks_, diff_slot(J, succ_col - 1, yj));
        cmp_succ = ra < rb ? -1 : (ra > rb ? 1 : 0);
    }

    if (has_pred && cmp_pred <= 0) return Sign::Minus; // at or below the last entry < t
    if (has_succ && cmp_succ >= 0) return Sign::Plus;  // at or above the first entry > t
    if (has_pred || has_succ) return Sign::Zero;       // strictly between them
    throw CorruptEncoding("staircase record with no neighbors");
}

StaircaseEncoding::SizeReport StaircaseEncoding::measure_bits() const {
    SizeReport report;
    report.header_bits = 3 * 64 + 64 + 8; // n, s, m, distinct count, diff width
    report.diff_bits = a_ranks_.bit_size() + b_ranks_.bit_size();
    for (const auto& pc : per_c_) {
        report.vh_bits += pc.v.bit_size() + pc.h.bit_size();
        report.range_bits += pc.range_lo.bit_size() + pc.range_hi.bit_size() + pc.range_off.bit_size();
        report.record_bits += pc.records.bit_size();
    }
    return report;
}

std::uint64_t StaircaseEncoding::v_at(std::size_t k, std::size_t I) const {
    check_index(k, geom_.n, "k");
    check_index(I, geom_.m, "row band");
    return per_c_[k - 1].v.read(I - 1);
}

std::uint64_t StaircaseEncoding::h_at(std::size_t k, std::size_t J) const {
    check_index(k, geom_.n, "k");
    check_index(J, geom_.m, "column band");
    return per_c_[k - 1].h.read(J - 1);
}

std::size_t StaircaseEncoding::record_count(std::size_t k) const {
    check_index(k, geom_.n, "k");
    return per_c_[k - 1].records.size() / 4;
}

StaircaseEncoding::RecordView StaircaseEncoding::record_at(std::size_t k, std::size_t idx) const {
    check_index(k, geom_.n, "k");
    const auto& rec = per_c_[k - 1].records;
    if ((idx + 1) * 4 > rec.size()) {
        throw std::out_of_range("record index out of range");
    }
    return RecordView{rec.read(4 * idx), rec.read(4 * idx + 1), rec.read(4 * idx + 2),
                      rec.read(4 * idx + 3)};
}

std::vector<std::uint8_t> StaircaseEncoding::seal() const {
    const std::size_t m = geom_.m;
    BitWriter w;
    w.put(geom_.n, 64);
    w.put(geom_.s, 64);
    w.put(geom_.m, 64);
    w.put(distinct_, 64);
    w.put(w_diff_, 8);
    w.put_array(a_ranks_);
    w.put_array(b_ranks_);
    for (const auto& pc : per_c_) {
        w.put_array(pc.v);
        w.put_array(pc.h);
        for (std::size_t d = 0; d < 2 * m; ++d) {
            w.put(pc.range_lo.read(d), pc.range_lo.width());
            w.put(pc.range_hi.read(d), pc.range_hi.width());
            w.put(pc.range_off.read(d), pc.range_off.width());
        }
        w.put_array(pc.records);
    }
    return envelope_seal(CodecId::Staircase, geom_.n, w.bit_count(), w.bytes());
}

StaircaseEncoding StaircaseEncoding::open(std::span<const std::uint8_t> bytes) {
    Payload p = envelope_open(bytes);
    if (p.codec != CodecId::Staircase) {
        throw CorruptEncoding("not a staircase encoding");
    }
    BitReader r(p.bytes, p.bit_length);
    StaircaseEncoding enc;
    const std::uint64_t n = r.get(64);
    const std::uint64_t s = r.get(64);
    const std::uint64_t m = r.get(64);
    if (n != p.n || n == 0 || n > (1ull << 32)) {
        throw CorruptEncoding("staircase header n mismatch");
    }
    enc.geom_ = BlockGeometry::for_n(n);
    if (enc.geom_.s != s || enc.geom_.m != m) {
        throw CorruptEncoding("staircase geometry mismatch");
    }
    enc.distinct_ = r.get(64);
    enc.w_diff_ = static_cast<unsigned>(r.get(8));
    if (enc.distinct_ < 1 || enc.w_diff_ != bits_for(enc.distinct_ + 1)) {
        throw CorruptEncoding("staircase diff width mismatch");
    }
    // Size sanity before any allocation scaled by header fields: the declared
    // payload must at least hold the rank arrays and the fixed per-k blocks.
    {
        const unsigned w_m = enc.w_band();
        const unsigned w_off = enc.w_offset();
        unsigned __int128 need = 2 * static_cast<unsigned __int128>(m) * s * s * enc.w_diff_;
        need += static_cast<unsigned __int128>(n) *
                (2 * static_cast<unsigned __int128>(m) * w_m +
                 2 * static_cast<unsigned __int128>(m) * (2 * w_m + w_off));
        if (need > p.bit_length) {
            throw CorruptEncoding("staircase payload too short for declared geometry");
        }
    }
    enc.a_ranks_ = r.get_array(m * s * s, enc.w_diff_);
    enc.b_ranks_ = r.get_array(m * s * s, enc.w_diff_);
    const unsigned w_m = enc.w_band();
    const unsigned w_off = enc.w_offset();
    const unsigned w_s = enc.w_cell();
    enc.per_c_.resize(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        PerC& pc = enc.per_c_[k];
        pc.v = r.get_array(m, w_m);
        pc.h = r.get_array(m, w_m);
        pc.range_lo = BitArray(2 * m, w_m);
        pc.range_hi = BitArray(2 * m, w_m);
        pc.range_off = BitArray(2 * m, w_off);
        std::uint64_t expected_off = 0;
        for (std::size_t d = 0; d < 2 * m; ++d) {
            std::uint64_t lo = r.get(w_m);
            std::uint64_t hi = r.get(w_m);
            std::uint64_t off = r.get(w_off);
            if (lo > hi) {
                if (lo != 1 || hi != 0 || off != 0) {
                    throw CorruptEncoding("staircase empty range not canonical");
                }
            } else {
                if (hi > m || lo < 1 || off != expected_off) {
                    throw CorruptEncoding("staircase range descriptor invalid");
                }
                expected_off += hi - lo + 1;
            }
            pc.range_lo.set(d, lo);
            pc.range_hi.set(d, hi);
            pc.range_off.set(d, off);
        }
        pc.records = r.get_array(4 * expected_off, w_s);
    }
    if (r.remaining() != 0) {
        throw CorruptEncoding("staircase payload has trailing bits");
    }
    return enc;
}

} // namespace tsum
