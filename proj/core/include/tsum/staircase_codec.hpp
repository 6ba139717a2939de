#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsum/bit_array.hpp"
#include "tsum/instance.hpp"
#include "tsum/sign.hpp"

namespace tsum {

/// Square blocking of the index range [1, n]: side s = ceil(sqrt(n)),
/// m = ceil(n / s) bands. Band I covers (I-1)s+1 .. min(I*s, n); the last
/// band may be ragged. All field widths are functions of s and m only.
struct BlockGeometry {
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t m = 0;

    static BlockGeometry for_n(std::size_t n);

    std::size_t band_of(std::size_t i) const { return (i + s - 1) / s; }
    std::size_t lo(std::size_t band) const { return (band - 1) * s + 1; }
    std::size_t hi(std::size_t band) const { return band * s < n ? band * s : n; }
    std::size_t band_size(std::size_t band) const { return hi(band) - lo(band) + 1; }
};

/// Relation of a grid square's entries a_i + b_j to a target t. Since the sum
/// grid is strictly increasing in both indices, min is the square's top-left
/// entry and max its bottom-right entry, so classification reads two entries.
/// Build-time helper and the test oracle for the V/H arrays.
enum class SquareClass { Low, High, AllEqual, Straddle };

SquareClass classify_square(const Instance& inst, const Rational& t,
                            std::size_t I, std::size_t J);

/// Counts bit-field reads performed by a query.
struct ReadStats {
    std::uint64_t reads = 0;
};

/// The sqrt-blocked encoding: intra-band difference ranks, per-c staircase
/// arrays V/H with straddler ranges, and per-square neighbor records.
/// About N^1.5 log N bits total, constant table reads per query.
class StaircaseEncoding {
public:
    static StaircaseEncoding build(const Instance& inst);

    /// At most 16 bit-field reads per call, independent of n.
    Sign query(std::size_t i, std::size_t j, std::size_t k,
               ReadStats* stats = nullptr) const;

    struct SizeReport {
        std::uint64_t header_bits = 0;
        std::uint64_t diff_bits = 0;
        std::uint64_t vh_bits = 0;
        std::uint64_t range_bits = 0;
        std::uint64_t record_bits = 0;
        std::uint64_t total() const {
            return header_bits + diff_bits + vh_bits + range_bits + record_bits;
        }
    };
    SizeReport measure_bits() const;

    std::size_t n() const { return geom_.n; }
    const BlockGeometry& geometry() const { return geom_; }
    std::uint64_t payload_bits() const { return measure_bits().total(); }

    // introspection used by tests
    std::uint64_t v_at(std::size_t k, std::size_t I) const;
    std::uint64_t h_at(std::size_t k, std::size_t J) const;
    std::size_t record_count(std::size_t k) const;
    std::size_t diff_distinct_count() const { return distinct_; }
    std::uint64_t a_rank(std::size_t band, std::size_t x, std::size_t y) const {
        return a_ranks_.read(diff_slot(band, x, y));
    }
    std::uint64_t b_rank(std::size_t band, std::size_t x, std::size_t y) const {
        return b_ranks_.read(diff_slot(band, x, y));
    }
    struct RecordView {
        std::uint64_t pred_row, pred_col, succ_row, succ_col;
    };
    RecordView record_at(std::size_t k, std::size_t idx) const;

    std::vector<std::uint8_t> seal() const;
    static StaircaseEncoding open(std::span<const std::uint8_t> bytes);

private:
    struct PerC {
        BitArray v;          // m entries, width w_m
        BitArray h;          // m entries, width w_m
        BitArray range_lo;   // 2m entries: straddler J-range per band, both boundaries
        BitArray range_hi;   // 2m entries
        BitArray range_off;  // 2m entries: offset into the record array
        BitArray records;    // 4 fields per record, width w_s
    };

    BlockGeometry geom_;
    std::size_t distinct_ = 0; // distinct intra-band differences
    unsigned w_diff_ = 1;
    BitArray a_ranks_; // m * s * s entries, slot (band-1)*s^2 + x*s + y
    BitArray b_ranks_;
    std::vector<PerC> per_c_;

    unsigned w_band() const { return bits_for(geom_.m + 2); }
    unsigned w_offset() const { return bits_for(4 * geom_.m + 3); }
    unsigned w_cell() const { return bits_for(geom_.s + 2); }
    std::size_t diff_slot(std::size_t band, std::size_t x, std::size_t y) const {
        return (band - 1) * geom_.s * geom_.s + x * geom_.s + y;
    }
};

} // namespace tsum
