#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tsum {

/// Fixed-width bit-packed array of unsigned integers. Immutable once built;
/// concurrent reads are safe. Storage is exactly width * size() bits; byte
/// padding happens only at the envelope level.
class BitArray {
public:
    BitArray() = default;

    /// Zero-filled array; width must be in [1, 64].
    BitArray(std::size_t count, unsigned width);

    /// Packs the given entries; throws std::overflow_error if an entry does
    /// not fit in `width` bits.
    static BitArray pack(std::span<const std::uint64_t> entries, unsigned width);

    std::uint64_t read(std::size_t index) const;
    void set(std::size_t index, std::uint64_t value);

    unsigned width() const { return width_; }
    std::size_t size() const { return count_; }
    std::uint64_t bit_size() const { return static_cast<std::uint64_t>(count_) * width_; }

private:
    unsigned width_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Append-only bit stream, LSB-first within each 64-bit word and byte.
class BitWriter {
public:
    void put(std::uint64_t value, unsigned width);
    void put_array(const BitArray& arr);

    std::uint64_t bit_count() const { return bits_; }
    std::vector<std::uint8_t> bytes() const;

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t bits_ = 0;
};

/// Reads back a BitWriter stream. Throws CorruptEncoding on overrun.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count);

    std::uint64_t get(unsigned width);
    BitArray get_array(std::size_t count, unsigned width);

    std::uint64_t remaining() const { return total_bits_ - pos_; }

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t total_bits_ = 0;
    std::uint64_t pos_ = 0;
};

/// Bits needed to store values in [0, value_count), at least 1.
unsigned bits_for(std::uint64_t value_count);

} // namespace tsum
