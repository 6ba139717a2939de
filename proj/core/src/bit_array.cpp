#include "tsum/bit_array.hpp"

#include <bit>
#include <stdexcept>

#include "tsum/errors.hpp"

namespace tsum {

namespace {

void check_width(unsigned width) {
    if (width < 1 || width > 64) {
        throw std::invalid_argument("bit field width must be in [1, 64]");
    }
}

constexpr std::uint64_t mask_of(unsigned width) {
    return width == 64 ? ~0ull : (1ull << width) - 1;
}

} // namespace

unsigned bits_for(std::uint64_t value_count) {
    std::uint64_t top = value_count - 1; // wraps to full width for 0
    unsigned b = static_cast<unsigned>(std::bit_width(top));
    return b < 1 ? 1 : b;
}

BitArray::BitArray(std::size_t count, unsigned width) : width_(width), count_(count) {
    check_width(width);
    std::uint64_t bits = static_cast<std::uint64_t>(count) * width;
    words_.assign((bits + 63) / 64, 0);
}

BitArray BitArray::pack(std::span<const std::uint64_t> entries, unsigned width) {
    BitArray arr(entries.size(), width);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        arr.set(i, entries[i]);
    }
    return arr;
}

void BitArray::set(std::size_t index, std::uint64_t value) {
    if (index >= count_) {
        throw std::out_of_range("BitArray::set index out of range");
    }
    if (width_ < 64 && value > mask_of(width_)) {
        throw std::overflow_error("value does not fit in bit field width");
    }
    std::uint64_t off = static_cast<std::uint64_t>(index) * width_;
    std::size_t word = off / 64;
    unsigned shift = off % 64;
    words_[word] &= ~(mask_of(width_) << shift);
    words_[word] |= value << shift;
    if (shift + width_ > 64) {
        unsigned high = shift + width_ - 64; // bits spilling into the next word
        words_[word + 1] &= ~mask_of(high);
        words_[word + 1] |= value >> (64 - shift);
    }
}

std::uint64_t BitArray::read(std::size_t index) const {
    if (index >= count_) {
        throw std::out_of_range("BitArray::read index out of range");
    }
    std::uint64_t off = static_cast<std::uint64_t>(index) * width_;
    std::size_t word = off / 64;
    unsigned shift = off % 64;
    std::uint64_t value = words_[word] >> shift;
    if (shift + width_ > 64) {
        value |= words_[word + 1] << (64 - shift);
    }
    return value & mask_of(width_);
}

void BitWriter::put(std::uint64_t value, unsigned width) {
    check_width(width);
    if (width < 64 && value > mask_of(width)) {
        throw std::overflow_error("value does not fit in bit field width");
    }
    std::size_t word = bits_ / 64;
    unsigned shift = bits_ % 64;
    if (word >= words_.size()) words_.push_back(0);
    words_[word] |= value << shift;
    if (shift + width > 64) {
        words_.push_back(value >> (64 - shift));
    }
    bits_ += width;
}

void BitWriter::put_array(const BitArray& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
        put(arr.read(i), arr.width());
    }
}

std::vector<std::uint8_t> BitWriter::bytes() const {
    std::vector<std::uint8_t> out((bits_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
    }
    return out;
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count)
    : total_bits_(bit_count) {
    if (bit_count > 8 * static_cast<std::uint64_t>(bytes.size())) {
        throw CorruptEncoding("payload shorter than declared bit length");
    }
    words_.assign((bytes.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        words_[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    }
}

std::uint64_t BitReader::get(unsigned width) {
    check_width(width);
    if (pos_ + width > total_bits_) {
        throw CorruptEncoding("payload truncated: bit stream overrun");
    }
    std::size_t word = pos_ / 64;
    unsigned shift = pos_ % 64;
    std::uint64_t value = words_[word] >> shift;
    if (shift + width > 64) {
        value |= words_[word + 1] << (64 - shift);
    }
    pos_ += width;
    return value & mask_of(width);
}

BitArray BitReader::get_array(std::size_t count, unsigned width) {
    BitArray arr(count, width);
    for (std::size_t i = 0; i < count; ++i) {
        arr.set(i, get(width));
    }
    return arr;
}

} // namespace tsum
