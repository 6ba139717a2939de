#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tsum {

enum class CodecId : std::uint8_t {
    Trivial = 1,
    Pairwise = 2,
    Staircase = 3,
    Vertex = 4,
};

const char* codec_name(CodecId id);

/// On-disk envelope shared by every encoder:
///   magic "3SUM" (4 bytes), version (1 byte), codec id (1 byte),
///   n (u64 LE), payload bit length (u64 LE), payload bytes.
/// The payload occupies exactly ceil(bits / 8) bytes.
struct Payload {
    CodecId codec;
    std::uint64_t n;
    std::uint64_t bit_length;
    std::vector<std::uint8_t> bytes;
};

inline constexpr std::uint8_t kEnvelopeVersion = 1;

std::vector<std::uint8_t> envelope_seal(CodecId codec, std::uint64_t n,
                                        std::uint64_t payload_bits,
                                        std::span<const std::uint8_t> payload);

/// Throws CorruptEncoding on bad magic, unsupported version or codec,
/// truncation or trailing bytes.
Payload envelope_open(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, std::span<const std::uint8_t> bytes);

} // namespace tsum
