#include "tsum/envelope.hpp"

#include <cstring>
#include <fstream>

#include "tsum/errors.hpp"

namespace tsum {

namespace {

constexpr char kMagic[4] = {'3', 'S', 'U', 'M'};
constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 8 + 8;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_u64(std::span<const std::uint8_t> bytes, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(bytes[at + i]) << (8 * i);
    }
    return v;
}

} // namespace

const char* codec_name(CodecId id) {
    switch (id) {
        case CodecId::Trivial: return "trivial";
        case CodecId::Pairwise: return "pairwise";
        case CodecId::Staircase: return "staircase";
        case CodecId::Vertex: return "vertex";
    }
    return "unknown";
}

std::vector<std::uint8_t> envelope_seal(CodecId codec, std::uint64_t n,
                                        std::uint64_t payload_bits,
                                        std::span<const std::uint8_t> payload) {
    if (payload.size() != (payload_bits + 7) / 8) {
        throw std::invalid_argument("payload byte count does not match bit length");
    }
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kEnvelopeVersion);
    out.push_back(static_cast<std::uint8_t>(codec));
    put_u64(out, n);
    put_u64(out, payload_bits);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Payload envelope_open(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize) {
        throw CorruptEncoding("truncated: shorter than envelope header");
    }
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw CorruptEncoding("bad magic");
    }
    if (bytes[4] != kEnvelopeVersion) {
        throw CorruptEncoding("unsupported version " + std::to_string(bytes[4]));
    }
    std::uint8_t codec = bytes[5];
    if (codec < 1 || codec > 4) {
        throw CorruptEncoding("unsupported codec id " + std::to_string(codec));
    }
    Payload p;
    p.codec = static_cast<CodecId>(codec);
    p.n = get_u64(bytes, 6);
    p.bit_length = get_u64(bytes, 14);
    std::uint64_t expected = (p.bit_length + 7) / 8;
    std::uint64_t actual = bytes.size() - kHeaderSize;
    if (actual < expected) {
        throw CorruptEncoding("truncated payload");
    }
    if (actual > expected) {
        throw CorruptEncoding("trailing bytes after payload");
    }
    p.bytes.assign(bytes.begin() + kHeaderSize, bytes.end());
    return p;
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("failed reading file: " + path);
    }
    return bytes;
}

void write_binary_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IoError("failed writing file: " + path);
    }
}

} // namespace tsum
