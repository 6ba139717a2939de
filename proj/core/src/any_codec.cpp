#include "tsum/any_codec.hpp"

#include <stdexcept>

#include "tsum/errors.hpp"

namespace tsum {

CodecId codec_from_name(const std::string& name) {
    if (name == "trivial") return CodecId::Trivial;
    if (name == "pairwise") return CodecId::Pairwise;
    if (name == "staircase") return CodecId::Staircase;
    if (name == "vertex") return CodecId::Vertex;
    throw std::invalid_argument("unknown codec: " + name);
}

AnyEncoding AnyEncoding::build(CodecId codec, const Instance& inst) {
    AnyEncoding enc;
    switch (codec) {
        case CodecId::Trivial: enc.v_ = TrivialEncoding::build(inst); break;
        case CodecId::Pairwise: enc.v_ = PairwiseEncoding::build(inst); break;
        case CodecId::Staircase: enc.v_ = StaircaseEncoding::build(inst); break;
        case CodecId::Vertex: enc.v_ = VertexEncoding::build(inst); break;
    }
    return enc;
}

AnyEncoding AnyEncoding::open(std::span<const std::uint8_t> bytes) {
    Payload p = envelope_open(bytes); // validates magic/version/size up front
    AnyEncoding enc;
    switch (p.codec) {
        case CodecId::Trivial: enc.v_ = TrivialEncoding::open(bytes); break;
        case CodecId::Pairwise: enc.v_ = PairwiseEncoding::open(bytes); break;
        case CodecId::Staircase: enc.v_ = StaircaseEncoding::open(bytes); break;
        case CodecId::Vertex: enc.v_ = VertexEncoding::open(bytes); break;
    }
    return enc;
}

AnyEncoding AnyEncoding::open_file(const std::string& path) {
    return open(read_binary_file(path));
}

CodecId AnyEncoding::codec() const {
    switch (v_.index()) {
        case 0: return CodecId::Trivial;
        case 1: return CodecId::Pairwise;
        case 2: return CodecId::Staircase;
        default: return CodecId::Vertex;
    }
}

std::size_t AnyEncoding::n() const {
    return std::visit([](const auto& e) { return e.n(); }, v_);
}

std::uint64_t AnyEncoding::payload_bits() const {
    return std::visit([](const auto& e) { return e.payload_bits(); }, v_);
}

Sign AnyEncoding::query(std::size_t i, std::size_t j, std::size_t k) const {
    return std::visit([&](const auto& e) { return e.query(i, j, k); }, v_);
}

std::vector<std::uint8_t> AnyEncoding::seal() const {
    return std::visit([](const auto& e) { return e.seal(); }, v_);
}

} // namespace tsum
