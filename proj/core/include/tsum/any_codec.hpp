#pragma once

#include <span>
#include <string>
#include <variant>

#include "tsum/envelope.hpp"
#include "tsum/staircase_codec.hpp"
#include "tsum/table_codec.hpp"
#include "tsum/vertex_codec.hpp"

namespace tsum {

CodecId codec_from_name(const std::string& name); // throws std::invalid_argument

/// Codec-erased encoding: opens any sealed envelope and answers queries.
class AnyEncoding {
public:
    static AnyEncoding build(CodecId codec, const Instance& inst);
    static AnyEncoding open(std::span<const std::uint8_t> bytes);
    static AnyEncoding open_file(const std::string& path);

    CodecId codec() const;
    std::size_t n() const;
    std::uint64_t payload_bits() const;
    Sign query(std::size_t i, std::size_t j, std::size_t k) const;
    std::vector<std::uint8_t> seal() const;

    const StaircaseEncoding* staircase() const {
        return std::get_if<StaircaseEncoding>(&v_);
    }

private:
    std::variant<TrivialEncoding, PairwiseEncoding, StaircaseEncoding, VertexEncoding> v_;
};

} // namespace tsum
