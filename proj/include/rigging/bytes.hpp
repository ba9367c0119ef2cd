#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigging {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EncodingError : Error {
    using Error::Error;
};

struct DecodingError : Error {
    using Error::Error;
};

inline void append_bytes(Bytes& out, ByteSpan data) {
    out.insert(out.end(), data.begin(), data.end());
}

inline void append_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

/// Strict sequential reader over a byte buffer. Every read past the end
/// throws DecodingError; callers must consume the buffer exactly.
class ByteReader {
public:
    explicit ByteReader(ByteSpan data) : data_(data) {}

    std::uint8_t read_u8() {
        if (pos_ >= data_.size()) throw DecodingError("truncated input: expected byte");
        return data_[pos_++];
    }

    std::uint32_t read_u32() {
        ByteSpan b = read_span(4);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }

    ByteSpan read_span(std::size_t n) {
        if (data_.size() - pos_ < n) throw DecodingError("truncated input: expected " + std::to_string(n) + " bytes");
        ByteSpan out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    Bytes read_bytes(std::size_t n) {
        ByteSpan s = read_span(n);
        return Bytes(s.begin(), s.end());
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

    void expect_end() const {
        if (!at_end()) throw DecodingError("trailing bytes after decoded value");
    }

private:
    ByteSpan data_;
    std::size_t pos_ = 0;
};

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);  // throws DecodingError on bad input

}  // namespace rigging
