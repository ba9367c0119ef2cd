#include "rigging/hash.hpp"

#include <openssl/evp.h>

namespace rigging {

std::string to_hex(ByteSpan data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw DecodingError("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw DecodingError("invalid hex character");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

HashRef HashRef::sha256(Bytes digest32) {
    if (digest32.size() != kSha256Bytes) throw EncodingError("sha-256 digest must be 32 bytes");
    return HashRef{kAlgoSha256, std::move(digest32)};
}

std::string HashRef::hex() const {
    if (is_null()) return "null";
    return to_hex(digest);
}

void check_ref(const HashRef& ref) {
    if (ref.algo == kAlgoNull) {
        if (!ref.digest.empty()) throw EncodingError("null reference carries a digest");
    } else if (ref.algo == kAlgoSha256) {
        if (ref.digest.size() != kSha256Bytes) throw EncodingError("sha-256 digest must be 32 bytes");
    } else {
        throw EncodingError("unknown hash algorithm byte");
    }
}

void append_ref(Bytes& out, const HashRef& ref) {
    check_ref(ref);
    out.push_back(ref.algo);
    append_bytes(out, ref.digest);
}

HashRef read_ref(ByteReader& r) {
    std::uint8_t algo = r.read_u8();
    if (algo == kAlgoNull) return HashRef::null();
    if (algo == kAlgoSha256) return HashRef{kAlgoSha256, r.read_bytes(kSha256Bytes)};
    throw DecodingError("unknown hash algorithm byte");
}

HashRef sha256_ref(ByteSpan data) {
    Bytes digest(kSha256Bytes);
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != kSha256Bytes) {
        throw Error("sha-256 computation failed");
    }
    return HashRef{kAlgoSha256, std::move(digest)};
}

HashRef parse_digest_hex(std::string_view hex) {
    Bytes digest = from_hex(hex);
    if (digest.size() != kSha256Bytes) throw DecodingError("digest hex must be 64 characters");
    return HashRef{kAlgoSha256, std::move(digest)};
}

}  // namespace rigging
