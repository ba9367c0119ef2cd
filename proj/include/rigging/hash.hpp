#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "rigging/bytes.hpp"

namespace rigging {

inline constexpr std::uint8_t kAlgoNull = 0x00;
inline constexpr std::uint8_t kAlgoSha256 = 0x01;
inline constexpr std::size_t kSha256Bytes = 32;

/// Algorithm-tagged digest. The null reference (algo 0x00, empty digest)
/// is the out-of-band signal for "no twist here" / "empty trie".
struct HashRef {
    std::uint8_t algo = kAlgoNull;
    Bytes digest;

    static HashRef null() { return {}; }
    static HashRef sha256(Bytes digest32);

    bool is_null() const { return algo == kAlgoNull; }

    bool operator==(const HashRef&) const = default;
    auto operator<=>(const HashRef&) const = default;

    /// Hex of the digest alone (used for store filenames); "null" for the null ref.
    std::string hex() const;
};

/// Validates the algo/digest pairing. Throws EncodingError if inconsistent.
void check_ref(const HashRef& ref);

/// Appends the wire form algo byte followed by the digest.
void append_ref(Bytes& out, const HashRef& ref);

/// Reads one reference off the reader; rejects unknown algo bytes.
HashRef read_ref(ByteReader& r);

/// SHA-256 of arbitrary bytes, wrapped as a reference.
HashRef sha256_ref(ByteSpan data);

/// Parses a 64-char hex digest into a SHA-256 reference.
HashRef parse_digest_hex(std::string_view hex);

struct HashRefHasher {
    std::size_t operator()(const HashRef& r) const {
        std::size_t h = r.algo;
        for (std::size_t i = 0; i < r.digest.size() && i < 8; ++i) {
            h = (h << 8) | r.digest[i];
        }
        return h;
    }
};

}  // namespace rigging
