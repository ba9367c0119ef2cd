#pragma once

#include "rigging/hash.hpp"

namespace rigging {

/// The atomic record: three hash references. A twist with a null prev is a
/// line origin; a twist with a null tether is loose, otherwise fast.
struct Twist {
    HashRef prev;
    HashRef tether;
    HashRef rigging;  // trie root; null means the empty trie

    bool fast() const { return !tether.is_null(); }
    bool loose() const { return tether.is_null(); }

    bool operator==(const Twist&) const = default;
};

/// Canonical wire form: prev, tether, rigging, each as algo byte + digest.
/// The algo byte fixes the digest length, so the layout is self-delimiting
/// and injective over well-formed twists.
Bytes encode_twist(const Twist& t);

/// Inverse of encode_twist; rejects truncation, unknown algo bytes, and
/// trailing garbage.
Twist decode_twist(ByteSpan data);

/// Identity of a twist: SHA-256 over its canonical encoding.
HashRef hash_twist(const Twist& t);

}  // namespace rigging
