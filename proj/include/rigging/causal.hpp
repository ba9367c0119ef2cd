#pragma once

#include "rigging/graph.hpp"
#include "rigging/trie.hpp"

namespace rigging {

/// One hash-inclusion step: `to`'s encoding commits to `from`'s hash, either
/// directly (prev/tether field) or through its rigging trie (the trie root is
/// in the encoding and the proof walks down to a leaf carrying the hash as
/// key or value).
enum class LinkKind : std::uint8_t { prev, tether, rigging_key, rigging_value };

struct CausalLink {
    HashRef from;
    HashRef to;
    LinkKind kind = LinkKind::prev;
    HashRef key;      // rigging links: the trie key involved
    TrieProof proof;  // rigging links: proof that r(to) binds key

    bool operator==(const CausalLink&) const = default;
};

/// Witness that `from` causally precedes `to`. Links may be empty only when
/// from == to (the reflexive case, admitted where predecessor-or-equal
/// suffices).
struct CausalChain {
    HashRef from;
    HashRef to;
    std::vector<CausalLink> links;

    bool operator==(const CausalChain&) const = default;
};

struct ChainCheck {
    bool ok = false;
    std::string reason;

    static ChainCheck accept() { return {true, {}}; }
    static ChainCheck reject(std::string r) { return {false, std::move(r)}; }
};

/// Re-derives every link from raw records: resolves `to`, checks the claimed
/// field or verifies the trie proof against `to`'s rigging root.
ChainCheck verify_chain(const TwistSource& src, const CausalChain& chain);

/// Chain of prev links along a resolvable line segment [from, ..., to].
CausalChain line_segment_chain(const TwistSource& src, const HashRef& from, const HashRef& to);

/// Concatenation; requires a.to == b.from.
CausalChain join_chains(const CausalChain& a, const CausalChain& b);

}  // namespace rigging
