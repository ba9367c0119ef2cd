#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "rigging/hash.hpp"

namespace rigging {

struct TrieError : Error {
    using Error::Error;
};

/// One key/value binding. Keys are twist hashes in practice; values are
/// arbitrary references (possibly null).
struct TriePair {
    HashRef key;
    HashRef value;

    bool operator==(const TriePair&) const = default;
    auto operator<=>(const TriePair&) const = default;
};

/// Content-addressed map from node id to canonical node encoding. Proofs are
/// assembled by walking node encodings down from a root.
class TrieNodeStore {
public:
    HashRef put(Bytes node_bytes);
    const Bytes* find(const HashRef& id) const;
    std::size_t size() const { return nodes_.size(); }
    void merge(const TrieNodeStore& other);

private:
    std::unordered_map<HashRef, Bytes, HashRefHasher> nodes_;
};

/// Merkle path from the root down to a terminal node. The terminal is either
/// the leaf for the key (inclusion) or a divergence witness — the node that
/// actually occupies the position where the key's path would continue
/// (exclusion). The empty proof is the exclusion proof for the null root.
struct TrieProof {
    std::vector<Bytes> nodes;  // canonical encodings, root first

    bool operator==(const TrieProof&) const = default;
};

enum class TrieVerdict : std::uint8_t { bound, absent, invalid };

struct TrieLookup {
    TrieVerdict verdict = TrieVerdict::invalid;
    HashRef value;  // set when verdict == bound

    bool bound() const { return verdict == TrieVerdict::bound; }
    bool absent() const { return verdict == TrieVerdict::absent; }
};

/// key_bits < 256 truncates keys to their leading bits; the 4-bit toy mode
/// makes exhaustive enumeration of tries and proofs feasible in tests.
struct TrieParams {
    unsigned key_bits = 256;
};

// Canonical node encodings (part of the certificate wire format):
//   leaf   := 0x00 | key ref | value ref
//   branch := 0x01 | prefix_len u8 | packed prefix bits (MSB-first,
//             zero-padded) | left ref | right ref
// A branch at depth d covers keys sharing bits [d, d+prefix_len) and splits
// on bit d+prefix_len; both children are always present. Node id is the
// SHA-256 of the encoding.
Bytes encode_leaf_node(const HashRef& key, const HashRef& value);
Bytes encode_branch_node(const HashRef& prefix_source, unsigned depth, unsigned prefix_len,
                         const HashRef& left, const HashRef& right);

/// Bit i of a key digest, MSB-first.
bool key_bit(const HashRef& key, unsigned i);

/// Deterministic root over a set of distinct keys; the same set in any order
/// yields the same root. Empty input yields the null root. Exact duplicate
/// pairs are collapsed; a duplicate key with a conflicting value throws.
/// Nodes are recorded into `nodes` for later proof assembly.
HashRef trie_build(std::span<const TriePair> pairs, TrieNodeStore& nodes, TrieParams params = {});

/// Inclusion proof when the key is bound under the root, exclusion proof
/// otherwise. Throws TrieError on a null key or an unresolvable node.
TrieProof trie_prove(const HashRef& root, const HashRef& key, const TrieNodeStore& nodes,
                     TrieParams params = {});

/// Total verification: replays the proof against the root and the key's bit
/// path. Never throws; anything malformed is `invalid`. For a fixed
/// (root, key) all accepting proofs agree on the outcome.
TrieLookup trie_verify(const HashRef& root, const HashRef& key, const TrieProof& proof,
                       TrieParams params = {});

/// Convenience for one-shot use in builders and tests.
inline TrieProof trie_prove(std::span<const TriePair> pairs, const HashRef& key,
                            TrieParams params = {}) {
    TrieNodeStore nodes;
    HashRef root = trie_build(pairs, nodes, params);
    return trie_prove(root, key, nodes, params);
}

}  // namespace rigging
