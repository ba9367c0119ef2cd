#include "rigging/trie.hpp"

#include <algorithm>

namespace rigging {

namespace {

constexpr std::uint8_t kTagLeaf = 0x00;
constexpr std::uint8_t kTagBranch = 0x01;

struct ParsedNode {
    bool is_leaf = false;
    // leaf
    HashRef key;
    HashRef value;
    // branch
    unsigned prefix_len = 0;
    Bytes prefix;  // packed bits
    HashRef left;
    HashRef right;
};

bool prefix_bit(const Bytes& packed, unsigned i) {
    return (packed[i >> 3] >> (7 - (i & 7))) & 1;
}

/// Strict parse of a canonical node encoding; nullopt on any deviation,
/// including nonzero padding bits (which would give one logical node two
/// distinct encodings).
std::optional<ParsedNode> parse_node(ByteSpan data) {
    try {
        ByteReader r(data);
        std::uint8_t tag = r.read_u8();
        ParsedNode out;
        if (tag == kTagLeaf) {
            out.is_leaf = true;
            out.key = read_ref(r);
            out.value = read_ref(r);
            if (out.key.is_null()) return std::nullopt;
        } else if (tag == kTagBranch) {
            out.prefix_len = r.read_u8();
            out.prefix = r.read_bytes((out.prefix_len + 7) / 8);
            for (unsigned i = out.prefix_len; i < out.prefix.size() * 8; ++i) {
                if (prefix_bit(out.prefix, i)) return std::nullopt;
            }
            out.left = read_ref(r);
            out.right = read_ref(r);
            if (out.left.is_null() || out.right.is_null()) return std::nullopt;
        } else {
            return std::nullopt;
        }
        r.expect_end();
        return out;
    } catch (const DecodingError&) {
        return std::nullopt;
    }
}

bool key_usable(const HashRef& key, unsigned key_bits) {
    return !key.is_null() && key.digest.size() * 8 >= key_bits;
}

bool keys_equal_truncated(const HashRef& a, const HashRef& b, unsigned key_bits) {
    if (a.algo != b.algo) return false;
    for (unsigned i = 0; i < key_bits; ++i) {
        if (key_bit(a, i) != key_bit(b, i)) return false;
    }
    return true;
}

}  // namespace

bool key_bit(const HashRef& key, unsigned i) {
    return (key.digest[i >> 3] >> (7 - (i & 7))) & 1;
}

HashRef TrieNodeStore::put(Bytes node_bytes) {
    HashRef id = sha256_ref(node_bytes);
    nodes_.emplace(id, std::move(node_bytes));
    return id;
}

const Bytes* TrieNodeStore::find(const HashRef& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
}

void TrieNodeStore::merge(const TrieNodeStore& other) {
    for (const auto& [id, bytes] : other.nodes_) nodes_.emplace(id, bytes);
}

Bytes encode_leaf_node(const HashRef& key, const HashRef& value) {
    Bytes out{kTagLeaf};
    append_ref(out, key);
    append_ref(out, value);
    return out;
}

Bytes encode_branch_node(const HashRef& prefix_source, unsigned depth, unsigned prefix_len,
                         const HashRef& left, const HashRef& right) {
    if (prefix_len > 255) throw TrieError("branch prefix too long");
    Bytes out{kTagBranch, static_cast<std::uint8_t>(prefix_len)};
    Bytes packed((prefix_len + 7) / 8, 0);
    for (unsigned i = 0; i < prefix_len; ++i) {
        if (key_bit(prefix_source, depth + i)) packed[i >> 3] |= 1 << (7 - (i & 7));
    }
    append_bytes(out, packed);
    append_ref(out, left);
    append_ref(out, right);
    return out;
}

namespace {

HashRef build_node(std::span<const TriePair> sorted, unsigned depth, unsigned key_bits,
                   TrieNodeStore& nodes) {
    if (sorted.size() == 1) {
        return nodes.put(encode_leaf_node(sorted.front().key, sorted.front().value));
    }
    // Extremes of a bit-sorted range bound the shared prefix of the whole range.
    const HashRef& lo = sorted.front().key;
    const HashRef& hi = sorted.back().key;
    unsigned split = depth;
    while (split < key_bits && key_bit(lo, split) == key_bit(hi, split)) ++split;
    if (split >= key_bits) throw TrieError("duplicate truncated key");
    auto mid = std::partition_point(sorted.begin(), sorted.end(),
                                    [&](const TriePair& p) { return !key_bit(p.key, split); });
    std::span<const TriePair> left(sorted.begin(), mid);
    std::span<const TriePair> right(mid, sorted.end());
    HashRef left_id = build_node(left, split + 1, key_bits, nodes);
    HashRef right_id = build_node(right, split + 1, key_bits, nodes);
    return nodes.put(encode_branch_node(lo, depth, split - depth, left_id, right_id));
}

}  // namespace

HashRef trie_build(std::span<const TriePair> pairs, TrieNodeStore& nodes, TrieParams params) {
    if (pairs.empty()) return HashRef::null();
    std::vector<TriePair> sorted(pairs.begin(), pairs.end());
    for (const TriePair& p : sorted) {
        check_ref(p.key);
        check_ref(p.value);
        if (!key_usable(p.key, params.key_bits)) throw TrieError("trie key is null or too short");
    }
    std::sort(sorted.begin(), sorted.end(), [&](const TriePair& a, const TriePair& b) {
        for (unsigned i = 0; i < params.key_bits; ++i) {
            bool ba = key_bit(a.key, i), bb = key_bit(b.key, i);
            if (ba != bb) return bb;
        }
        return a < b;
    });
    std::vector<TriePair> unique;
    unique.reserve(sorted.size());
    for (const TriePair& p : sorted) {
        if (!unique.empty() && keys_equal_truncated(unique.back().key, p.key, params.key_bits)) {
            if (unique.back() == p) continue;  // exact duplicate
            throw TrieError("duplicate key with conflicting value");
        }
        unique.push_back(p);
    }
    return build_node(unique, 0, params.key_bits, nodes);
}

TrieProof trie_prove(const HashRef& root, const HashRef& key, const TrieNodeStore& nodes,
                     TrieParams params) {
    if (!key_usable(key, params.key_bits)) throw TrieError("cannot prove a null key");
    TrieProof proof;
    if (root.is_null()) return proof;  // empty trie: empty divergence proof
    HashRef cur = root;
    unsigned depth = 0;
    for (;;) {
        const Bytes* bytes = nodes.find(cur);
        if (!bytes) throw TrieError("unresolvable trie node " + cur.hex());
        proof.nodes.push_back(*bytes);
        auto node = parse_node(*bytes);
        if (!node) throw TrieError("malformed trie node in store");
        if (node->is_leaf) return proof;  // inclusion or leaf divergence witness
        if (depth + node->prefix_len + 1 > params.key_bits) throw TrieError("trie deeper than key width");
        bool diverged = false;
        for (unsigned i = 0; i < node->prefix_len; ++i) {
            if (prefix_bit(node->prefix, i) != key_bit(key, depth + i)) {
                diverged = true;
                break;
            }
        }
        if (diverged) return proof;  // branch divergence witness
        depth += node->prefix_len;
        cur = key_bit(key, depth) ? node->right : node->left;
        depth += 1;
    }
}

TrieLookup trie_verify(const HashRef& root, const HashRef& key, const TrieProof& proof,
                       TrieParams params) {
    TrieLookup invalid{TrieVerdict::invalid, HashRef::null()};
    if (!key_usable(key, params.key_bits)) return invalid;
    if (root.is_null()) {
        if (proof.nodes.empty()) return {TrieVerdict::absent, HashRef::null()};
        return invalid;
    }
    if (proof.nodes.empty()) return invalid;

    HashRef expect = root;
    unsigned depth = 0;
    for (std::size_t i = 0; i < proof.nodes.size(); ++i) {
        const Bytes& bytes = proof.nodes[i];
        if (sha256_ref(bytes) != expect) return invalid;
        auto node = parse_node(bytes);
        if (!node) return invalid;
        bool last = (i + 1 == proof.nodes.size());
        if (node->is_leaf) {
            if (!last) return invalid;
            if (keys_equal_truncated(node->key, key, params.key_bits)) {
                return {TrieVerdict::bound, node->value};
            }
            return {TrieVerdict::absent, HashRef::null()};
        }
        if (depth + node->prefix_len + 1 > params.key_bits) return invalid;
        for (unsigned b = 0; b < node->prefix_len; ++b) {
            if (prefix_bit(node->prefix, b) != key_bit(key, depth + b)) {
                // The key's path leaves the trie here: divergence witness.
                return last ? TrieLookup{TrieVerdict::absent, HashRef::null()} : invalid;
            }
        }
        depth += node->prefix_len;
        expect = key_bit(key, depth) ? node->right : node->left;
        depth += 1;
    }
    return invalid;  // path ended while expecting a child
}

}  // namespace rigging
