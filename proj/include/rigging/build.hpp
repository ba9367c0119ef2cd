#pragma once

#include <random>

#include "rigging/rig.hpp"

namespace rigging {

/// Deterministic construction of twist graphs and rigs over a store. All
/// randomness comes from the seeded engine, so a fixed seed reproduces the
/// same twists, hashes and certificate bytes.
class ScenarioBuilder {
public:
    ScenarioBuilder(TwistStore& store, TrieNodeStore& nodes, std::uint64_t seed = 0)
        : store_(store), nodes_(nodes), rng_(seed) {}

    TwistStore& store() { return store_; }
    TrieNodeStore& nodes() { return nodes_; }

    HashRef rand_ref();
    std::vector<TriePair> salt_pairs();  // one random pair, makes a twist unique

    /// Builds the rigging trie from pairs, creates the twist, stores it.
    HashRef add(const HashRef& prev, const HashRef& tether, std::span<const TriePair> pairs);
    HashRef add(const HashRef& prev, const HashRef& tether) { return add(prev, tether, {}); }

    /// Loose line origin with a salted rigging root (distinct per call).
    HashRef add_origin();

    struct HalfHitchScenario {
        HashRef fastener, lead, meet, hoist;
        HalfHitchCert cert;
        RigCert rig;
    };

    /// Corkline anchored on a fast fastener; optional loose fill on either
    /// line. Topline fill twists get empty or noise riggings, exercising both
    /// exclusion proof shapes.
    HalfHitchScenario half_hitch(int topline_fill = 0, int footline_fill = 0);

    /// The four-twist half-hitch: loose fastener, adjacent lines.
    HalfHitchScenario minimal_half_hitch();

    /// One corkline, one leadline of `hitches` consecutive hitches, spliced
    /// on the past side into a rig of that length.
    RigCert spliced_chain(int hitches, int footline_fill = 0);

    /// `levels` nested intermediate lines; height levels+1.
    RigCert lashed(int levels);

    /// Leadline re-fastens from one intermediate line to another mid-rig;
    /// both intermediates rig up to the same corkline.
    RigCert custody_transfer();

    struct DoubleSpend {
        RigCert valid;
        RigCert conflicting;  // must fail verification
        HashRef lead;         // twist with two claimed successors
        HashRef meet_a, meet_b;
    };

    /// Two candidate successors of one lead against one corkline; the later
    /// hoist makes the second certificate unverifiable.
    DoubleSpend double_spend();

    /// Small twist pools for exhaustive supportiveness sweeps.
    void oracle_pool(int variant);

    /// Certificates that place a corkline twist on another line of the rig;
    /// every variant must be rejected by verification.
    RigCert corkline_reuse_cert(int variant);

private:
    TwistStore& store_;
    TrieNodeStore& nodes_;
    std::mt19937_64 rng_;
};

}  // namespace rigging
