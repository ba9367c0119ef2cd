#pragma once

#include "rigging/causal.hpp"

namespace rigging {

/// Raised by assembly when a hitch relation fails or a twist cannot be
/// resolved. `code` carries the stable name of the failed relation
/// ("Unresolved" when data is missing rather than wrong).
struct AssemblyError : Error {
    AssemblyError(std::string code_, const std::string& detail)
        : Error(code_ + ": " + detail), code(std::move(code_)) {}
    std::string code;
};

/// Verification outcome; total functions return this instead of throwing.
struct Verdict {
    bool ok = false;
    std::string reason;

    static Verdict accept() { return {true, {}}; }
    static Verdict reject(std::string r) { return {false, std::move(r)}; }
};

/// The four twists of a half-hitch plus everything needed to re-derive its
/// relations from raw bytes: the connecting fills, the hoist's lead:meet
/// binding, and an absence proof for every topline twist strictly between
/// the fastener and the hoist (hoist firstness).
struct HalfHitchCert {
    Twist fastener;
    Twist lead;
    Twist meet;
    Twist hoist;
    std::vector<Twist> topline_fill;   // strictly between fastener and hoist
    std::vector<Twist> footline_fill;  // strictly between lead and meet
    TrieProof hoist_inclusion;
    std::vector<TrieProof> firstness_exclusions;  // one per topline_fill entry

    Line topline() const;   // [fastener, ..., hoist]
    Line footline() const;  // [lead, ..., meet]

    bool operator==(const HalfHitchCert&) const = default;
};

/// Half-hitch extended with the post: the next fast twist after the meet,
/// whose rigging trie binds lead to hoist.
struct HitchCert {
    HalfHitchCert half;
    Twist post;
    std::vector<Twist> post_fill;  // strictly between meet and post
    TrieProof post_inclusion;

    bool operator==(const HitchCert&) const = default;
};

/// All twist records carried by a certificate, content-addressed.
TwistStore half_hitch_pool(const HalfHitchCert& cert);
TwistStore hitch_pool(const HitchCert& cert);

/// Total, local verification: uses only twists inside the certificate.
/// Rejection carries the first failed rule.
Verdict verify_half_hitch(const HalfHitchCert& cert);
Verdict verify_hitch(const HitchCert& cert);

/// Builds a certificate from store data for the four (five) named twists.
/// Throws AssemblyError naming the violated relation, or with code
/// "Unresolved" when an intermediate twist or trie node is missing.
HalfHitchCert assemble_half_hitch(const TwistSource& src, const TrieNodeStore& nodes,
                                  const HashRef& fastener, const HashRef& lead,
                                  const HashRef& meet, const HashRef& hoist);
HitchCert assemble_hitch(const TwistSource& src, const TrieNodeStore& nodes,
                         const HashRef& fastener, const HashRef& lead, const HashRef& meet,
                         const HashRef& hoist, const HashRef& post);

/// Explicit hash-inclusion chains witnessing the hitch chronology: fastener
/// before lead before meet before hoist (before post). Three segments for a
/// half-hitch, four for a hitch.
struct ChronologyWitness {
    std::vector<HashRef> waypoints;
    std::vector<CausalChain> segments;
};

ChronologyWitness hitch_chronology_witness(const HalfHitchCert& cert);
ChronologyWitness hitch_chronology_witness(const HitchCert& cert);

/// Accepts iff every segment verifies and the segments connect the waypoints
/// in order.
Verdict verify_chronology(const TwistSource& src, const ChronologyWitness& witness);

}  // namespace rigging
