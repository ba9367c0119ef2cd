#pragma once

#include <optional>

#include "rigging/build.hpp"

namespace rigging {

enum class RelVerdict : std::uint8_t { disjoint, aligned, misaligned, unknown };
const char* rel_verdict_name(RelVerdict v);

struct RigRelation {
    RelVerdict verdict = RelVerdict::unknown;
    Line envelope;                 // leadline envelope when aligned
    std::vector<HashRef> shared;   // leadline twists in common
    std::string detail;
};

/// Relation between two rigs from their claimed lines and twist records
/// (certificates need not be verified; the conflict detector also inspects
/// rejected ones on request). Disjoint when the corklines are not aligned or
/// the leadlines share no twist; otherwise aligned or misaligned by whether
/// the leadlines admit an enveloping line.
RigRelation relate(const TwistSource& extra, const RigCert& a, const RigCert& b);

struct EquivocationDetected : Error {
    EquivocationDetected(HashRef a_, HashRef b_)
        : Error("two accepted rigs assert successors " + a_.hex() + " and " + b_.hex()),
          a(std::move(a_)),
          b(std::move(b_)) {}
    HashRef a, b;
};

/// The successor of a0 supported against z's line by the accepted
/// candidates, if any. Candidates that fail verification or whose corkline
/// does not end at a predecessor-or-equal of z are ignored. Two distinct
/// successors raise EquivocationDetected — the event a supportive guild
/// makes unreachable.
std::optional<HashRef> unique_successor(const TwistSource& extra, const HashRef& z,
                                        const HashRef& a0,
                                        std::span<const RigCert* const> candidates);

struct SupportReport {
    std::size_t rig_count = 0;
    std::size_t pair_count = 0;
    std::size_t misaligned_count = 0;
    std::size_t equivocation_count = 0;
    std::vector<std::string> lines;  // deterministic, one per pair with a named verdict

    bool clean() const { return misaligned_count == 0 && equivocation_count == 0; }
    std::string to_text() const;
};

struct OracleOptions {
    std::size_t max_pool = 14;   // refuse larger pools (combinatorial guard)
    int max_depth = 3;           // splice/lash closure rounds
    bool pair_lines = false;     // emit one report line per pair, not only offenders
};

/// Enumerates every certificate over the pool that verification accepts
/// (half-hitch leaves closed under splicing and lashing), relates all pairs,
/// and sweeps unique_successor over every (corkline end, leadline twist)
/// combination. A clean report over a pool family is desk-scale evidence of
/// supportiveness.
SupportReport oracle_supportive(const TwistStore& pool, const TrieNodeStore& nodes,
                                OracleOptions options = {});

struct ForgeOutcome {
    std::string strategy;
    bool accepted = false;        // a certificate passed verification
    bool conflicting = false;     // ...and asserts a different meet over an aligned corkline
    std::string blocked_by;       // failure code when not accepted
    std::string relation;         // relation to the original when accepted
};

/// Plays every strategy for making a second meet claim against an accepted
/// half-hitch: a later hoist on the topline, a forged value under the same
/// hoist, and a forked corkline. Returns what blocked each attempt; none may
/// yield an accepted conflicting certificate over an aligned corkline.
std::vector<ForgeOutcome> forge_second_meet(TwistStore& store, TrieNodeStore& nodes,
                                            const HalfHitchCert& hh);

}  // namespace rigging
