#include "rigging/support.hpp"

#include <algorithm>
#include <map>

#include "rigging/codec.hpp"

namespace rigging {

const char* rel_verdict_name(RelVerdict v) {
    switch (v) {
        case RelVerdict::disjoint: return "disjoint";
        case RelVerdict::aligned: return "aligned";
        case RelVerdict::misaligned: return "misaligned";
        default: return "unknown";
    }
}

RigRelation relate(const TwistSource& extra, const RigCert& a, const RigCert& b) {
    TwistStore pa = rig_pool(a);
    TwistStore pb = rig_pool(b);
    OverlaySource certs(pa, pb);
    OverlaySource src(certs, extra);

    RigRelation out;
    Ternary corks = aligned_lines(src, a.corkline, b.corkline);
    if (corks == Ternary::unknown) {
        out.detail = "corkline alignment undecidable";
        return out;
    }
    if (corks == Ternary::no) {
        out.verdict = RelVerdict::disjoint;
        out.detail = "corklines are not aligned";
        return out;
    }

    IdSet lead_a(a.leadline.begin(), a.leadline.end());
    for (const HashRef& id : b.leadline) {
        if (lead_a.count(id)) out.shared.push_back(id);
    }
    if (out.shared.empty()) {
        out.verdict = RelVerdict::disjoint;
        out.detail = "leadlines share no twist";
        return out;
    }

    std::vector<Line> leads{a.leadline, b.leadline};
    EnvelopeResult env = enveloping_line(src, leads);
    switch (env.status) {
        case EnvelopeResult::Status::ok:
            out.verdict = RelVerdict::aligned;
            out.envelope = std::move(env.line);
            out.detail = "leadlines share an enveloping line";
            return out;
        case EnvelopeResult::Status::misaligned:
            out.verdict = RelVerdict::misaligned;
            out.detail = "leadlines share twist " + out.shared.front().hex() +
                         " but admit no enveloping line";
            return out;
        default:
            out.detail = "leadline alignment undecidable";
            return out;
    }
}

std::optional<HashRef> unique_successor(const TwistSource& extra, const HashRef& z,
                                        const HashRef& a0,
                                        std::span<const RigCert* const> candidates) {
    std::vector<HashRef> successors;
    for (const RigCert* cert : candidates) {
        if (!cert || !verify_rig(*cert).ok) continue;
        TwistStore pool = rig_pool(*cert);
        OverlaySource src(pool, extra);
        const HashRef& cork_end = cert->corkline.back();
        if (cork_end != z && precedes(src, cork_end, z) != Ternary::yes) continue;
        auto at = std::find(cert->leadline.begin(), cert->leadline.end(), a0);
        if (at == cert->leadline.end() || at + 1 == cert->leadline.end()) continue;
        const HashRef& next = *(at + 1);
        if (std::find(successors.begin(), successors.end(), next) == successors.end()) {
            successors.push_back(next);
        }
    }
    if (successors.empty()) return std::nullopt;
    if (successors.size() > 1) throw EquivocationDetected(successors[0], successors[1]);
    return successors.front();
}

std::string SupportReport::to_text() const {
    std::string out;
    out += "rigs " + std::to_string(rig_count) + " pairs " + std::to_string(pair_count) +
           " misaligned " + std::to_string(misaligned_count) + " equivocations " +
           std::to_string(equivocation_count) + "\n";
    for (const std::string& line : lines) out += line + "\n";
    return out;
}

namespace {

/// Every half-hitch assemblable from the pool.
std::vector<HalfHitchCert> enumerate_half_hitches(const TwistStore& pool,
                                                  const TrieNodeStore& nodes) {
    std::vector<HalfHitchCert> out;
    std::vector<std::pair<HashRef, const Twist*>> twists;
    twists.reserve(pool.size());
    for (const auto& [id, twist] : pool) twists.emplace_back(id, &twist);
    std::sort(twists.begin(), twists.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [lid, lead] : twists) {
        if (lead->loose() || !pool.contains(lead->tether)) continue;
        HashRef fid = lead->tether;
        for (const auto& [mid, meet] : twists) {
            if (mid == lid || meet->loose()) continue;
            RefResult fp = fast_previous(pool, mid);
            if (!fp.ok() || fp.ref != lid) continue;
            for (const auto& [hid, hoist] : twists) {
                if (hid == fid || precedes(pool, fid, hid) != Ternary::yes) continue;
                try {
                    out.push_back(assemble_half_hitch(pool, nodes, fid, lid, mid, hid));
                } catch (const AssemblyError&) {
                    // not a hitch; enumeration moves on
                }
            }
        }
    }
    return out;
}

struct EnumRig {
    RigCert cert;
    Guild guild;
    int length;
};

}  // namespace

SupportReport oracle_supportive(const TwistStore& pool, const TrieNodeStore& nodes,
                                OracleOptions options) {
    if (pool.size() > options.max_pool) {
        throw Error("pool of " + std::to_string(pool.size()) +
                    " twists is too large for exhaustive enumeration");
    }

    std::map<Bytes, EnumRig> rigs;  // canonical encoding -> rig (deterministic order)
    auto admit = [&](RigCert cert) {
        RigVerdict v = verify_rig(cert);
        if (!v.ok) return false;
        Bytes key = encode_rig(cert);
        if (rigs.count(key)) return false;
        int len = rig_length(cert);
        rigs.emplace(std::move(key), EnumRig{std::move(cert), v.guild, len});
        return true;
    };

    for (const HalfHitchCert& hh : enumerate_half_hitches(pool, nodes)) {
        admit(make_leaf_rig(hh));
    }

    for (int round = 0; round < options.max_depth; ++round) {
        std::vector<RigCert> fresh;
        for (const auto& [ka, ra] : rigs) {
            for (const auto& [kb, rb] : rigs) {
                if (ra.length == 1 && spliceable(ra.cert, rb.cert, &nodes) == Ternary::yes) {
                    fresh.push_back(splice(ra.cert, rb.cert, nodes));
                }
                if (ra.guild == Guild::gh && lashable(ra.cert, rb.cert) == Ternary::yes) {
                    fresh.push_back(lash(ra.cert, rb.cert));
                }
            }
        }
        bool grew = false;
        for (RigCert& cert : fresh) grew |= admit(std::move(cert));
        if (!grew) break;
    }

    SupportReport report;
    report.rig_count = rigs.size();
    std::vector<const EnumRig*> ordered;
    ordered.reserve(rigs.size());
    for (const auto& [key, rig] : rigs) ordered.push_back(&rig);

    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = i + 1; j < ordered.size(); ++j) {
            RigRelation rel = relate(pool, ordered[i]->cert, ordered[j]->cert);
            ++report.pair_count;
            if (rel.verdict == RelVerdict::misaligned) ++report.misaligned_count;
            if (options.pair_lines || rel.verdict == RelVerdict::misaligned ||
                rel.verdict == RelVerdict::unknown) {
                report.lines.push_back("pair " + std::to_string(i) + " " + std::to_string(j) +
                                       " " + rel_verdict_name(rel.verdict));
            }
        }
    }

    // Unique succession: sweep every corkline end against every leadline twist.
    std::vector<const RigCert*> certs;
    certs.reserve(ordered.size());
    for (const EnumRig* r : ordered) certs.push_back(&r->cert);
    IdSet cork_ends, lead_twists;
    for (const EnumRig* r : ordered) {
        cork_ends.insert(r->cert.corkline.back());
        lead_twists.insert(r->cert.leadline.begin(), r->cert.leadline.end());
    }
    for (const HashRef& z : cork_ends) {
        for (const HashRef& a0 : lead_twists) {
            try {
                unique_successor(pool, z, a0, certs);
            } catch (const EquivocationDetected& e) {
                ++report.equivocation_count;
                report.lines.push_back("equivocation at " + a0.hex() + ": " + e.a.hex() + " vs " +
                                       e.b.hex());
            }
        }
    }
    std::sort(report.lines.begin(), report.lines.end());
    return report;
}

std::vector<ForgeOutcome> forge_second_meet(TwistStore& store, TrieNodeStore& nodes,
                                            const HalfHitchCert& hh) {
    std::vector<ForgeOutcome> outcomes;
    HashRef fid = hash_twist(hh.fastener);
    HashRef lid = hash_twist(hh.lead);
    HashRef mid = hash_twist(hh.meet);
    HashRef hid = hash_twist(hh.hoist);
    for (const Twist& t : hh.topline_fill) store.put(t);
    for (const Twist& t : hh.footline_fill) store.put(t);
    store.put(hh.fastener);
    store.put(hh.lead);
    store.put(hh.meet);
    store.put(hh.hoist);

    // Deterministic salt derived from the lead.
    Bytes salt_src = lid.digest;
    salt_src.push_back(0x5a);
    HashRef salt = sha256_ref(salt_src);

    // A second meet: sibling successor of the lead.
    TrieNodeStore scratch;
    Twist meet2{lid, fid, trie_build(std::vector<TriePair>{{salt, salt}}, scratch)};
    nodes.merge(scratch);
    HashRef mid2 = store.put(meet2);

    {  // Strategy 1: bind the lead again through a hoist later on the topline.
        ForgeOutcome out;
        out.strategy = "later-hoist";
        TrieNodeStore extra;
        Twist hoist2{hid, HashRef::null(), trie_build(std::vector<TriePair>{{lid, mid2}}, extra)};
        nodes.merge(extra);
        HashRef hid2 = store.put(hoist2);
        try {
            HalfHitchCert cert = assemble_half_hitch(store, nodes, fid, lid, mid2, hid2);
            out.accepted = verify_half_hitch(cert).ok;
            out.conflicting = out.accepted;
        } catch (const AssemblyError& e) {
            out.blocked_by = e.code;
        }
        outcomes.push_back(std::move(out));
    }

    {  // Strategy 2: keep the original hoist, forge a proof for a different value.
        ForgeOutcome out;
        out.strategy = "same-hoist-forged-value";
        // Sibling of the original meet, so the footline still chains.
        Twist meet2b = meet2;
        meet2b.prev = hh.meet.prev;
        HashRef mid2b = store.put(meet2b);
        TrieNodeStore forged_nodes;
        HashRef forged_root = trie_build(std::vector<TriePair>{{lid, mid2b}}, forged_nodes);
        HalfHitchCert cert = hh;
        cert.meet = meet2b;
        cert.hoist_inclusion = trie_prove(forged_root, lid, forged_nodes);
        Verdict v = verify_half_hitch(cert);
        out.accepted = v.ok;
        out.conflicting = v.ok;
        if (!v.ok) out.blocked_by = v.reason.substr(0, v.reason.find(':'));
        outcomes.push_back(std::move(out));
    }

    {  // Strategy 3: fork the corkline at the fastener and hoist there.
        ForgeOutcome out;
        out.strategy = "forked-corkline";
        TrieNodeStore extra;
        Twist hoist3{fid, HashRef::null(), trie_build(std::vector<TriePair>{{lid, mid2}}, extra)};
        nodes.merge(extra);
        HashRef hid3 = store.put(hoist3);
        try {
            HalfHitchCert cert = assemble_half_hitch(store, nodes, fid, lid, mid2, hid3);
            Verdict v = verify_half_hitch(cert);
            out.accepted = v.ok;
            if (v.ok) {
                RigRelation rel = relate(store, make_leaf_rig(hh), make_leaf_rig(cert));
                out.relation = rel_verdict_name(rel.verdict);
                // A fork is only a conflict if the corklines stayed aligned.
                out.conflicting = rel.verdict != RelVerdict::disjoint;
            } else {
                out.blocked_by = v.reason.substr(0, v.reason.find(':'));
            }
        } catch (const AssemblyError& e) {
            out.blocked_by = e.code;
        }
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

}  // namespace rigging
