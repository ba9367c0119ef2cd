#include "rigging/hitch.hpp"

#include <unordered_set>

namespace rigging {

namespace {

using IdSet = std::unordered_set<HashRef, HashRefHasher>;

Line ids_of(const Twist& first, const std::vector<Twist>& fill, const Twist& last) {
    Line out;
    out.reserve(fill.size() + 2);
    out.push_back(hash_twist(first));
    for (const Twist& t : fill) out.push_back(hash_twist(t));
    out.push_back(hash_twist(last));
    return out;
}

/// Consecutiveness of the supplied records themselves; no store involved.
bool records_chain(const Twist& first, const std::vector<Twist>& fill, const Twist& last) {
    HashRef prev_id = hash_twist(first);
    for (const Twist& t : fill) {
        if (t.prev != prev_id) return false;
        prev_id = hash_twist(t);
    }
    return last.prev == prev_id;
}

}  // namespace

Line HalfHitchCert::topline() const { return ids_of(fastener, topline_fill, hoist); }
Line HalfHitchCert::footline() const { return ids_of(lead, footline_fill, meet); }

TwistStore half_hitch_pool(const HalfHitchCert& cert) {
    TwistStore pool;
    pool.put(cert.fastener);
    pool.put(cert.lead);
    pool.put(cert.meet);
    pool.put(cert.hoist);
    for (const Twist& t : cert.topline_fill) pool.put(t);
    for (const Twist& t : cert.footline_fill) pool.put(t);
    return pool;
}

TwistStore hitch_pool(const HitchCert& cert) {
    TwistStore pool = half_hitch_pool(cert.half);
    pool.put(cert.post);
    for (const Twist& t : cert.post_fill) pool.put(t);
    return pool;
}

Verdict verify_half_hitch(const HalfHitchCert& cert) {
    HashRef fid, lid, mid, hid;
    try {
        fid = hash_twist(cert.fastener);
        lid = hash_twist(cert.lead);
        mid = hash_twist(cert.meet);
        hid = hash_twist(cert.hoist);
        for (const Twist& t : cert.topline_fill) hash_twist(t);
        for (const Twist& t : cert.footline_fill) hash_twist(t);
    } catch (const EncodingError& e) {
        return Verdict::reject(std::string("MalformedTwist: ") + e.what());
    }

    if (cert.lead.loose()) return Verdict::reject("LeadLoose: lead has a null tether");
    if (cert.lead.tether != fid) {
        return Verdict::reject("FastenerMismatch: fastener is not the tether of the lead");
    }
    if (cert.meet.loose()) return Verdict::reject("MeetLoose: meet has a null tether");

    if (hid == fid) return Verdict::reject("DegenerateTopline: hoist equals fastener");
    if (!records_chain(cert.fastener, cert.topline_fill, cert.hoist)) {
        return Verdict::reject("ToplineBroken: topline records are not consecutive");
    }
    if (mid == lid) return Verdict::reject("DegenerateFootline: meet equals lead");
    if (!records_chain(cert.lead, cert.footline_fill, cert.meet)) {
        return Verdict::reject("FootlineBroken: footline records are not consecutive");
    }
    for (const Twist& t : cert.footline_fill) {
        if (t.fast()) {
            return Verdict::reject("LeadNotFastPrevious: fast twist between lead and meet");
        }
    }

    Line top = cert.topline();
    Line foot = cert.footline();
    IdSet top_set(top.begin(), top.end());
    for (const HashRef& id : foot) {
        if (top_set.count(id)) {
            return Verdict::reject("SelfTethered: twist " + id.hex() +
                                   " appears on both topline and footline");
        }
    }

    TrieLookup hoisted = trie_verify(cert.hoist.rigging, lid, cert.hoist_inclusion);
    if (!hoisted.bound() || hoisted.value != mid) {
        return Verdict::reject("HoistInclusionFailed: hoist rigging does not bind lead to meet");
    }

    if (cert.firstness_exclusions.size() != cert.topline_fill.size()) {
        return Verdict::reject("IncompleteFirstness: expected one exclusion per topline twist");
    }
    for (std::size_t i = 0; i < cert.topline_fill.size(); ++i) {
        TrieLookup res =
            trie_verify(cert.topline_fill[i].rigging, lid, cert.firstness_exclusions[i]);
        if (!res.absent()) {
            return Verdict::reject("NotFirstSuccessor: topline twist " +
                                   hash_twist(cert.topline_fill[i]).hex() +
                                   " binds the lead before the hoist");
        }
    }
    return Verdict::accept();
}

Verdict verify_hitch(const HitchCert& cert) {
    Verdict half = verify_half_hitch(cert.half);
    if (!half.ok) return half;

    HashRef lid = hash_twist(cert.half.lead);
    HashRef mid = hash_twist(cert.half.meet);
    HashRef hid = hash_twist(cert.half.hoist);
    HashRef nid;
    try {
        nid = hash_twist(cert.post);
        for (const Twist& t : cert.post_fill) hash_twist(t);
    } catch (const EncodingError& e) {
        return Verdict::reject(std::string("MalformedTwist: ") + e.what());
    }

    if (nid == mid) return Verdict::reject("DegeneratePostline: post equals meet");
    if (!records_chain(cert.half.meet, cert.post_fill, cert.post)) {
        return Verdict::reject("PostlineBroken: records between meet and post are not consecutive");
    }
    for (const Twist& t : cert.post_fill) {
        if (t.fast()) {
            return Verdict::reject("MeetNotFastPrevious: fast twist between meet and post");
        }
    }

    Line top = cert.half.topline();
    IdSet top_set(top.begin(), top.end());
    if (top_set.count(nid)) return Verdict::reject("SelfTethered: post lies on the topline");
    for (const Twist& t : cert.post_fill) {
        if (top_set.count(hash_twist(t))) {
            return Verdict::reject("SelfTethered: post fill twist lies on the topline");
        }
    }

    TrieLookup posted = trie_verify(cert.post.rigging, lid, cert.post_inclusion);
    if (!posted.bound() || posted.value != hid) {
        return Verdict::reject("PostBindingMismatch: post rigging does not bind lead to hoist");
    }
    return Verdict::accept();
}

namespace {

std::vector<Twist> resolve_fill(const TwistSource& src, const Line& line) {
    std::vector<Twist> fill;
    for (std::size_t i = 1; i + 1 < line.size(); ++i) {
        const Twist* rec = src.find(line[i]);
        if (!rec) throw AssemblyError("Unresolved", "missing twist " + line[i].hex());
        fill.push_back(*rec);
    }
    return fill;
}

const Twist& resolve(const TwistSource& src, const HashRef& id, const char* role) {
    const Twist* rec = src.find(id);
    if (!rec) throw AssemblyError("Unresolved", std::string("missing ") + role + " " + id.hex());
    return *rec;
}

}  // namespace

HalfHitchCert assemble_half_hitch(const TwistSource& src, const TrieNodeStore& nodes,
                                  const HashRef& fastener, const HashRef& lead,
                                  const HashRef& meet, const HashRef& hoist) {
    HalfHitchCert cert;
    cert.fastener = resolve(src, fastener, "fastener");
    cert.lead = resolve(src, lead, "lead");
    cert.meet = resolve(src, meet, "meet");
    cert.hoist = resolve(src, hoist, "hoist");

    if (cert.lead.tether != fastener) {
        throw AssemblyError("FastenerMismatch", "fastener is not the tether of the lead");
    }
    if (cert.meet.loose()) throw AssemblyError("MeetLoose", "meet has a null tether");
    if (hoist == fastener) throw AssemblyError("DegenerateTopline", "hoist equals fastener");
    if (meet == lead) throw AssemblyError("DegenerateFootline", "meet equals lead");

    LineResult foot = line_between(src, lead, meet);
    if (foot.status == LineResult::Status::unknown) {
        throw AssemblyError("Unresolved", "footline has unresolvable twists");
    }
    if (!foot.ok()) throw AssemblyError("LeadNotPredecessor", "lead does not precede meet");
    cert.footline_fill = resolve_fill(src, foot.line);
    for (const Twist& t : cert.footline_fill) {
        if (t.fast()) {
            throw AssemblyError("LeadNotFastPrevious", "fast twist between lead and meet");
        }
    }

    LineResult top = line_between(src, fastener, hoist);
    if (top.status == LineResult::Status::unknown) {
        throw AssemblyError("Unresolved", "topline has unresolvable twists");
    }
    if (!top.ok()) {
        throw AssemblyError("HoistNotSuccessor", "hoist is not a successor of the fastener");
    }
    cert.topline_fill = resolve_fill(src, top.line);

    IdSet top_set(top.line.begin(), top.line.end());
    for (const HashRef& id : foot.line) {
        if (top_set.count(id)) {
            throw AssemblyError("SelfTethered", "footline twist " + id.hex() + " lies on the topline");
        }
    }

    try {
        cert.hoist_inclusion = trie_prove(cert.hoist.rigging, lead, nodes);
    } catch (const TrieError& e) {
        throw AssemblyError("Unresolved", std::string("hoist rigging: ") + e.what());
    }
    TrieLookup hoisted = trie_verify(cert.hoist.rigging, lead, cert.hoist_inclusion);
    if (!hoisted.bound() || hoisted.value != meet) {
        throw AssemblyError("HoistInclusionFailed", "hoist rigging does not bind lead to meet");
    }

    for (const Twist& t : cert.topline_fill) {
        TrieProof proof;
        try {
            proof = trie_prove(t.rigging, lead, nodes);
        } catch (const TrieError& e) {
            throw AssemblyError("Unresolved", std::string("topline rigging: ") + e.what());
        }
        TrieLookup res = trie_verify(t.rigging, lead, proof);
        if (!res.absent()) {
            throw AssemblyError("NotFirstSuccessor",
                                "topline twist " + hash_twist(t).hex() + " already binds the lead");
        }
        cert.firstness_exclusions.push_back(std::move(proof));
    }
    return cert;
}

HitchCert assemble_hitch(const TwistSource& src, const TrieNodeStore& nodes,
                         const HashRef& fastener, const HashRef& lead, const HashRef& meet,
                         const HashRef& hoist, const HashRef& post) {
    HitchCert cert;
    cert.half = assemble_half_hitch(src, nodes, fastener, lead, meet, hoist);
    cert.post = resolve(src, post, "post");

    if (post == meet) throw AssemblyError("DegeneratePostline", "post equals meet");
    LineResult ext = line_between(src, meet, post);
    if (ext.status == LineResult::Status::unknown) {
        throw AssemblyError("Unresolved", "extended footline has unresolvable twists");
    }
    if (!ext.ok()) throw AssemblyError("MeetNotPredecessor", "meet does not precede post");
    cert.post_fill = resolve_fill(src, ext.line);
    for (const Twist& t : cert.post_fill) {
        if (t.fast()) {
            throw AssemblyError("MeetNotFastPrevious", "fast twist between meet and post");
        }
    }

    try {
        cert.post_inclusion = trie_prove(cert.post.rigging, lead, nodes);
    } catch (const TrieError& e) {
        throw AssemblyError("Unresolved", std::string("post rigging: ") + e.what());
    }
    TrieLookup posted = trie_verify(cert.post.rigging, lead, cert.post_inclusion);
    if (!posted.bound() || posted.value != hoist) {
        throw AssemblyError("PostBindingMismatch", "post rigging does not bind lead to hoist");
    }
    return cert;
}

namespace {

ChronologyWitness chronology_common(const HalfHitchCert& cert) {
    HashRef fid = hash_twist(cert.fastener);
    HashRef lid = hash_twist(cert.lead);
    HashRef mid = hash_twist(cert.meet);
    HashRef hid = hash_twist(cert.hoist);

    TwistStore pool = half_hitch_pool(cert);
    ChronologyWitness w;
    w.waypoints = {fid, lid, mid, hid};

    CausalChain tether{fid, lid, {CausalLink{fid, lid, LinkKind::tether, {}, {}}}};
    w.segments.push_back(std::move(tether));
    w.segments.push_back(line_segment_chain(pool, lid, mid));
    CausalChain hoisted{mid, hid,
                        {CausalLink{mid, hid, LinkKind::rigging_value, lid, cert.hoist_inclusion}}};
    w.segments.push_back(std::move(hoisted));
    return w;
}

}  // namespace

ChronologyWitness hitch_chronology_witness(const HalfHitchCert& cert) {
    return chronology_common(cert);
}

ChronologyWitness hitch_chronology_witness(const HitchCert& cert) {
    ChronologyWitness w = chronology_common(cert.half);
    HashRef lid = hash_twist(cert.half.lead);
    HashRef hid = hash_twist(cert.half.hoist);
    HashRef nid = hash_twist(cert.post);
    w.waypoints.push_back(nid);
    CausalChain posted{hid, nid,
                       {CausalLink{hid, nid, LinkKind::rigging_value, lid, cert.post_inclusion}}};
    w.segments.push_back(std::move(posted));
    return w;
}

Verdict verify_chronology(const TwistSource& src, const ChronologyWitness& witness) {
    if (witness.waypoints.size() < 2 || witness.segments.size() + 1 != witness.waypoints.size()) {
        return Verdict::reject("ChronologyShape: segment and waypoint counts disagree");
    }
    for (std::size_t i = 0; i < witness.segments.size(); ++i) {
        const CausalChain& seg = witness.segments[i];
        if (seg.from != witness.waypoints[i] || seg.to != witness.waypoints[i + 1]) {
            return Verdict::reject("ChronologyShape: segment " + std::to_string(i) +
                                   " does not connect its waypoints");
        }
        if (seg.links.empty()) {
            return Verdict::reject("ChronologyShape: segment " + std::to_string(i) +
                                   " is empty (strict precedence required)");
        }
        ChainCheck check = verify_chain(src, seg);
        if (!check.ok) {
            return Verdict::reject("ChronologyChain: segment " + std::to_string(i) + ": " +
                                   check.reason);
        }
    }
    return Verdict::accept();
}

}  // namespace rigging
