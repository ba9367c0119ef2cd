#include "rigging/rig.hpp"

#include <algorithm>

namespace rigging {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void merge_pool(TwistStore& into, const TwistStore& from) {
    for (const auto& [id, twist] : from) into.put(twist);
}

}  // namespace

const char* guild_name(Guild g) {
    return g == Guild::gh ? "GH" : "GUp";
}

RigCert RigCert::clone() const {
    RigCert out;
    out.corkline = corkline;
    out.leadline = leadline;
    std::visit(overloaded{
                   [&](const HalfHitchLeaf& leaf) { out.node = leaf; },
                   [&](const SpliceNode& s) {
                       out.node = SpliceNode{std::make_unique<RigCert>(s.left->clone()), s.post_ext,
                                             std::make_unique<RigCert>(s.right->clone())};
                   },
                   [&](const LashNode& l) {
                       out.node = LashNode{l.bottom, std::make_unique<RigCert>(l.upper->clone())};
                   },
               },
               node);
    return out;
}

TwistStore rig_pool(const RigCert& cert) {
    TwistStore pool;
    std::visit(overloaded{
                   [&](const HalfHitchLeaf& leaf) {
                       pool = half_hitch_pool(leaf.hh);
                       for (const Twist& t : leaf.cork_before) pool.put(t);
                       for (const Twist& t : leaf.cork_after) pool.put(t);
                   },
                   [&](const SpliceNode& s) {
                       pool = rig_pool(*s.left);
                       merge_pool(pool, rig_pool(*s.right));
                       pool.put(s.post_ext.post);
                       for (const Twist& t : s.post_ext.fill) pool.put(t);
                   },
                   [&](const LashNode& l) {
                       pool = half_hitch_pool(l.bottom);
                       merge_pool(pool, rig_pool(*l.upper));
                   },
               },
               cert.node);
    return pool;
}

namespace {

RigVerdict verify_node(const RigCert& cert, RigView& view);

RigVerdict verify_leaf(const RigCert& cert, const HalfHitchLeaf& leaf, RigView& view) {
    Verdict hh = verify_half_hitch(leaf.hh);
    if (!hh.ok) return RigVerdict::reject("Leaf: " + hh.reason);

    Line cork;
    for (const Twist& t : leaf.cork_before) {
        HashRef id = hash_twist(t);
        if (!cork.empty() && t.prev != cork.back()) {
            return RigVerdict::reject("CorkExtensionBroken: extension before the fastener");
        }
        cork.push_back(id);
    }
    if (!cork.empty() && leaf.hh.fastener.prev != cork.back()) {
        return RigVerdict::reject("CorkExtensionBroken: fastener does not continue the extension");
    }
    Line top = leaf.hh.topline();
    cork.insert(cork.end(), top.begin(), top.end());
    for (const Twist& t : leaf.cork_after) {
        HashRef id = hash_twist(t);
        if (t.prev != cork.back()) {
            return RigVerdict::reject("CorkExtensionBroken: extension after the hoist");
        }
        cork.push_back(id);
    }

    Line lead = leaf.hh.footline();
    if (cert.corkline != cork) return RigVerdict::reject("CachedCorklineMismatch");
    if (cert.leadline != lead) return RigVerdict::reject("CachedLeadlineMismatch");

    view.cork_set = IdSet(cork.begin(), cork.end());
    view.noncork = IdSet(lead.begin(), lead.end());
    for (const HashRef& id : view.noncork) {
        if (view.cork_set.count(id)) {
            return RigVerdict::reject("CorklineReuse: leadline twist " + id.hex() +
                                      " lies on the corkline");
        }
    }

    view.corkline = std::move(cork);
    view.leadline = std::move(lead);
    view.pool = half_hitch_pool(leaf.hh);
    for (const Twist& t : leaf.cork_before) view.pool.put(t);
    for (const Twist& t : leaf.cork_after) view.pool.put(t);
    view.first_hh = &leaf.hh;
    view.base_hh = &leaf.hh;
    view.guild = Guild::gh;
    return RigVerdict::accept(Guild::gh);
}

RigVerdict verify_splice(const RigCert& cert, const SpliceNode& node, RigView& view) {
    RigView lv, rv;
    RigVerdict left = verify_node(*node.left, lv);
    if (!left.ok) return RigVerdict::reject("SpliceLeft: " + left.reason);
    RigVerdict right = verify_node(*node.right, rv);
    if (!right.ok) return RigVerdict::reject("SpliceRight: " + right.reason);

    if (!lv.base_hh) return RigVerdict::reject("SpliceLeftLength: left rig is itself a splice");
    int llen;
    try {
        llen = fast_line_length(lv.pool, lv.leadline);
    } catch (const Error& e) {
        return RigVerdict::reject(std::string("SpliceLeftLength: ") + e.what());
    }
    if (llen != 1) return RigVerdict::reject("SpliceLeftLength: left rig length is not 1");

    if (lv.leadline.back() != rv.leadline.front()) {
        return RigVerdict::reject("SpliceJunction: leadlines do not share the junction twist");
    }

    const HalfHitchCert* h1 = rv.first_hh;
    HashRef a2 = hash_twist(h1->meet);
    if (hash_twist(node.post_ext.post) != a2) {
        return RigVerdict::reject("SplicePostMismatch: post is not the meet of the next hitch");
    }

    HitchCert full{*lv.base_hh, node.post_ext.post, node.post_ext.fill, node.post_ext.inclusion};
    Verdict hv = verify_hitch(full);
    if (!hv.ok) return RigVerdict::reject("SpliceHitch: " + hv.reason);

    TwistStore pool = lv.pool;
    merge_pool(pool, rv.pool);
    pool.put(node.post_ext.post);
    for (const Twist& t : node.post_ext.fill) pool.put(t);

    std::vector<Line> corks{lv.corkline, rv.corkline};
    EnvelopeResult env = enveloping_line(pool, corks);
    if (env.status == EnvelopeResult::Status::misaligned) {
        return RigVerdict::reject("CorklinesNotAligned: spliced corklines admit no enveloping line");
    }
    if (env.status == EnvelopeResult::Status::unknown) {
        return RigVerdict::reject("CorklineGap: spliced corklines cannot be bridged from the certificate");
    }

    Line lead = lv.leadline;
    lead.insert(lead.end(), rv.leadline.begin() + 1, rv.leadline.end());

    if (cert.corkline != env.line) return RigVerdict::reject("CachedCorklineMismatch");
    if (cert.leadline != lead) return RigVerdict::reject("CachedLeadlineMismatch");

    view.noncork = std::move(lv.noncork);
    view.noncork.insert(rv.noncork.begin(), rv.noncork.end());
    view.cork_set = IdSet(env.line.begin(), env.line.end());
    for (const HashRef& id : view.noncork) {
        if (view.cork_set.count(id)) {
            return RigVerdict::reject("CorklineReuse: corkline twist " + id.hex() +
                                      " reappears elsewhere in the rig");
        }
    }

    view.corkline = std::move(env.line);
    view.leadline = std::move(lead);
    view.pool = std::move(pool);
    view.first_hh = lv.first_hh;
    view.base_hh = nullptr;
    view.guild = Guild::gup;
    return RigVerdict::accept(Guild::gup);
}

RigVerdict verify_lash(const RigCert& cert, const LashNode& node, RigView& view) {
    Verdict hh = verify_half_hitch(node.bottom);
    if (!hh.ok) return RigVerdict::reject("LashBottom: " + hh.reason);
    RigView uv;
    RigVerdict upper = verify_node(*node.upper, uv);
    if (!upper.ok) return RigVerdict::reject("LashUpper: " + upper.reason);

    Line top = node.bottom.topline();
    auto at = std::find(uv.leadline.begin(), uv.leadline.end(), top.front());
    if (at == uv.leadline.end() ||
        static_cast<std::size_t>(uv.leadline.end() - at) < top.size() ||
        !std::equal(top.begin(), top.end(), at)) {
        return RigVerdict::reject("LashContainment: bottom topline is not inside the upper leadline");
    }

    Line lead = node.bottom.footline();
    IdSet bottom_ids(top.begin(), top.end());
    bottom_ids.insert(lead.begin(), lead.end());
    for (const HashRef& z : uv.corkline) {
        if (bottom_ids.count(z)) {
            return RigVerdict::reject("CorklineReuse: corkline twist " + z.hex() +
                                      " is present in the lashed half-hitch");
        }
    }

    if (cert.corkline != uv.corkline) return RigVerdict::reject("CachedCorklineMismatch");
    if (cert.leadline != lead) return RigVerdict::reject("CachedLeadlineMismatch");

    view.cork_set = std::move(uv.cork_set);
    view.noncork = std::move(uv.noncork);
    view.noncork.insert(bottom_ids.begin(), bottom_ids.end());
    view.corkline = std::move(uv.corkline);
    view.leadline = std::move(lead);
    view.pool = std::move(uv.pool);
    merge_pool(view.pool, half_hitch_pool(node.bottom));
    view.first_hh = &node.bottom;
    view.base_hh = &node.bottom;
    view.guild = Guild::gup;
    return RigVerdict::accept(Guild::gup);
}

RigVerdict verify_node(const RigCert& cert, RigView& view) {
    return std::visit(
        overloaded{
            [&](const HalfHitchLeaf& leaf) { return verify_leaf(cert, leaf, view); },
            [&](const SpliceNode& s) { return verify_splice(cert, s, view); },
            [&](const LashNode& l) { return verify_lash(cert, l, view); },
        },
        cert.node);
}

}  // namespace

RigVerdict verify_rig(const RigCert& cert, RigView& view) {
    try {
        return verify_node(cert, view);
    } catch (const Error& e) {
        return RigVerdict::reject(std::string("MalformedCertificate: ") + e.what());
    }
}

RigVerdict verify_rig(const RigCert& cert) {
    RigView view;
    return verify_rig(cert, view);
}

int rig_length(const RigCert& cert) {
    TwistStore pool = rig_pool(cert);
    return fast_line_length(pool, cert.leadline);
}

IntResult rig_height(const TwistSource& extra, const RigCert& cert) {
    TwistStore pool = rig_pool(cert);
    OverlaySource src(pool, extra);
    IdSet cork(cert.corkline.begin(), cert.corkline.end());
    HashRef x = cert.leadline.front();
    int hops = 0;
    while (!cork.count(x)) {
        RefResult next = fast_tether(src, x);
        if (!next.ok()) return {IntResult::Status::unknown, 0};
        x = next.ref;
        ++hops;
        if (hops > 1 << 20) return {IntResult::Status::unknown, 0};
    }
    return {IntResult::Status::ok, hops};
}

TetherlineResult tetherline(const TwistSource& extra, const RigCert& cert) {
    TwistStore pool = rig_pool(cert);
    OverlaySource src(pool, extra);
    IdSet cork(cert.corkline.begin(), cert.corkline.end());

    TetherlineResult out;
    HashRef x = cert.leadline.front();
    out.twists.insert(x);
    while (!cork.count(x)) {
        const Twist* rec = src.find(x);
        if (!rec || rec->loose()) return {TetherlineResult::Status::unknown, {}, 0};
        HashRef cur = rec->tether;
        // Tether plus everything back to the nearest fast twist.
        for (;;) {
            out.twists.insert(cur);
            const Twist* crec = src.find(cur);
            if (!crec) return {TetherlineResult::Status::unknown, {}, 0};
            if (crec->fast() || cork.count(cur)) break;
            if (crec->prev.is_null()) return {TetherlineResult::Status::unknown, {}, 0};
            cur = crec->prev;
        }
        x = cur;
        ++out.height;
    }
    out.status = TetherlineResult::Status::ok;
    return out;
}

Verdict holds_fast_check(const TwistSource& src, const Line& leadline, const Line& corkline,
                         const HoldsFastWitness& witness) {
    LineResult lead = validate_line(src, leadline);
    if (!lead.ok()) return Verdict::reject("HoldsFast: leadline is not a resolvable line");
    LineResult cork = validate_line(src, corkline);
    if (!cork.ok()) return Verdict::reject("HoldsFast: corkline is not a resolvable line");

    if (witness.ascent.from != corkline.front() || witness.ascent.to != leadline.front()) {
        return Verdict::reject("HoldsFast: ascent does not connect corkline start to leadline start");
    }
    if (witness.descent.from != leadline.back() || witness.descent.to != corkline.back()) {
        return Verdict::reject("HoldsFast: descent does not connect leadline end to corkline end");
    }
    ChainCheck up = verify_chain(src, witness.ascent);
    if (!up.ok) return Verdict::reject("HoldsFast ascent: " + up.reason);
    ChainCheck down = verify_chain(src, witness.descent);
    if (!down.ok) return Verdict::reject("HoldsFast descent: " + down.reason);
    return Verdict::accept();
}

namespace {

HoldsFastWitness build_witness(const RigCert& cert, const TwistStore& pool) {
    return std::visit(
        overloaded{
            [&](const HalfHitchLeaf& leaf) {
                HashRef fid = hash_twist(leaf.hh.fastener);
                HashRef lid = hash_twist(leaf.hh.lead);
                HashRef mid = hash_twist(leaf.hh.meet);
                HashRef hid = hash_twist(leaf.hh.hoist);
                CausalChain up = line_segment_chain(pool, cert.corkline.front(), fid);
                up = join_chains(up, CausalChain{fid, lid, {CausalLink{fid, lid, LinkKind::tether, {}, {}}}});
                CausalChain down{
                    mid, hid, {CausalLink{mid, hid, LinkKind::rigging_value, lid, leaf.hh.hoist_inclusion}}};
                down = join_chains(down, line_segment_chain(pool, hid, cert.corkline.back()));
                return HoldsFastWitness{std::move(up), std::move(down)};
            },
            [&](const SpliceNode& s) {
                HoldsFastWitness wl = build_witness(*s.left, pool);
                HoldsFastWitness wr = build_witness(*s.right, pool);
                CausalChain up = line_segment_chain(pool, cert.corkline.front(), s.left->corkline.front());
                up = join_chains(up, wl.ascent);
                CausalChain down =
                    join_chains(wr.descent, line_segment_chain(pool, s.right->corkline.back(), cert.corkline.back()));
                return HoldsFastWitness{std::move(up), std::move(down)};
            },
            [&](const LashNode& l) {
                HoldsFastWitness wu = build_witness(*l.upper, pool);
                HashRef fid = hash_twist(l.bottom.fastener);
                HashRef lid = hash_twist(l.bottom.lead);
                HashRef mid = hash_twist(l.bottom.meet);
                HashRef hid = hash_twist(l.bottom.hoist);
                CausalChain up = join_chains(wu.ascent, line_segment_chain(pool, l.upper->leadline.front(), fid));
                up = join_chains(up, CausalChain{fid, lid, {CausalLink{fid, lid, LinkKind::tether, {}, {}}}});
                CausalChain down{
                    mid, hid, {CausalLink{mid, hid, LinkKind::rigging_value, lid, l.bottom.hoist_inclusion}}};
                down = join_chains(down, line_segment_chain(pool, hid, l.upper->leadline.back()));
                down = join_chains(down, wu.descent);
                return HoldsFastWitness{std::move(up), std::move(down)};
            },
        },
        cert.node);
}

}  // namespace

HoldsFastWitness make_holds_fast_witness(const RigCert& cert) {
    TwistStore pool = rig_pool(cert);
    return build_witness(cert, pool);
}

Ternary spliceable(const RigCert& r0, const RigCert& r1, const TrieNodeStore* nodes) {
    RigView v0, v1;
    if (!verify_rig(r0, v0).ok) return Ternary::no;
    if (!verify_rig(r1, v1).ok) return Ternary::no;
    if (!v0.base_hh) return Ternary::no;
    try {
        if (fast_line_length(v0.pool, v0.leadline) != 1) return Ternary::no;
    } catch (const Error&) {
        return Ternary::no;
    }
    if (v0.leadline.back() != v1.leadline.front()) return Ternary::no;

    TwistStore pool = v0.pool;
    merge_pool(pool, v1.pool);
    Ternary corks = aligned_lines(pool, v0.corkline, v1.corkline);
    if (corks == Ternary::no) return Ternary::no;

    // The junction hitch must be extendable with the next meet as its post.
    Ternary post_ok = Ternary::unknown;
    if (nodes) {
        const HalfHitchCert* h1 = v1.first_hh;
        HashRef lid0 = hash_twist(v0.base_hh->lead);
        HashRef hid0 = hash_twist(v0.base_hh->hoist);
        try {
            TrieProof proof = trie_prove(h1->meet.rigging, lid0, *nodes);
            TrieLookup res = trie_verify(h1->meet.rigging, lid0, proof);
            post_ok = (res.bound() && res.value == hid0) ? Ternary::yes : Ternary::no;
        } catch (const TrieError&) {
            post_ok = Ternary::unknown;
        }
    }
    if (post_ok == Ternary::no) return Ternary::no;
    if (post_ok == Ternary::unknown || corks == Ternary::unknown) return Ternary::unknown;
    return Ternary::yes;
}

RigCert splice(const RigCert& r0, const RigCert& r1, const TrieNodeStore& nodes) {
    if (spliceable(r0, r1, &nodes) != Ternary::yes) {
        throw AssemblyError("NotSpliceable", "pair fails the spliceability conditions");
    }
    RigView v0, v1;
    verify_rig(r0, v0);
    verify_rig(r1, v1);

    const HalfHitchCert* h1 = v1.first_hh;
    PostExtension ext;
    ext.post = h1->meet;
    ext.fill = h1->footline_fill;
    ext.inclusion = trie_prove(ext.post.rigging, hash_twist(v0.base_hh->lead), nodes);

    RigCert out;
    out.node = SpliceNode{std::make_unique<RigCert>(r0.clone()), std::move(ext),
                          std::make_unique<RigCert>(r1.clone())};

    TwistStore pool = v0.pool;
    merge_pool(pool, v1.pool);
    std::vector<Line> corks{v0.corkline, v1.corkline};
    EnvelopeResult env = enveloping_line(pool, corks);
    if (!env.ok()) throw AssemblyError("NotSpliceable", "corklines admit no enveloping line");
    out.corkline = std::move(env.line);
    out.leadline = v0.leadline;
    out.leadline.insert(out.leadline.end(), v1.leadline.begin() + 1, v1.leadline.end());
    return out;
}

Ternary lashable(const RigCert& h0, const RigCert& r1) {
    RigView v0, v1;
    RigVerdict a = verify_rig(h0, v0);
    if (!a.ok || a.guild != Guild::gh) return Ternary::no;
    if (!verify_rig(r1, v1).ok) return Ternary::no;

    const Line& cork0 = v0.corkline;
    auto at = std::find(v1.leadline.begin(), v1.leadline.end(), cork0.front());
    if (at == v1.leadline.end() ||
        static_cast<std::size_t>(v1.leadline.end() - at) < cork0.size() ||
        !std::equal(cork0.begin(), cork0.end(), at)) {
        return Ternary::no;
    }

    IdSet h0_ids;
    for (const auto& [id, twist] : v0.pool) h0_ids.insert(id);
    for (const HashRef& z : v1.corkline) {
        if (h0_ids.count(z)) return Ternary::no;
    }
    return Ternary::yes;
}

RigCert lash(const RigCert& h0, const RigCert& r1) {
    if (lashable(h0, r1) != Ternary::yes) {
        throw AssemblyError("NotLashable", "pair fails the lashability conditions");
    }
    const auto* leaf = std::get_if<HalfHitchLeaf>(&h0.node);
    RigCert out;
    out.node = LashNode{leaf->hh, std::make_unique<RigCert>(r1.clone())};
    out.corkline = r1.corkline;
    out.leadline = leaf->hh.footline();
    return out;
}

RigCert make_leaf_rig(const HalfHitchCert& hh) {
    RigCert out;
    out.corkline = hh.topline();
    out.leadline = hh.footline();
    out.node = HalfHitchLeaf{hh, {}, {}};
    return out;
}

RigCert make_leaf_rig(const TwistSource& src, const HalfHitchCert& hh, const HashRef& cork_start,
                      const HashRef& cork_end) {
    HashRef fid = hash_twist(hh.fastener);
    HashRef hid = hash_twist(hh.hoist);
    LineResult before = line_between(src, cork_start, fid);
    if (!before.ok()) throw AssemblyError("Unresolved", "corkline extension before the fastener");
    LineResult after = line_between(src, hid, cork_end);
    if (!after.ok()) throw AssemblyError("Unresolved", "corkline extension after the hoist");

    HalfHitchLeaf leaf{hh, {}, {}};
    for (std::size_t i = 0; i + 1 < before.line.size(); ++i) {
        const Twist* rec = src.find(before.line[i]);
        if (!rec) throw AssemblyError("Unresolved", "missing corkline twist");
        leaf.cork_before.push_back(*rec);
    }
    for (std::size_t i = 1; i < after.line.size(); ++i) {
        const Twist* rec = src.find(after.line[i]);
        if (!rec) throw AssemblyError("Unresolved", "missing corkline twist");
        leaf.cork_after.push_back(*rec);
    }

    RigCert out;
    out.corkline.assign(before.line.begin(), before.line.end() - 1);  // topline() restores the fastener
    Line top = hh.topline();
    out.corkline.insert(out.corkline.end(), top.begin(), top.end());
    out.corkline.insert(out.corkline.end(), after.line.begin() + 1, after.line.end());
    out.leadline = hh.footline();
    out.node = std::move(leaf);
    return out;
}

}  // namespace rigging
