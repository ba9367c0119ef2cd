#include "rigging/build.hpp"

#include "rigging/codec.hpp"

namespace rigging {

HashRef ScenarioBuilder::rand_ref() {
    Bytes digest(kSha256Bytes);
    for (std::size_t i = 0; i < kSha256Bytes; i += 8) {
        std::uint64_t word = rng_();
        for (std::size_t j = 0; j < 8; ++j) digest[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
    return HashRef::sha256(std::move(digest));
}

std::vector<TriePair> ScenarioBuilder::salt_pairs() {
    return {TriePair{rand_ref(), rand_ref()}};
}

HashRef ScenarioBuilder::add(const HashRef& prev, const HashRef& tether,
                             std::span<const TriePair> pairs) {
    Twist t{prev, tether, trie_build(pairs, nodes_)};
    return store_.put(t);
}

HashRef ScenarioBuilder::add_origin() {
    return add(HashRef::null(), HashRef::null(), salt_pairs());
}

ScenarioBuilder::HalfHitchScenario ScenarioBuilder::half_hitch(int topline_fill,
                                                               int footline_fill) {
    HashRef z0 = add_origin();
    HashRef f = add(z0, z0);
    HashRef l = add(HashRef::null(), f, salt_pairs());
    HashRef cur = l;
    for (int i = 0; i < footline_fill; ++i) cur = add(cur, HashRef::null());
    HashRef m = add(cur, f);
    HashRef top = f;
    for (int i = 0; i < topline_fill; ++i) {
        std::vector<TriePair> noise = (rng_() % 2) ? salt_pairs() : std::vector<TriePair>{};
        top = add(top, HashRef::null(), noise);
    }
    std::vector<TriePair> hoist_pairs{{l, m}};
    if (rng_() % 2) hoist_pairs.push_back({rand_ref(), rand_ref()});
    HashRef h = add(top, HashRef::null(), hoist_pairs);

    HalfHitchScenario out;
    out.fastener = f;
    out.lead = l;
    out.meet = m;
    out.hoist = h;
    out.cert = assemble_half_hitch(store_, nodes_, f, l, m, h);
    out.rig = make_leaf_rig(out.cert);
    return out;
}

ScenarioBuilder::HalfHitchScenario ScenarioBuilder::minimal_half_hitch() {
    HashRef f = add_origin();
    HashRef l = add(HashRef::null(), f, salt_pairs());
    HashRef m = add(l, f);
    HashRef h = add(f, HashRef::null(), std::vector<TriePair>{{l, m}});

    HalfHitchScenario out;
    out.fastener = f;
    out.lead = l;
    out.meet = m;
    out.hoist = h;
    out.cert = assemble_half_hitch(store_, nodes_, f, l, m, h);
    out.rig = make_leaf_rig(out.cert);
    return out;
}

RigCert ScenarioBuilder::spliced_chain(int hitches, int footline_fill) {
    if (hitches < 1) throw Error("spliced_chain needs at least one hitch");
    HashRef z0 = add_origin();
    std::vector<HashRef> f(hitches + 1), a(hitches + 1), hoist(hitches);
    f[0] = add(z0, z0);
    a[0] = add(HashRef::null(), f[0], salt_pairs());
    HashRef cork_tip = f[0];
    for (int i = 0; i < hitches; ++i) {
        f[i + 1] = add(cork_tip, z0);
        cork_tip = f[i + 1];
        HashRef cur = a[i];
        for (int j = 0; j < footline_fill; ++j) cur = add(cur, HashRef::null());
        std::vector<TriePair> pairs;
        if (i >= 1) pairs.push_back({a[i - 1], hoist[i - 1]});  // post binding for the previous hitch
        a[i + 1] = add(cur, f[i + 1], pairs);
        hoist[i] = add(cork_tip, HashRef::null(), std::vector<TriePair>{{a[i], a[i + 1]}});
        cork_tip = hoist[i];
    }
    RigCert rig = make_leaf_rig(assemble_half_hitch(store_, nodes_, f[hitches - 1], a[hitches - 1],
                                                    a[hitches], hoist[hitches - 1]));
    for (int i = hitches - 2; i >= 0; --i) {
        RigCert left =
            make_leaf_rig(assemble_half_hitch(store_, nodes_, f[i], a[i], a[i + 1], hoist[i]));
        rig = splice(left, rig, nodes_);
    }
    return rig;
}

RigCert ScenarioBuilder::lashed(int levels) {
    if (levels < 1) throw Error("lashed needs at least one level");
    int k = levels;
    HashRef z0 = add_origin();
    HashRef fk = add(z0, z0);
    std::vector<HashRef> l(k + 1), m(k + 1);
    l[k] = add(HashRef::null(), fk, salt_pairs());
    for (int j = k - 1; j >= 0; --j) l[j] = add(HashRef::null(), l[j + 1], salt_pairs());
    m[0] = add(l[0], l[1]);
    for (int j = 1; j <= k; ++j) {
        HashRef tether = (j < k) ? l[j + 1] : fk;
        m[j] = add(l[j], tether, std::vector<TriePair>{{l[j - 1], m[j - 1]}});
    }
    HashRef hk = add(fk, HashRef::null(), std::vector<TriePair>{{l[k], m[k]}});

    RigCert rig = make_leaf_rig(assemble_half_hitch(store_, nodes_, fk, l[k], m[k], hk));
    for (int j = k - 1; j >= 0; --j) {
        HalfHitchCert hh = assemble_half_hitch(store_, nodes_, l[j + 1], l[j], m[j], m[j + 1]);
        rig = lash(make_leaf_rig(hh), rig);
    }
    return rig;
}

RigCert ScenarioBuilder::custody_transfer() {
    HashRef z0 = add_origin();
    HashRef zf = add(z0, z0);
    HashRef il = add(HashRef::null(), zf, salt_pairs());   // first intermediate line
    HashRef a0 = add(HashRef::null(), il, salt_pairs());   // leadline start, fastened to I
    HashRef zf2 = add(zf, z0);
    HashRef jl = add(HashRef::null(), zf2, salt_pairs());  // second intermediate line
    HashRef a1 = add(a0, jl);                              // re-fastens to J mid-leadline
    HashRef im = add(il, zf, std::vector<TriePair>{{a0, a1}});
    HashRef a2 = add(a1, jl, std::vector<TriePair>{{a0, im}});  // post binding for the first hitch
    HashRef jm = add(jl, zf2, std::vector<TriePair>{{a1, a2}});
    HashRef hi = add(zf2, HashRef::null(), std::vector<TriePair>{{il, im}});
    HashRef hj = add(hi, HashRef::null(), std::vector<TriePair>{{jl, jm}});

    RigCert rig_i = make_leaf_rig(assemble_half_hitch(store_, nodes_, zf, il, im, hi));
    RigCert rig_j = make_leaf_rig(assemble_half_hitch(store_, nodes_, zf2, jl, jm, hj));
    RigCert via_i = lash(make_leaf_rig(assemble_half_hitch(store_, nodes_, il, a0, a1, im)), rig_i);
    RigCert via_j = lash(make_leaf_rig(assemble_half_hitch(store_, nodes_, jl, a1, a2, jm)), rig_j);
    return splice(via_i, via_j, nodes_);
}

ScenarioBuilder::DoubleSpend ScenarioBuilder::double_spend() {
    HashRef z0 = add_origin();
    HashRef f = add(z0, z0);
    HashRef a0 = add(HashRef::null(), f, salt_pairs());
    HashRef a1 = add(a0, f);
    HashRef h = add(f, HashRef::null(), std::vector<TriePair>{{a0, a1}});

    DoubleSpend out;
    out.lead = a0;
    out.meet_a = a1;
    out.valid = make_leaf_rig(assemble_half_hitch(store_, nodes_, f, a0, a1, h));

    // Second successor of a0, claimed through a hoist later on the same
    // corkline. The exclusion proof at the original hoist shows a binding,
    // so the certificate cannot verify.
    HashRef a1b = add(a0, f, salt_pairs());
    out.meet_b = a1b;
    HashRef h2 = add(h, HashRef::null(), std::vector<TriePair>{{a0, a1b}});

    HalfHitchCert forged;
    forged.fastener = *store_.find(f);
    forged.lead = *store_.find(a0);
    forged.meet = *store_.find(a1b);
    forged.hoist = *store_.find(h2);
    forged.topline_fill = {*store_.find(h)};
    forged.hoist_inclusion = trie_prove(forged.hoist.rigging, a0, nodes_);
    forged.firstness_exclusions = {trie_prove(store_.find(h)->rigging, a0, nodes_)};
    out.conflicting = make_leaf_rig(forged);
    return out;
}

void ScenarioBuilder::oracle_pool(int variant) {
    switch (variant % 6) {
        case 0:
            half_hitch(static_cast<int>(rng_() % 3), static_cast<int>(rng_() % 2));
            break;
        case 1:
            double_spend();
            break;
        case 2:
            spliced_chain(2);
            break;
        case 3:
            lashed(1);
            break;
        case 4: {
            // Forked corkline: one fastener, hoists on two branches.
            HashRef z0 = add_origin();
            HashRef f = add(z0, z0);
            HashRef l = add(HashRef::null(), f, salt_pairs());
            HashRef m1 = add(l, f);
            add(f, HashRef::null(), std::vector<TriePair>{{l, m1}});
            HashRef m2 = add(l, f, salt_pairs());
            add(f, HashRef::null(), std::vector<TriePair>{{l, m2}});
            break;
        }
        default: {
            half_hitch();
            HashRef noise = add_origin();
            add(noise, HashRef::null());
            break;
        }
    }
}

RigCert ScenarioBuilder::corkline_reuse_cert(int variant) {
    switch (variant % 4) {
        case 0:
        case 1: {
            // Line tethered to itself: topline and footline on one line.
            int fill = variant % 4;  // extra loose twists between meet and hoist
            HashRef c0 = add_origin();
            HashRef l = add(c0, c0, salt_pairs());
            HashRef m = add(l, c0);
            HashRef cur = m;
            for (int i = 0; i < fill; ++i) cur = add(cur, HashRef::null());
            HashRef h = add(cur, HashRef::null(), std::vector<TriePair>{{l, m}});

            HalfHitchCert cert;
            cert.fastener = *store_.find(c0);
            cert.lead = *store_.find(l);
            cert.meet = *store_.find(m);
            cert.hoist = *store_.find(h);
            LineResult top = line_between(store_, c0, h);
            for (std::size_t i = 1; i + 1 < top.line.size(); ++i) {
                const Twist* rec = store_.find(top.line[i]);
                cert.topline_fill.push_back(*rec);
                cert.firstness_exclusions.push_back(trie_prove(rec->rigging, l, nodes_));
            }
            cert.hoist_inclusion = trie_prove(cert.hoist.rigging, l, nodes_);
            return make_leaf_rig(cert);
        }
        default: {
            // Lash whose bottom footline continues the upper corkline's own
            // line, so the upper topline [wf .. wh] passes through the
            // bottom lead (and for odd variants the meet too). Every chain
            // and proof is genuine; only the corkline-reuse rule fires.
            bool cover_meet = (variant % 2) != 0;
            HashRef w0 = add_origin();
            HashRef wf = add(w0, w0);
            HashRef ul = add(HashRef::null(), wf, salt_pairs());  // upper leadline (line I)
            HashRef bl = add(wf, ul, salt_pairs());               // bottom lead: continues line W
            HashRef bm = add(bl, ul);
            HashRef um = add(ul, wf, std::vector<TriePair>{{bl, bm}});
            HashRef wh = add(cover_meet ? bm : bl, HashRef::null(), std::vector<TriePair>{{ul, um}});

            HalfHitchCert upper_hh = assemble_half_hitch(store_, nodes_, wf, ul, um, wh);
            RigCert upper = make_leaf_rig(upper_hh);
            HalfHitchCert bottom = assemble_half_hitch(store_, nodes_, ul, bl, bm, um);
            RigCert out;
            out.corkline = upper.corkline;
            out.leadline = bottom.footline();
            out.node = LashNode{std::move(bottom), std::make_unique<RigCert>(std::move(upper))};
            return out;
        }
    }
}

}  // namespace rigging
