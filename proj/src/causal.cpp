#include "rigging/causal.hpp"

namespace rigging {

static ChainCheck verify_link(const TwistSource& src, const CausalLink& link, std::size_t index) {
    auto fail = [&](const std::string& what) {
        return ChainCheck::reject("link " + std::to_string(index) + ": " + what);
    };
    if (link.from.is_null() || link.to.is_null()) return fail("null endpoint");
    const Twist* to = src.find(link.to);
    if (!to) return fail("unresolvable twist " + link.to.hex());
    switch (link.kind) {
        case LinkKind::prev:
            if (to->prev != link.from) return fail("prev field does not match");
            return ChainCheck::accept();
        case LinkKind::tether:
            if (to->tether != link.from) return fail("tether field does not match");
            return ChainCheck::accept();
        case LinkKind::rigging_key: {
            if (link.key != link.from) return fail("rigging key link must carry its own key");
            TrieLookup res = trie_verify(to->rigging, link.key, link.proof);
            if (!res.bound()) return fail("rigging trie does not bind the key");
            return ChainCheck::accept();
        }
        case LinkKind::rigging_value: {
            TrieLookup res = trie_verify(to->rigging, link.key, link.proof);
            if (!res.bound()) return fail("rigging trie does not bind the key");
            if (res.value != link.from) return fail("rigging trie binds a different value");
            return ChainCheck::accept();
        }
    }
    return fail("unknown link kind");
}

ChainCheck verify_chain(const TwistSource& src, const CausalChain& chain) {
    if (chain.links.empty()) {
        if (chain.from == chain.to) return ChainCheck::accept();
        return ChainCheck::reject("empty chain between distinct twists");
    }
    if (chain.links.front().from != chain.from) return ChainCheck::reject("chain start mismatch");
    if (chain.links.back().to != chain.to) return ChainCheck::reject("chain end mismatch");
    for (std::size_t i = 0; i + 1 < chain.links.size(); ++i) {
        if (chain.links[i].to != chain.links[i + 1].from) {
            return ChainCheck::reject("chain broken between links " + std::to_string(i) + " and " +
                                      std::to_string(i + 1));
        }
    }
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        ChainCheck c = verify_link(src, chain.links[i], i);
        if (!c.ok) return c;
    }
    return ChainCheck::accept();
}

CausalChain line_segment_chain(const TwistSource& src, const HashRef& from, const HashRef& to) {
    LineResult seg = line_between(src, from, to);
    if (!seg.ok()) throw Error("no resolvable line segment from " + from.hex() + " to " + to.hex());
    CausalChain chain{from, to, {}};
    for (std::size_t i = 1; i < seg.line.size(); ++i) {
        chain.links.push_back(CausalLink{seg.line[i - 1], seg.line[i], LinkKind::prev, {}, {}});
    }
    return chain;
}

CausalChain join_chains(const CausalChain& a, const CausalChain& b) {
    if (a.to != b.from) throw Error("cannot join chains: endpoints disagree");
    CausalChain out{a.from, b.to, a.links};
    out.links.insert(out.links.end(), b.links.begin(), b.links.end());
    return out;
}

}  // namespace rigging
