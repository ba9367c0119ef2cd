#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigging/build.hpp"
#include "rigging/graph.hpp"

using namespace rigging;

namespace {

struct Fixture {
    TwistStore store;
    TrieNodeStore nodes;
    ScenarioBuilder builder{store, nodes, 11};
};

}  // namespace

TEST_CASE("put is idempotent and content-addressed") {
    TwistStore store;
    Twist t;  // all-null
    HashRef id1 = store.put(t);
    HashRef id2 = store.put(t);
    CHECK(id1 == id2);
    CHECK(store.size() == 1);
    CHECK(id1 == hash_twist(t));
    REQUIRE(store.find(id1) != nullptr);
    CHECK(*store.find(id1) == t);

    std::mt19937_64 rng(5);
    std::size_t distinct = store.size();
    for (int i = 0; i < 10000; ++i) {
        Twist u;
        u.prev = HashRef::sha256([&] {
            Bytes d(32);
            for (auto& b : d) b = static_cast<std::uint8_t>(rng());
            return d;
        }());
        store.put(u);
        ++distinct;
        CHECK(store.size() == distinct);
    }
}

TEST_CASE("precedes is strict and recursive") {
    Fixture fx;
    HashRef a = fx.builder.add_origin();
    HashRef b = fx.builder.add(a, HashRef::null());
    HashRef c = fx.builder.add(b, HashRef::null());

    CHECK(precedes(fx.store, a, b) == Ternary::yes);
    CHECK(precedes(fx.store, a, c) == Ternary::yes);
    CHECK(precedes(fx.store, c, a) == Ternary::no);
    CHECK(precedes(fx.store, a, a) == Ternary::no);  // non-reflexive
    CHECK(precedes(fx.store, c, c) == Ternary::no);
}

TEST_CASE("unresolvable intermediates give unknown, not false") {
    TwistStore partial;
    Fixture fx;
    HashRef a = fx.builder.add_origin();
    HashRef b = fx.builder.add(a, HashRef::null());
    HashRef c = fx.builder.add(b, HashRef::null());
    // Copy only the tip into the partial store: the walk from c stalls at b.
    partial.put(*fx.store.find(c));
    CHECK(precedes(partial, a, c) == Ternary::unknown);
    partial.put(*fx.store.find(b));
    CHECK(precedes(partial, a, c) == Ternary::yes);  // a is named by b's record
}

TEST_CASE("alignment of twists") {
    Fixture fx;
    HashRef z = fx.builder.add_origin();
    HashRef x = fx.builder.add(z, HashRef::null(), fx.builder.salt_pairs());
    HashRef y = fx.builder.add(z, HashRef::null(), fx.builder.salt_pairs());
    REQUIRE(x != y);  // siblings
    CHECK(aligned_twists(fx.store, x, y) == Ternary::no);
    CHECK(aligned_twists(fx.store, x, x) == Ternary::yes);
    CHECK(aligned_twists(fx.store, z, x) == Ternary::yes);
    CHECK(aligned_twists(fx.store, x, z) == Ternary::yes);
}

TEST_CASE("line_between returns the unique connecting line") {
    Fixture fx;
    HashRef a = fx.builder.add_origin();
    HashRef b = fx.builder.add(a, HashRef::null());
    HashRef c = fx.builder.add(b, HashRef::null());
    HashRef d = fx.builder.add(a, HashRef::null(), fx.builder.salt_pairs());  // sibling branch

    LineResult r = line_between(fx.store, a, c);
    REQUIRE(r.ok());
    CHECK(r.line == Line({a, b, c}));
    CHECK(line_between(fx.store, a, a).line == Line({a}));
    CHECK(line_between(fx.store, c, d).status == LineResult::Status::misaligned);
}

TEST_CASE("fast_previous walks over loose twists") {
    Fixture fx;
    HashRef anchor = fx.builder.add_origin();
    HashRef f = fx.builder.add(anchor, anchor);  // fast
    HashRef l1 = fx.builder.add(f, HashRef::null());
    HashRef l2 = fx.builder.add(l1, HashRef::null());
    HashRef x = fx.builder.add(l2, HashRef::null());

    CHECK(fast_previous(fx.store, x).ref == f);

    HashRef g = fx.builder.add(f, anchor);  // fast directly before y
    HashRef y = fx.builder.add(g, HashRef::null());
    CHECK(fast_previous(fx.store, y).ref == g);

    // No fast twist before the origin.
    HashRef lonely0 = fx.builder.add_origin();
    HashRef lonely1 = fx.builder.add(lonely0, HashRef::null());
    CHECK(fast_previous(fx.store, lonely1).status == RefResult::Status::none);
}

TEST_CASE("fast_tether resolves through loose tether targets") {
    Fixture fx;
    HashRef anchor = fx.builder.add_origin();
    HashRef q = fx.builder.add(anchor, anchor);             // fast
    HashRef loose_mid = fx.builder.add(q, HashRef::null()); // loose
    HashRef x1 = fx.builder.add(HashRef::null(), q, fx.builder.salt_pairs());
    CHECK(fast_tether(fx.store, x1).ref == q);  // tether already fast

    HashRef x2 = fx.builder.add(HashRef::null(), loose_mid, fx.builder.salt_pairs());
    CHECK(fast_tether(fx.store, x2).ref == q);  // tether loose, walk to its fast previous

    HashRef loose = fx.builder.add(anchor, HashRef::null());
    CHECK_THROWS_AS(fast_tether(fx.store, loose), std::invalid_argument);
}

TEST_CASE("fast line length counts fenceposts") {
    Fixture fx;
    HashRef anchor = fx.builder.add_origin();
    HashRef f = fx.builder.add(anchor, anchor);
    CHECK(fast_line_length(fx.store, Line{f}) == 0);

    HashRef x = fx.builder.add(f, HashRef::null());
    HashRef g = fx.builder.add(x, anchor);
    CHECK(fast_line_length(fx.store, Line{f, x, g}) == 1);

    HashRef y = fx.builder.add(g, HashRef::null());
    HashRef h = fx.builder.add(y, anchor);
    CHECK(fast_line_length(fx.store, Line{f, x, g, y, h}) == 2);

    CHECK_THROWS_AS(fast_line_length(fx.store, Line{f, x}), LengthUndefined);
    CHECK_THROWS_AS(fast_line_length(fx.store, Line{x, g}), LengthUndefined);
    CHECK_THROWS_AS(fast_line_length(fx.store, Line{f, g}), Error);  // not consecutive
}

TEST_CASE("enveloping line merges overlapping and nested segments") {
    Fixture fx;
    HashRef a = fx.builder.add_origin();
    HashRef b = fx.builder.add(a, HashRef::null());
    HashRef c = fx.builder.add(b, HashRef::null());
    HashRef d = fx.builder.add(c, HashRef::null());

    std::vector<Line> overlap{{a, b}, {b, c}};
    EnvelopeResult r = enveloping_line(fx.store, overlap);
    REQUIRE(r.ok());
    CHECK(r.line == Line({a, b, c}));

    std::vector<Line> gap{{a, b}, {d}};  // bridged via c from the store
    r = enveloping_line(fx.store, gap);
    REQUIRE(r.ok());
    CHECK(r.line == Line({a, b, c, d}));

    std::vector<Line> solo{{a, b, c}};
    CHECK(enveloping_line(fx.store, solo).line == Line({a, b, c}));

    HashRef s1 = fx.builder.add(b, HashRef::null(), fx.builder.salt_pairs());
    std::vector<Line> forked{{c, d}, {s1}};
    CHECK(enveloping_line(fx.store, forked).status == EnvelopeResult::Status::misaligned);

    std::vector<Line> siblings{{s1}, {c}};
    CHECK(enveloping_line(fx.store, siblings).status == EnvelopeResult::Status::misaligned);
}

TEST_CASE("predecessor order has tree structure on generated stores") {
    // For every pair of twists with a common descendant, the pair is aligned.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, seed);
        // A small random dag of lines with forks.
        std::vector<HashRef> all;
        all.push_back(builder.add_origin());
        std::mt19937_64 rng(seed ^ 0x9e3779b9);
        while (all.size() < 12) {
            HashRef parent = all[rng() % all.size()];
            all.push_back(builder.add(parent, HashRef::null(),
                                      (rng() % 2) ? builder.salt_pairs() : std::vector<TriePair>{}));
        }
        for (const HashRef& x : all) {
            for (const HashRef& y : all) {
                for (const HashRef& z : all) {
                    bool xz = (x == z) || precedes(store, x, z) == Ternary::yes;
                    bool yz = (y == z) || precedes(store, y, z) == Ternary::yes;
                    if (xz && yz) {
                        CHECK(aligned_twists(store, x, y) == Ternary::yes);
                    }
                }
                // Aligned distinct twists are strictly ordered one way.
                if (x != y && aligned_twists(store, x, y) == Ternary::yes) {
                    bool fwd = precedes(store, x, y) == Ternary::yes;
                    bool back = precedes(store, y, x) == Ternary::yes;
                    CHECK(fwd != back);
                }
            }
        }
    }
}

TEST_CASE("directory persistence round-trips and audits content addresses") {
    Fixture fx;
    fx.builder.half_hitch(2, 1);
    auto dir = std::filesystem::temp_directory_path() / "rigging_store_test";
    std::filesystem::remove_all(dir);
    fx.store.save_dir(dir);

    TwistStore loaded = TwistStore::load_dir(dir);
    CHECK(loaded.size() == fx.store.size());
    for (const auto& [id, twist] : fx.store) {
        REQUIRE(loaded.find(id) != nullptr);
        CHECK(*loaded.find(id) == twist);
    }

    // Corrupt one file: the loader must refuse it.
    auto it = std::filesystem::directory_iterator(dir);
    std::filesystem::path victim = it->path();
    std::filesystem::rename(victim, victim.parent_path() /
                                        (std::string(64, 'a') + ".twist"));
    CHECK_THROWS_AS(TwistStore::load_dir(dir), DecodingError);
    std::filesystem::remove_all(dir);
}
