// Acceptance suite: every criterion prints one PASS/FAIL line with its
// elapsed time and the run fails if any line fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "rigging/batch.hpp"
#include "rigging/codec.hpp"

using namespace rigging;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    Criterion(const char* n, double budget) : name(n), budget_seconds(budget) {}

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }

    void finish() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > budget_seconds) {
            ok = false;
            if (detail.empty()) detail = "over time budget";
        }
        std::printf("%s %-28s %6.2fs / %gs%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                    budget_seconds, detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

HitchCert build_full_hitch(ScenarioBuilder& b, int foot_fill) {
    HashRef z0 = b.add_origin();
    HashRef f0 = b.add(z0, z0);
    HashRef a0 = b.add(HashRef::null(), f0, b.salt_pairs());
    HashRef f1 = b.add(f0, z0);
    HashRef cur = a0;
    for (int i = 0; i < foot_fill; ++i) cur = b.add(cur, HashRef::null());
    HashRef a1 = b.add(cur, f1);
    HashRef h0 = b.add(f1, HashRef::null(), std::vector<TriePair>{{a0, a1}});
    HashRef a2 = b.add(a1, f1, std::vector<TriePair>{{a0, h0}});
    return assemble_hitch(b.store(), b.nodes(), f0, a0, a1, h0, a2);
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RIGGING_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) r.out += buf;
    r.code = WEXITSTATUS(pclose(pipe));
    return r;
}

Bytes slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// --------------------------------------------------------------------------

void criterion_1_chronology() {
    Criterion c("1 hitch chronology", 10.0);
    int verified = 0;
    for (int i = 0; i < 1000; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        HitchCert hitch = build_full_hitch(builder, i % 3);
        ChronologyWitness w = hitch_chronology_witness(hitch);
        if (w.segments.size() != 4) {
            c.fail("expected four chain segments");
            break;
        }
        TwistStore pool = hitch_pool(hitch);
        Verdict v = verify_chronology(pool, w);
        if (!v.ok) {
            c.fail("witness rejected: " + v.reason);
            break;
        }
        ++verified;
    }
    if (verified != 1000) c.fail("verified " + std::to_string(verified) + "/1000");
    c.finish();
}

void criterion_2_forge() {
    Criterion c("2 second-meet forging", 30.0);
    int conflicting = 0;
    for (int i = 0; i < 1000; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        auto s = builder.half_hitch(i % 3, i % 2);
        for (const ForgeOutcome& out : forge_second_meet(store, nodes, s.cert)) {
            if (out.conflicting) ++conflicting;
        }
    }
    if (conflicting != 0) c.fail(std::to_string(conflicting) + " conflicting accepted pairs");
    c.finish();
}

void criterion_3_pools() {
    Criterion c("3 exhaustive pool sweeps", 120.0);
    const int pool_count = 250;
    auto reports = oracle_sweep_parallel(0, pool_count);
    std::size_t misaligned = 0, equivocations = 0, rigs = 0;
    for (const SupportReport& rep : reports) {
        misaligned += rep.misaligned_count;
        equivocations += rep.equivocation_count;
        rigs += rep.rig_count;
    }
    if (reports.size() != pool_count) c.fail("pool sweep incomplete");
    if (rigs == 0) c.fail("no rigs enumerated");
    if (misaligned != 0) c.fail(std::to_string(misaligned) + " misaligned pairs");
    if (equivocations != 0) c.fail(std::to_string(equivocations) + " equivocations");
    c.finish();
}

void criterion_4_splice() {
    Criterion c("4 splice closure", 30.0);
    int ok = 0;
    for (int i = 0; i < 500; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        RigCert whole = (i % 4 == 3) ? builder.custody_transfer()
                                     : builder.spliced_chain(2 + i % 3, i % 2);
        const auto* node = std::get_if<SpliceNode>(&whole.node);
        if (!node || spliceable(*node->left, *node->right, &nodes) != Ternary::yes) {
            c.fail("generated pair not spliceable at seed " + std::to_string(i));
            break;
        }
        RigCert out = splice(*node->left, *node->right, nodes);
        if (!verify_rig(out).ok) {
            c.fail("splice rejected at seed " + std::to_string(i));
            break;
        }
        if (rig_length(out) != rig_length(*node->left) + rig_length(*node->right)) {
            c.fail("length not additive at seed " + std::to_string(i));
            break;
        }
        TwistStore pool = rig_pool(out);
        if (!holds_fast_check(pool, out.leadline, out.corkline, make_holds_fast_witness(out)).ok) {
            c.fail("holds-fast check failed at seed " + std::to_string(i));
            break;
        }
        ++ok;
    }
    if (ok != 500 && c.ok) c.fail("only " + std::to_string(ok) + "/500 pairs spliced");
    c.finish();
}

void criterion_5_lash() {
    Criterion c("5 lash closure", 30.0);
    int ok = 0;
    for (int i = 0; i < 500; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        RigCert whole = builder.lashed(1 + i % 3);
        const auto* node = std::get_if<LashNode>(&whole.node);
        RigCert bottom = make_leaf_rig(node->bottom);
        if (lashable(bottom, *node->upper) != Ternary::yes) {
            c.fail("generated pair not lashable at seed " + std::to_string(i));
            break;
        }
        RigCert out = lash(bottom, *node->upper);
        if (!verify_rig(out).ok) {
            c.fail("lash rejected at seed " + std::to_string(i));
            break;
        }
        IntResult h_out = rig_height(store, out);
        IntResult h_upper = rig_height(store, *node->upper);
        if (!h_out.ok() || !h_upper.ok() || h_out.value != h_upper.value + 1) {
            c.fail("height did not stack at seed " + std::to_string(i));
            break;
        }
        ++ok;
    }
    if (ok != 500 && c.ok) c.fail("only " + std::to_string(ok) + "/500 pairs lashed");
    c.finish();
}

void criterion_6_reuse() {
    Criterion c("6 corkline reuse rejection", 30.0);
    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        RigCert cert = builder.corkline_reuse_cert(i);
        if (!verify_rig(cert).ok) ++rejected;
    }
    if (rejected != 100) {
        c.fail(std::to_string(100 - rejected) + " false accepts");
    }
    c.finish();
}

void criterion_7_trie() {
    Criterion c("7 trie soundness", 60.0);
    // Toy width: every trie of up to 4 keys out of 16, fixed values; for each
    // key the canonical verdict must match membership, and no mutated proof
    // may change an accepted binding. (The exhaustive proof-space enumeration
    // lives in test_trie; here the sweep is over all tries and all keys.)
    TrieParams toy{4};
    std::vector<HashRef> keys, values;
    for (unsigned i = 0; i < 16; ++i) {
        Bytes d(kSha256Bytes, 0);
        d[0] = static_cast<std::uint8_t>(i << 4);
        keys.push_back(HashRef::sha256(d));
        values.push_back(HashRef::sha256(Bytes(kSha256Bytes, static_cast<std::uint8_t>(0x90 + i))));
    }
    TrieNodeStore pool;
    std::vector<std::vector<int>> keysets;
    for (int a = 0; a < 16; ++a) {
        keysets.push_back({a});
        for (int b = a + 1; b < 16; ++b) {
            keysets.push_back({a, b});
            for (int cc = b + 1; cc < 16; ++cc) {
                keysets.push_back({a, b, cc});
                for (int d = cc + 1; d < 16; ++d) keysets.push_back({a, b, cc, d});
            }
        }
    }
    for (const auto& ks : keysets) {
        std::vector<TriePair> pairs;
        for (int k : ks) pairs.push_back({keys[static_cast<std::size_t>(k)], values[static_cast<std::size_t>(k)]});
        HashRef root = trie_build(pairs, pool, toy);
        for (unsigned k = 0; k < 16 && c.ok; ++k) {
            TrieProof proof = trie_prove(root, keys[k], pool, toy);
            TrieLookup res = trie_verify(root, keys[k], proof, toy);
            bool member = std::find(ks.begin(), ks.end(), static_cast<int>(k)) != ks.end();
            if (member && (!res.bound() || res.value != values[k])) c.fail("missing binding in toy trie");
            if (!member && !res.absent()) c.fail("missing absence in toy trie");
        }
        if (!c.ok) break;
    }

    // Full width: ten thousand proof mutations, zero false bindings.
    std::mt19937_64 rng(2024);
    auto rr = [&] {
        Bytes d(kSha256Bytes);
        for (auto& b : d) b = static_cast<std::uint8_t>(rng());
        return HashRef::sha256(std::move(d));
    };
    std::vector<TriePair> pairs;
    for (int i = 0; i < 24; ++i) pairs.push_back({rr(), rr()});
    TrieNodeStore nodes;
    HashRef root = trie_build(pairs, nodes);
    int false_bindings = 0;
    for (int i = 0; i < 10000; ++i) {
        const TriePair& probe = pairs[rng() % pairs.size()];
        TrieProof proof = trie_prove(root, probe.key, nodes);
        Bytes& node = proof.nodes[rng() % proof.nodes.size()];
        node[rng() % node.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
        TrieLookup res = trie_verify(root, probe.key, proof);
        if (res.bound()) ++false_bindings;
    }
    if (false_bindings != 0) c.fail(std::to_string(false_bindings) + " false bindings after mutation");
    c.finish();
}

void criterion_8_serialization() {
    Criterion c("8 bit-exact serialization", 60.0);
    std::mt19937_64 rng(77);
    auto rr = [&] {
        Bytes d(kSha256Bytes);
        for (auto& b : d) b = static_cast<std::uint8_t>(rng());
        return HashRef::sha256(std::move(d));
    };
    for (int i = 0; i < 10000; ++i) {
        Twist t;
        if (rng() % 8) t.prev = rr();
        if (rng() % 2) t.tether = rr();
        if (rng() % 2) t.rigging = rr();
        if (decode_twist(encode_twist(t)) != t) {
            c.fail("twist round-trip failed");
            break;
        }
    }

    int rigs_ok = 0;
    for (int i = 0; i < 500 && c.ok; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        RigCert rig;
        switch (i % 4) {
            case 0: rig = builder.half_hitch(i % 3, i % 2).rig; break;
            case 1: rig = builder.spliced_chain(2 + i % 3); break;
            case 2: rig = builder.lashed(1 + i % 2); break;
            default: rig = builder.custody_transfer(); break;
        }
        Bytes file = encode_rig_file(rig);
        RigCert back = decode_rig_file(file);
        if (encode_rig_file(back) != file) {
            c.fail("rig round-trip not bit-exact at seed " + std::to_string(i));
            break;
        }
        ++rigs_ok;
    }
    if (c.ok && rigs_ok != 500) c.fail("rig round-trips incomplete");

    // Exhaustive single-byte mutation of one rig file: every bit of every
    // byte, decoded and verified in-process; none may reach an accept.
    if (c.ok) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, 424242);
        RigCert rig = builder.spliced_chain(2);
        Bytes file = encode_rig_file(rig);
        int false_accepts = 0;
        for (std::size_t pos = 0; pos < file.size(); ++pos) {
            for (int bit = 0; bit < 8; ++bit) {
                Bytes mutated = file;
                mutated[pos] ^= static_cast<std::uint8_t>(1u << bit);
                try {
                    RigCert cert = decode_rig_file(mutated);
                    if (verify_rig(cert).ok && encode_rig_file(cert) != file) ++false_accepts;
                } catch (const Error&) {
                }
            }
        }
        if (false_accepts != 0) c.fail(std::to_string(false_accepts) + " mutations accepted");
    }
    c.finish();
}

void criterion_9_cli_double_spend() {
    Criterion c("9 cli double-spend demo", 60.0);
    fs::path dir = fs::temp_directory_path() / "rigging_acceptance_ds";
    fs::path dir2 = fs::temp_directory_path() / "rigging_acceptance_ds2";
    fs::remove_all(dir);
    fs::remove_all(dir2);

    RunResult demo = run_cli("demo double-spend --seed 0 --store " + dir.string());
    if (demo.code != 0) c.fail("demo exited " + std::to_string(demo.code));

    std::string rig_a = (dir / "rig_a.rig").string();
    std::string rig_b = (dir / "rig_b.rig").string();
    if (c.ok) {
        RunResult va = run_cli("verify " + rig_a + " --store " + dir.string());
        if (va.code != 0) c.fail("valid rig rejected: " + va.out);
        RunResult vb = run_cli("verify " + rig_b + " --store " + dir.string());
        if (vb.code == 0) c.fail("conflicting rig accepted");
    }
    if (c.ok) {
        RunResult conflict = run_cli("check-conflict " + rig_a + " " + rig_b +
                                     " --assume-valid --store " + dir.string());
        if (conflict.code != 3) {
            c.fail("check-conflict exited " + std::to_string(conflict.code) + ", expected 3");
        } else if (conflict.out.find("misaligned") == std::string::npos &&
                   conflict.out.find("successors") == std::string::npos) {
            c.fail("conflict evidence missing: " + conflict.out);
        }
    }
    if (c.ok) {  // determinism under --seed 0
        RunResult again = run_cli("demo double-spend --seed 0 --store " + dir2.string());
        if (again.code != 0) c.fail("second demo run failed");
        for (const char* name : {"rig_a.rig", "rig_b.rig"}) {
            if (slurp(dir / name) != slurp(dir2 / name)) c.fail("demo output not deterministic");
        }
    }
    fs::remove_all(dir);
    fs::remove_all(dir2);
    c.finish();
}

}  // namespace

int main() {
    criterion_1_chronology();
    criterion_2_forge();
    criterion_3_pools();
    criterion_4_splice();
    criterion_5_lash();
    criterion_6_reuse();
    criterion_7_trie();
    criterion_8_serialization();
    criterion_9_cli_double_spend();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
