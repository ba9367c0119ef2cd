#include "rigging/cli.hpp"

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigging/codec.hpp"

namespace rigging::cli {

namespace {

using nlohmann::json;

void emit(const Options& opts, const json& doc, const std::string& text) {
    if (opts.json) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int demo_write(const Options& opts, ScenarioBuilder& builder,
               const std::vector<std::pair<std::string, const RigCert*>>& rigs) {
    builder.store().save_dir(opts.store);
    json files = json::array();
    std::string text;
    for (const auto& [name, cert] : rigs) {
        std::filesystem::path path = opts.store / (name + ".rig");
        write_rig_file(path, *cert);
        files.push_back(path.string());
        if (!text.empty()) text += "\n";
        text += "wrote " + path.string();
    }
    text += "\nwrote " + std::to_string(builder.store().size()) + " twists to " + opts.store.string();
    emit(opts, json{{"twists", builder.store().size()}, {"rigs", files}}, text);
    return kOk;
}

/// Every twist the certificate carries must exist in the store; the store is
/// the ground truth the certificate is checked against.
bool all_in_store(const RigCert& cert, const TwistStore& store, HashRef& missing) {
    TwistStore pool = rig_pool(cert);
    for (const auto& [id, twist] : pool) {
        if (!store.contains(id)) {
            missing = id;
            return false;
        }
    }
    return true;
}

int load_store(const Options& opts, TwistStore& store) {
    try {
        store = TwistStore::load_dir(opts.store);
        return kOk;
    } catch (const Error& e) {
        std::cout << "store error: " << e.what() << "\n";
        return kBadInput;
    }
}

int load_rig(const std::filesystem::path& path, RigCert& cert) {
    try {
        cert = read_rig_file(path);
        return kOk;
    } catch (const Error& e) {
        std::cout << "rig file error: " << e.what() << "\n";
        return kBadInput;
    }
}

}  // namespace

int cmd_demo(const std::string& scenario, const Options& opts) {
    TwistStore store;
    TrieNodeStore nodes;
    ScenarioBuilder builder(store, nodes, opts.seed);
    try {
        if (scenario == "half-hitch") {
            auto hh = builder.minimal_half_hitch();
            return demo_write(opts, builder, {{"half-hitch", &hh.rig}});
        }
        if (scenario == "spliced-chain") {
            RigCert rig = builder.spliced_chain(opts.k);
            return demo_write(opts, builder, {{"spliced-chain", &rig}});
        }
        if (scenario == "lashed") {
            RigCert rig = builder.lashed(opts.k);
            return demo_write(opts, builder, {{"lashed", &rig}});
        }
        if (scenario == "custody-transfer") {
            RigCert rig = builder.custody_transfer();
            return demo_write(opts, builder, {{"custody-transfer", &rig}});
        }
        if (scenario == "double-spend") {
            auto ds = builder.double_spend();
            return demo_write(opts, builder, {{"rig_a", &ds.valid}, {"rig_b", &ds.conflicting}});
        }
    } catch (const Error& e) {
        std::cout << "demo failed: " << e.what() << "\n";
        return kBadInput;
    }
    std::cout << "unknown scenario: " << scenario
              << " (known: half-hitch, spliced-chain, lashed, custody-transfer, double-spend)\n";
    return kBadInput;
}

int cmd_verify(const std::filesystem::path& rig_file, const Options& opts) {
    RigCert cert;
    if (int rc = load_rig(rig_file, cert); rc != kOk) return rc;
    TwistStore store;
    if (int rc = load_store(opts, store); rc != kOk) return rc;

    RigVerdict verdict = verify_rig(cert);
    if (!verdict.ok) {
        emit(opts, json{{"verdict", "reject"}, {"reason", verdict.reason}},
             "reject: " + verdict.reason);
        return kReject;
    }
    HashRef missing;
    if (!all_in_store(cert, store, missing)) {
        emit(opts, json{{"verdict", "reject"}, {"reason", "unknown reference " + missing.hex()}},
             "reject: unknown reference " + missing.hex() + " (twist not in store)");
        return kReject;
    }
    emit(opts,
         json{{"verdict", "accept"},
              {"guild", guild_name(verdict.guild)},
              {"length", rig_length(cert)}},
         std::string("accept: ") + guild_name(verdict.guild));
    return kOk;
}

int cmd_check_conflict(const std::filesystem::path& rig_a, const std::filesystem::path& rig_b,
                       const Options& opts) {
    RigCert a, b;
    if (int rc = load_rig(rig_a, a); rc != kOk) return rc;
    if (int rc = load_rig(rig_b, b); rc != kOk) return rc;
    TwistStore store;
    if (int rc = load_store(opts, store); rc != kOk) return rc;

    if (!opts.assume_valid) {
        RigVerdict va = verify_rig(a);
        if (!va.ok) {
            emit(opts, json{{"verdict", "reject"}, {"file", rig_a.string()}, {"reason", va.reason}},
                 "reject " + rig_a.string() + ": " + va.reason);
            return kReject;
        }
        RigVerdict vb = verify_rig(b);
        if (!vb.ok) {
            emit(opts, json{{"verdict", "reject"}, {"file", rig_b.string()}, {"reason", vb.reason}},
                 "reject " + rig_b.string() + ": " + vb.reason);
            return kReject;
        }
    }

    RigRelation rel = relate(store, a, b);
    json evidence = json::array();
    for (const HashRef& id : rel.shared) evidence.push_back(id.hex());

    if (rel.verdict == RelVerdict::misaligned) {
        emit(opts,
             json{{"verdict", "conflict"}, {"relation", "misaligned"}, {"shared", evidence},
                  {"detail", rel.detail}},
             "conflict (misaligned): " + rel.detail);
        return kConflict;
    }
    if (rel.verdict == RelVerdict::unknown) {
        emit(opts, json{{"verdict", "unknown"}, {"detail", rel.detail}}, "unknown: " + rel.detail);
        return kReject;
    }

    // Aligned or disjoint certificates may still disagree about a successor.
    IdSet lead_a(a.leadline.begin(), a.leadline.end());
    for (std::size_t i = 0; i + 1 < b.leadline.size(); ++i) {
        if (!lead_a.count(b.leadline[i])) continue;
        auto at = std::find(a.leadline.begin(), a.leadline.end(), b.leadline[i]);
        if (at == a.leadline.end() || at + 1 == a.leadline.end()) continue;
        if (*(at + 1) != b.leadline[i + 1]) {
            emit(opts,
                 json{{"verdict", "conflict"},
                      {"relation", rel_verdict_name(rel.verdict)},
                      {"twist", b.leadline[i].hex()},
                      {"successors", {(*(at + 1)).hex(), b.leadline[i + 1].hex()}}},
                 "conflict: twist " + b.leadline[i].hex() + " has two asserted successors");
            return kConflict;
        }
    }

    emit(opts, json{{"verdict", "no-conflict"}, {"relation", rel_verdict_name(rel.verdict)}},
         std::string("no conflict (") + rel_verdict_name(rel.verdict) + ")");
    return kOk;
}

int cmd_inspect(const std::string& hex, const Options& opts) {
    HashRef id;
    try {
        id = parse_digest_hex(hex);
    } catch (const Error& e) {
        std::cout << "bad hash: " << e.what() << "\n";
        return kBadInput;
    }
    TwistStore store;
    if (int rc = load_store(opts, store); rc != kOk) return rc;
    const Twist* t = store.find(id);
    if (!t) {
        std::cout << "unknown twist " << id.hex() << "\n";
        return kBadInput;
    }

    auto ref_str = [](const HashRef& r) { return r.is_null() ? std::string("null") : r.hex(); };
    auto res_str = [&](const RefResult& r) {
        switch (r.status) {
            case RefResult::Status::ok: return r.ref.hex();
            case RefResult::Status::none: return std::string("none");
            default: return std::string("unresolved");
        }
    };
    std::string fast_prev = res_str(fast_previous(store, id));
    std::string fast_teth = t->fast() ? res_str(fast_tether(store, id)) : "n/a";

    if (opts.json) {
        std::cout << json{{"twist", id.hex()},
                          {"prev", ref_str(t->prev)},
                          {"tether", ref_str(t->tether)},
                          {"rigging", ref_str(t->rigging)},
                          {"fast", t->fast()},
                          {"fast_previous", fast_prev},
                          {"fast_tether", fast_teth}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "twist:         " << id.hex() << "\n"
                  << "prev:          " << ref_str(t->prev) << "\n"
                  << "tether:        " << ref_str(t->tether) << (t->fast() ? " (fast)" : " (loose)")
                  << "\n"
                  << "rigging:       " << ref_str(t->rigging) << "\n"
                  << "fast previous: " << fast_prev << "\n"
                  << "fast tether:   " << fast_teth << "\n";
    }
    return kOk;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"rigging: build, inspect and verify rig certificates"};
    app.require_subcommand(1);

    Options opts;
    std::string scenario, hex;
    std::filesystem::path rig_file, rig_a, rig_b;
    std::string format = "text";

    auto add_common = [&](CLI::App* cmd, bool store_required) {
        cmd->add_option("--store", opts.store, "twist store directory")->required(store_required);
        cmd->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* demo = app.add_subcommand("demo", "materialize a named scenario store and rig files");
    demo->add_option("scenario", scenario, "half-hitch | spliced-chain | lashed | custody-transfer | double-spend")
        ->required();
    demo->add_option("--seed", opts.seed, "deterministic scenario seed");
    demo->add_option("--k", opts.k, "scenario size (hitches / lash levels)");
    add_common(demo, true);

    CLI::App* verify = app.add_subcommand("verify", "verify a rig file against a store");
    verify->add_option("rig", rig_file, "rig certificate file")->required();
    add_common(verify, true);

    CLI::App* conflict = app.add_subcommand("check-conflict", "relate two rig files");
    conflict->add_option("rig_a", rig_a, "first rig file")->required();
    conflict->add_option("rig_b", rig_b, "second rig file")->required();
    conflict->add_flag("--assume-valid", opts.assume_valid,
                       "relate without verifying the certificates first");
    add_common(conflict, true);

    CLI::App* inspect = app.add_subcommand("inspect", "print one twist from the store");
    inspect->add_option("hash", hex, "hex digest of the twist")->required();
    add_common(inspect, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }
    opts.json = (format == "json");

    if (demo->parsed()) return cmd_demo(scenario, opts);
    if (verify->parsed()) return cmd_verify(rig_file, opts);
    if (conflict->parsed()) return cmd_check_conflict(rig_a, rig_b, opts);
    if (inspect->parsed()) return cmd_inspect(hex, opts);
    return kBadInput;
}

}  // namespace rigging::cli
