#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigging/batch.hpp"

using namespace rigging;

namespace {

std::vector<RigCert> population(int count) {
    std::vector<RigCert> certs;
    certs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        switch (i % 5) {
            case 0: certs.push_back(builder.half_hitch(i % 3, i % 2).rig); break;
            case 1: certs.push_back(builder.spliced_chain(2 + i % 2)); break;
            case 2: certs.push_back(builder.lashed(1 + i % 2)); break;
            case 3: certs.push_back(builder.custody_transfer()); break;
            default: certs.push_back(builder.double_spend().conflicting); break;
        }
    }
    return certs;
}

}  // namespace

TEST_CASE("parallel verification agrees with the serial reference") {
    std::vector<RigCert> certs = population(120);
    auto serial = verify_rigs_serial(certs);
    auto parallel = verify_rigs_parallel(certs);
    REQUIRE(serial.size() == parallel.size());
    int rejects = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].ok == parallel[i].ok);
        CHECK(serial[i].reason == parallel[i].reason);
        if (serial[i].ok) CHECK(serial[i].guild == parallel[i].guild);
        if (!serial[i].ok) ++rejects;
    }
    CHECK(rejects > 0);  // the population includes unverifiable certificates
}

TEST_CASE("parallel holds-fast sweep agrees with the serial reference") {
    std::vector<RigCert> certs;
    for (const RigCert& c : population(60)) {
        if (verify_rig(c).ok) certs.push_back(c.clone());
    }
    auto serial = holds_fast_sweep_serial(certs);
    auto parallel = holds_fast_sweep_parallel(certs);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].ok);
        CHECK(parallel[i].ok == serial[i].ok);
    }
}

TEST_CASE("parallel oracle sweep agrees with the serial reference") {
    auto serial = oracle_sweep_serial(1000, 24);
    auto parallel = oracle_sweep_parallel(1000, 24);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].to_text() == parallel[i].to_text());
        CHECK(serial[i].clean());
    }
}
