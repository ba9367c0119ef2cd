#include "rigging/batch.hpp"

namespace rigging {

namespace {

Verdict holds_fast_one(const RigCert& cert) {
    TwistStore pool = rig_pool(cert);
    HoldsFastWitness witness = make_holds_fast_witness(cert);
    return holds_fast_check(pool, cert.leadline, cert.corkline, witness);
}

SupportReport oracle_one(std::uint64_t seed, OracleOptions options) {
    TwistStore pool;
    TrieNodeStore nodes;
    ScenarioBuilder builder(pool, nodes, seed);
    builder.oracle_pool(static_cast<int>(seed % 6));
    return oracle_supportive(pool, nodes, options);
}

}  // namespace

std::vector<RigVerdict> verify_rigs_serial(std::span<const RigCert> certs) {
    std::vector<RigVerdict> out(certs.size());
    for (std::size_t i = 0; i < certs.size(); ++i) out[i] = verify_rig(certs[i]);
    return out;
}

std::vector<RigVerdict> verify_rigs_parallel(std::span<const RigCert> certs) {
    std::vector<RigVerdict> out(certs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < certs.size(); ++i) out[i] = verify_rig(certs[i]);
    return out;
}

std::vector<Verdict> holds_fast_sweep_serial(std::span<const RigCert> certs) {
    std::vector<Verdict> out(certs.size());
    for (std::size_t i = 0; i < certs.size(); ++i) out[i] = holds_fast_one(certs[i]);
    return out;
}

std::vector<Verdict> holds_fast_sweep_parallel(std::span<const RigCert> certs) {
    std::vector<Verdict> out(certs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < certs.size(); ++i) out[i] = holds_fast_one(certs[i]);
    return out;
}

std::vector<SupportReport> oracle_sweep_serial(std::uint64_t seed_base, int pool_count,
                                               OracleOptions options) {
    std::vector<SupportReport> out(static_cast<std::size_t>(pool_count));
    for (int i = 0; i < pool_count; ++i) {
        out[static_cast<std::size_t>(i)] = oracle_one(seed_base + static_cast<std::uint64_t>(i), options);
    }
    return out;
}

std::vector<SupportReport> oracle_sweep_parallel(std::uint64_t seed_base, int pool_count,
                                                 OracleOptions options) {
    std::vector<SupportReport> out(static_cast<std::size_t>(pool_count));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < pool_count; ++i) {
        out[static_cast<std::size_t>(i)] = oracle_one(seed_base + static_cast<std::uint64_t>(i), options);
    }
    return out;
}

}  // namespace rigging
