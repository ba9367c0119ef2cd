#pragma once

#include "rigging/support.hpp"

namespace rigging {

/// Verification of distinct certificates is pure, so batches parallelize
/// across certificates. The serial routines are the reference; the parallel
/// ones must agree with them verdict-for-verdict (tests compare, the bench
/// tool measures).
std::vector<RigVerdict> verify_rigs_serial(std::span<const RigCert> certs);
std::vector<RigVerdict> verify_rigs_parallel(std::span<const RigCert> certs);

/// Holds-fast re-checks for accepted certificates, one verdict per cert.
std::vector<Verdict> holds_fast_sweep_serial(std::span<const RigCert> certs);
std::vector<Verdict> holds_fast_sweep_parallel(std::span<const RigCert> certs);

/// Supportiveness sweep across generated pools: pool i is produced by a
/// fresh builder seeded with seed_base + i. Reports come back in pool order.
std::vector<SupportReport> oracle_sweep_serial(std::uint64_t seed_base, int pool_count,
                                               OracleOptions options = {});
std::vector<SupportReport> oracle_sweep_parallel(std::uint64_t seed_base, int pool_count,
                                                 OracleOptions options = {});

}  // namespace rigging
