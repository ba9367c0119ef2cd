#pragma once

#include <filesystem>

#include "rigging/rig.hpp"

namespace rigging {

/// Rig certificate file: magic "RIG1", a version byte, then the derivation
/// tree in pre-order with tagged nodes. Every field is fixed-layout or
/// count-prefixed, so encoding is deterministic and decode(encode(x))
/// reproduces x bit-exactly. Unknown magic, unknown version, truncation and
/// trailing bytes are all rejected.
Bytes encode_rig_file(const RigCert& cert);
RigCert decode_rig_file(ByteSpan data);

/// Tree payload without the file header (used for canonical dedup keys).
Bytes encode_rig(const RigCert& cert);

void write_rig_file(const std::filesystem::path& path, const RigCert& cert);
RigCert read_rig_file(const std::filesystem::path& path);

}  // namespace rigging
