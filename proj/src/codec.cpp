#include "rigging/codec.hpp"

#include <fstream>

namespace rigging {

namespace {

constexpr char kMagic[4] = {'R', 'I', 'G', '1'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::uint8_t kTagLeaf = 0x01;
constexpr std::uint8_t kTagSplice = 0x02;
constexpr std::uint8_t kTagLash = 0x03;
constexpr std::uint32_t kMaxCount = 1u << 20;
constexpr int kMaxDepth = 4096;

void append_twist(Bytes& out, const Twist& t) {
    append_bytes(out, encode_twist(t));
}

Twist read_twist(ByteReader& r) {
    Twist t;
    t.prev = read_ref(r);
    t.tether = read_ref(r);
    t.rigging = read_ref(r);
    return t;
}

std::uint32_t read_count(ByteReader& r) {
    std::uint32_t n = r.read_u32();
    if (n > kMaxCount) throw DecodingError("implausible element count");
    return n;
}

void append_twists(Bytes& out, const std::vector<Twist>& ts) {
    append_u32(out, static_cast<std::uint32_t>(ts.size()));
    for (const Twist& t : ts) append_twist(out, t);
}

std::vector<Twist> read_twists(ByteReader& r) {
    std::uint32_t n = read_count(r);
    std::vector<Twist> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(read_twist(r));
    return out;
}

void append_proof(Bytes& out, const TrieProof& p) {
    append_u32(out, static_cast<std::uint32_t>(p.nodes.size()));
    for (const Bytes& node : p.nodes) {
        append_u32(out, static_cast<std::uint32_t>(node.size()));
        append_bytes(out, node);
    }
}

TrieProof read_proof(ByteReader& r) {
    std::uint32_t n = read_count(r);
    TrieProof p;
    p.nodes.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t len = read_count(r);
        p.nodes.push_back(r.read_bytes(len));
    }
    return p;
}

void append_line(Bytes& out, const Line& line) {
    append_u32(out, static_cast<std::uint32_t>(line.size()));
    for (const HashRef& ref : line) append_ref(out, ref);
}

Line read_line(ByteReader& r) {
    std::uint32_t n = read_count(r);
    Line out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(read_ref(r));
    return out;
}

void append_half_hitch(Bytes& out, const HalfHitchCert& hh) {
    append_twist(out, hh.fastener);
    append_twist(out, hh.lead);
    append_twist(out, hh.meet);
    append_twist(out, hh.hoist);
    append_twists(out, hh.topline_fill);
    append_twists(out, hh.footline_fill);
    append_proof(out, hh.hoist_inclusion);
    append_u32(out, static_cast<std::uint32_t>(hh.firstness_exclusions.size()));
    for (const TrieProof& p : hh.firstness_exclusions) append_proof(out, p);
}

HalfHitchCert read_half_hitch(ByteReader& r) {
    HalfHitchCert hh;
    hh.fastener = read_twist(r);
    hh.lead = read_twist(r);
    hh.meet = read_twist(r);
    hh.hoist = read_twist(r);
    hh.topline_fill = read_twists(r);
    hh.footline_fill = read_twists(r);
    hh.hoist_inclusion = read_proof(r);
    std::uint32_t n = read_count(r);
    hh.firstness_exclusions.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) hh.firstness_exclusions.push_back(read_proof(r));
    return hh;
}

void append_node(Bytes& out, const RigCert& cert);

void append_body(Bytes& out, const RigCert& cert) {
    if (const auto* leaf = std::get_if<HalfHitchLeaf>(&cert.node)) {
        out.push_back(kTagLeaf);
        append_half_hitch(out, leaf->hh);
        append_twists(out, leaf->cork_before);
        append_twists(out, leaf->cork_after);
    } else if (const auto* s = std::get_if<SpliceNode>(&cert.node)) {
        out.push_back(kTagSplice);
        append_node(out, *s->left);
        append_twist(out, s->post_ext.post);
        append_twists(out, s->post_ext.fill);
        append_proof(out, s->post_ext.inclusion);
        append_node(out, *s->right);
    } else {
        const auto& l = std::get<LashNode>(cert.node);
        out.push_back(kTagLash);
        append_half_hitch(out, l.bottom);
        append_node(out, *l.upper);
    }
}

void append_node(Bytes& out, const RigCert& cert) {
    append_body(out, cert);
    append_line(out, cert.corkline);
    append_line(out, cert.leadline);
}

RigCert read_node(ByteReader& r, int depth) {
    if (depth > kMaxDepth) throw DecodingError("derivation tree too deep");
    RigCert cert;
    std::uint8_t tag = r.read_u8();
    if (tag == kTagLeaf) {
        HalfHitchLeaf leaf;
        leaf.hh = read_half_hitch(r);
        leaf.cork_before = read_twists(r);
        leaf.cork_after = read_twists(r);
        cert.node = std::move(leaf);
    } else if (tag == kTagSplice) {
        SpliceNode s;
        s.left = std::make_unique<RigCert>(read_node(r, depth + 1));
        s.post_ext.post = read_twist(r);
        s.post_ext.fill = read_twists(r);
        s.post_ext.inclusion = read_proof(r);
        s.right = std::make_unique<RigCert>(read_node(r, depth + 1));
        cert.node = std::move(s);
    } else if (tag == kTagLash) {
        LashNode l;
        l.bottom = read_half_hitch(r);
        l.upper = std::make_unique<RigCert>(read_node(r, depth + 1));
        cert.node = std::move(l);
    } else {
        throw DecodingError("unknown derivation node tag");
    }
    cert.corkline = read_line(r);
    cert.leadline = read_line(r);
    return cert;
}

}  // namespace

Bytes encode_rig(const RigCert& cert) {
    Bytes out;
    append_node(out, cert);
    return out;
}

Bytes encode_rig_file(const RigCert& cert) {
    Bytes out(kMagic, kMagic + 4);
    out.push_back(kVersion);
    append_node(out, cert);
    return out;
}

RigCert decode_rig_file(ByteSpan data) {
    ByteReader r(data);
    ByteSpan magic = r.read_span(4);
    if (!std::equal(magic.begin(), magic.end(), kMagic)) throw DecodingError("bad magic: not a rig file");
    std::uint8_t version = r.read_u8();
    if (version != kVersion) throw DecodingError("unsupported rig file version");
    RigCert cert = read_node(r, 0);
    r.expect_end();
    return cert;
}

void write_rig_file(const std::filesystem::path& path, const RigCert& cert) {
    Bytes data = encode_rig_file(cert);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write rig file " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

RigCert read_rig_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read rig file " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_rig_file(data);
}

}  // namespace rigging
