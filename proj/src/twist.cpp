#include "rigging/twist.hpp"

namespace rigging {

Bytes encode_twist(const Twist& t) {
    Bytes out;
    out.reserve(3 + t.prev.digest.size() + t.tether.digest.size() + t.rigging.digest.size());
    append_ref(out, t.prev);
    append_ref(out, t.tether);
    append_ref(out, t.rigging);
    return out;
}

Twist decode_twist(ByteSpan data) {
    ByteReader r(data);
    Twist t;
    t.prev = read_ref(r);
    t.tether = read_ref(r);
    t.rigging = read_ref(r);
    r.expect_end();
    return t;
}

HashRef hash_twist(const Twist& t) {
    return sha256_ref(encode_twist(t));
}

}  // namespace rigging
