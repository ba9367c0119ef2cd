#pragma once

#include <memory>
#include <unordered_set>
#include <variant>

#include "rigging/hitch.hpp"

namespace rigging {

struct RigCert;

/// A half-hitch standing alone as a rig: its footline is the leadline and
/// its topline, possibly extended on either side, is the corkline.
struct HalfHitchLeaf {
    HalfHitchCert hh;
    std::vector<Twist> cork_before;  // [corkline start, ..., fastener)
    std::vector<Twist> cork_after;   // (hoist, ..., corkline end]
};

/// The hitch that closes a splice: the post record, the loose twists between
/// the meet and the post, and the proof that the post's rigging binds the
/// lead to the hoist.
struct PostExtension {
    Twist post;
    std::vector<Twist> fill;
    TrieProof inclusion;
};

/// Leadline lengthening on the past side: `left` is the earlier, length-1
/// rig; `right` continues from left's last leadline twist.
struct SpliceNode {
    std::unique_ptr<RigCert> left;
    PostExtension post_ext;
    std::unique_ptr<RigCert> right;
};

/// Intermediate-line stacking: the bottom half-hitch's topline sits inside
/// the upper rig's leadline; the result keeps the upper corkline and takes
/// the bottom footline as leadline.
struct LashNode {
    HalfHitchCert bottom;
    std::unique_ptr<RigCert> upper;
};

/// Derivation tree mirroring the recursive rig definition, with the claimed
/// corkline and leadline. Verification recomputes both lines from the
/// derivation and rejects certificates whose claims disagree.
struct RigCert {
    std::variant<HalfHitchLeaf, SpliceNode, LashNode> node;
    Line corkline;
    Line leadline;

    RigCert clone() const;
};

enum class Guild : std::uint8_t { gh, gup };
const char* guild_name(Guild g);

struct RigVerdict {
    bool ok = false;
    Guild guild = Guild::gh;
    std::string reason;

    static RigVerdict accept(Guild g) { return {true, g, {}}; }
    static RigVerdict reject(std::string r) { return {false, Guild::gh, std::move(r)}; }
};

using IdSet = std::unordered_set<HashRef, HashRefHasher>;

/// Derived view of an accepted certificate. Pointers refer into the
/// certificate and stay valid while it is alive.
struct RigView {
    Line corkline;
    Line leadline;
    IdSet cork_set;
    IdSet noncork;  // every line-member occurrence outside the corkline
    TwistStore pool;
    const HalfHitchCert* first_hh = nullptr;  // hitch whose footline starts the leadline
    const HalfHitchCert* base_hh = nullptr;   // for length-1 rigs: footline == leadline
    Guild guild = Guild::gh;
};

/// Total, local verification by structural recursion over the derivation:
/// a leaf must verify as a half-hitch whose topline is a subline of the
/// corkline; a splice needs a length-1 left rig whose hitch gains a post at
/// the junction with the right rig, and aligned corklines; a lash needs the
/// bottom topline contained in the upper leadline. Any reappearance of a
/// corkline twist elsewhere in the rig is rejected.
RigVerdict verify_rig(const RigCert& cert);
RigVerdict verify_rig(const RigCert& cert, RigView& view);

/// All twist records in the certificate.
TwistStore rig_pool(const RigCert& cert);

/// Leadline length (fast fenceposts minus one). Pre: cert accepted.
int rig_length(const RigCert& cert);

struct IntResult {
    enum class Status : std::uint8_t { ok, unknown };
    Status status = Status::unknown;
    int value = 0;

    bool ok() const { return Status::ok == status; }
};

/// Least number of fast-tether hops from the leadline start to a corkline
/// twist. `extra` supplements the certificate's own records.
IntResult rig_height(const TwistSource& extra, const RigCert& cert);

struct TetherlineResult {
    enum class Status : std::uint8_t { ok, unknown };
    Status status = Status::unknown;
    IdSet twists;
    int height = 0;
};

/// The twists connecting the leadline start to the corkline: the leadline
/// start plus, for every member not on the corkline, its tether, its fast
/// tether, and the twists between them.
TetherlineResult tetherline(const TwistSource& extra, const RigCert& cert);

/// Witness for the holds-fast causal sandwich: corkline start precedes
/// leadline start (ascent up the tethers), leadline end precedes corkline
/// end (descent down the rigging tries).
struct HoldsFastWitness {
    CausalChain ascent;
    CausalChain descent;
};

Verdict holds_fast_check(const TwistSource& src, const Line& leadline, const Line& corkline,
                         const HoldsFastWitness& witness);

/// Builds the witness from an accepted certificate.
HoldsFastWitness make_holds_fast_witness(const RigCert& cert);

/// All eight spliceability conditions. Needs the trie node store to decide
/// whether the left hitch can gain a post at the junction; without it that
/// condition is unknown.
Ternary spliceable(const RigCert& r0, const RigCert& r1, const TrieNodeStore* nodes);
RigCert splice(const RigCert& r0, const RigCert& r1, const TrieNodeStore& nodes);

/// h0 must be a half-hitch rig whose corkline is contained in r1's leadline,
/// and no corkline twist of r1 may appear among h0's twists.
Ternary lashable(const RigCert& h0, const RigCert& r1);
RigCert lash(const RigCert& h0, const RigCert& r1);

/// Leaf rig over an assembled half-hitch. Extensions must chain through the
/// fastener/hoist within src.
RigCert make_leaf_rig(const HalfHitchCert& hh);
RigCert make_leaf_rig(const TwistSource& src, const HalfHitchCert& hh, const HashRef& cork_start,
                      const HashRef& cork_end);

}  // namespace rigging
