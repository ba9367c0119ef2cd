#pragma once

#include <filesystem>
#include <unordered_map>

#include "rigging/twist.hpp"

namespace rigging {

/// Read-only view over some universe of twists. Lookups return nullptr for
/// unresolvable references; callers surface that as an Unknown outcome
/// rather than a negative one.
class TwistSource {
public:
    virtual ~TwistSource() = default;
    virtual const Twist* find(const HashRef& id) const = 0;
    bool contains(const HashRef& id) const { return find(id) != nullptr; }
};

/// Content-addressed twist map: key is always hash_twist(value). Append-only;
/// put is idempotent.
class TwistStore : public TwistSource {
public:
    HashRef put(const Twist& t);
    const Twist* find(const HashRef& id) const override;
    std::size_t size() const { return twists_.size(); }

    auto begin() const { return twists_.begin(); }
    auto end() const { return twists_.end(); }

    /// One file per twist: <hex-digest>.twist holding the canonical encoding.
    void save_dir(const std::filesystem::path& dir) const;
    static TwistStore load_dir(const std::filesystem::path& dir);

private:
    std::unordered_map<HashRef, Twist, HashRefHasher> twists_;
};

/// Chains two sources; the primary wins on conflicts (there are none in
/// practice, both being content-addressed).
class OverlaySource : public TwistSource {
public:
    OverlaySource(const TwistSource& primary, const TwistSource& fallback)
        : primary_(primary), fallback_(fallback) {}

    const Twist* find(const HashRef& id) const override {
        if (const Twist* t = primary_.find(id)) return t;
        return fallback_.find(id);
    }

private:
    const TwistSource& primary_;
    const TwistSource& fallback_;
};

}  // namespace rigging
