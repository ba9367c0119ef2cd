#pragma once

#include <span>
#include <string>
#include <vector>

#include "rigging/store.hpp"

namespace rigging {

/// Queries over partially resolvable data are three-valued: an unresolvable
/// reference yields `unknown`, never `no`, so verifiers fail closed and can
/// ask for more data.
enum class Ternary : std::uint8_t { no, yes, unknown };

inline Ternary ternary_or(Ternary a, Ternary b) {
    if (a == Ternary::yes || b == Ternary::yes) return Ternary::yes;
    if (a == Ternary::unknown || b == Ternary::unknown) return Ternary::unknown;
    return Ternary::no;
}

/// Chronological sequence of consecutive twists (each entry's record has the
/// previous entry as its prev).
using Line = std::vector<HashRef>;

struct LengthUndefined : Error {
    using Error::Error;
};

/// True iff x is reached from y by one or more prev steps. Strict: never
/// reflexive.
Ternary precedes(const TwistSource& src, const HashRef& x, const HashRef& y);

/// x and y comparable under the predecessor order (x ≼ y or y ≼ x).
Ternary aligned_twists(const TwistSource& src, const HashRef& x, const HashRef& y);

struct LineResult {
    enum class Status : std::uint8_t { ok, misaligned, unknown };
    Status status = Status::unknown;
    Line line;

    bool ok() const { return status == Status::ok; }
};

/// The unique line [a, ..., b]; misaligned when a is not a predecessor-or-
/// equal of b.
LineResult line_between(const TwistSource& src, const HashRef& a, const HashRef& b);

struct RefResult {
    enum class Status : std::uint8_t { ok, none, unknown };
    Status status = Status::unknown;
    HashRef ref;

    bool ok() const { return status == Status::ok; }
};

/// Nearest strictly preceding fast twist; `none` when the line origin is
/// reached first.
RefResult fast_previous(const TwistSource& src, const HashRef& x);

/// Tether of x if fast, else the tether's fast previous. Throws
/// std::invalid_argument when x itself is loose.
RefResult fast_tether(const TwistSource& src, const HashRef& x);

/// Fast twists are fenceposts; length is the fencepost count minus one.
/// Throws LengthUndefined when an endpoint is loose, Error on an
/// unresolvable or non-consecutive line.
int fast_line_length(const TwistSource& src, const Line& line);

struct EnvelopeResult {
    enum class Status : std::uint8_t { ok, misaligned, unknown };
    Status status = Status::unknown;
    Line line;

    bool ok() const { return status == Status::ok; }
};

/// Minimal line containing every twist of every input, or misaligned when no
/// such line exists. Gaps between inputs are bridged with twists resolvable
/// in src; an unresolvable gap is unknown.
EnvelopeResult enveloping_line(const TwistSource& src, std::span<const Line> lines);

/// Whether the collection admits an enveloping line.
Ternary aligned_lines(const TwistSource& src, const Line& a, const Line& b);

/// Validates the Line invariant: non-empty and consecutive under src.
LineResult validate_line(const TwistSource& src, const Line& line);

}  // namespace rigging
