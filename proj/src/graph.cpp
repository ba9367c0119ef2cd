#include "rigging/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rigging {

Ternary precedes(const TwistSource& src, const HashRef& x, const HashRef& y) {
    const Twist* rec = src.find(y);
    if (!rec) return Ternary::unknown;
    for (;;) {
        const HashRef& p = rec->prev;
        if (p.is_null()) return Ternary::no;
        if (p == x) return Ternary::yes;
        rec = src.find(p);
        if (!rec) return Ternary::unknown;
    }
}

Ternary aligned_twists(const TwistSource& src, const HashRef& x, const HashRef& y) {
    if (x == y) return src.contains(x) ? Ternary::yes : Ternary::unknown;
    return ternary_or(precedes(src, x, y), precedes(src, y, x));
}

LineResult line_between(const TwistSource& src, const HashRef& a, const HashRef& b) {
    if (!src.contains(b)) return {LineResult::Status::unknown, {}};
    Line rev{b};
    const Twist* rec = src.find(b);
    HashRef cur = b;
    while (cur != a) {
        const HashRef& p = rec->prev;
        if (p.is_null()) return {LineResult::Status::misaligned, {}};
        rev.push_back(p);
        cur = p;
        if (cur == a) break;
        rec = src.find(p);
        if (!rec) return {LineResult::Status::unknown, {}};
    }
    std::reverse(rev.begin(), rev.end());
    return {LineResult::Status::ok, std::move(rev)};
}

RefResult fast_previous(const TwistSource& src, const HashRef& x) {
    const Twist* rec = src.find(x);
    if (!rec) return {RefResult::Status::unknown, {}};
    for (;;) {
        const HashRef& p = rec->prev;
        if (p.is_null()) return {RefResult::Status::none, {}};
        const Twist* prec = src.find(p);
        if (!prec) return {RefResult::Status::unknown, {}};
        if (prec->fast()) return {RefResult::Status::ok, p};
        rec = prec;
    }
}

RefResult fast_tether(const TwistSource& src, const HashRef& x) {
    const Twist* rec = src.find(x);
    if (!rec) return {RefResult::Status::unknown, {}};
    if (rec->loose()) throw std::invalid_argument("fast_tether of a loose twist");
    const HashRef& t = rec->tether;
    const Twist* trec = src.find(t);
    if (!trec) return {RefResult::Status::unknown, {}};
    if (trec->fast()) return {RefResult::Status::ok, t};
    return fast_previous(src, t);
}

LineResult validate_line(const TwistSource& src, const Line& line) {
    if (line.empty()) return {LineResult::Status::misaligned, {}};
    const Twist* first = src.find(line.front());
    if (!first) return {LineResult::Status::unknown, {}};
    for (std::size_t i = 1; i < line.size(); ++i) {
        const Twist* rec = src.find(line[i]);
        if (!rec) return {LineResult::Status::unknown, {}};
        if (rec->prev != line[i - 1]) return {LineResult::Status::misaligned, {}};
    }
    return {LineResult::Status::ok, line};
}

int fast_line_length(const TwistSource& src, const Line& line) {
    LineResult valid = validate_line(src, line);
    if (valid.status == LineResult::Status::unknown) throw Error("line has unresolvable twists");
    if (valid.status == LineResult::Status::misaligned) throw Error("sequence is not a line");
    int fast_count = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const Twist* rec = src.find(line[i]);
        bool fast = rec->fast();
        if ((i == 0 || i + 1 == line.size()) && !fast) {
            throw LengthUndefined("length is undefined on lines with loose endpoints");
        }
        if (fast) ++fast_count;
    }
    return fast_count - 1;
}

EnvelopeResult enveloping_line(const TwistSource& src, std::span<const Line> lines) {
    if (lines.empty()) return {EnvelopeResult::Status::ok, {}};
    std::unordered_set<HashRef, HashRefHasher> members;
    for (const Line& line : lines) {
        LineResult valid = validate_line(src, line);
        if (valid.status == LineResult::Status::unknown) return {EnvelopeResult::Status::unknown, {}};
        if (valid.status == LineResult::Status::misaligned) throw Error("enveloping_line input is not a line");
        members.insert(line.begin(), line.end());
    }

    // Latest end among the inputs: every other end must be its predecessor.
    HashRef latest = lines.front().back();
    for (const Line& line : lines.subspan(1)) {
        const HashRef& end = line.back();
        if (end == latest) continue;
        Ternary fwd = precedes(src, end, latest);
        if (fwd == Ternary::yes) continue;
        Ternary back = precedes(src, latest, end);
        if (back == Ternary::yes) {
            latest = end;
            continue;
        }
        if (fwd == Ternary::no && back == Ternary::no) return {EnvelopeResult::Status::misaligned, {}};
        return {EnvelopeResult::Status::unknown, {}};
    }

    // Walk back from the latest end until every member is covered; the walk
    // supplies any gap twists between the inputs.
    Line rev;
    std::size_t remaining = members.size();
    HashRef cur = latest;
    for (;;) {
        rev.push_back(cur);
        if (members.count(cur)) --remaining;
        if (remaining == 0) break;
        const Twist* rec = src.find(cur);
        if (!rec) return {EnvelopeResult::Status::unknown, {}};
        if (rec->prev.is_null()) return {EnvelopeResult::Status::misaligned, {}};
        cur = rec->prev;
    }
    std::reverse(rev.begin(), rev.end());
    return {EnvelopeResult::Status::ok, std::move(rev)};
}

Ternary aligned_lines(const TwistSource& src, const Line& a, const Line& b) {
    std::vector<Line> input{a, b};
    EnvelopeResult env = enveloping_line(src, input);
    switch (env.status) {
        case EnvelopeResult::Status::ok: return Ternary::yes;
        case EnvelopeResult::Status::misaligned: return Ternary::no;
        default: return Ternary::unknown;
    }
}

}  // namespace rigging
