#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lapcs {

// 1-based position inside a sequence.
using Pos = int;

// An arc (first, second) with first < second once canonicalised.
struct Arc {
    Pos first = 0;
    Pos second = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A sequence over an arbitrary alphabet together with its arc set.
///
/// Arcs are canonicalised on construction: reversed pairs are flipped,
/// duplicates merged, and the set is kept sorted. Self pairs (i, i) and
/// endpoints outside [1, size()] raise ValidationError.
class AnnotatedSequence {
public:
    AnnotatedSequence() = default;
    explicit AnnotatedSequence(std::string seq, std::vector<Arc> arcs = {});

    const std::string& seq() const noexcept { return seq_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    Pos size() const noexcept { return static_cast<Pos>(seq_.size()); }

    // 1-based letter access.
    char at(Pos p) const { return seq_[static_cast<std::size_t>(p - 1)]; }

    // Order of the two positions does not matter.
    bool has_arc(Pos a, Pos b) const;

    friend bool operator==(const AnnotatedSequence&, const AnnotatedSequence&) = default;

private:
    std::string seq_;
    std::vector<Arc> arcs_;
};

// Strictest first; the numeric value is the rank used for "at most" checks.
enum class StructureLevel : std::uint8_t { Plain = 0, Chain = 1, Nested = 2, Crossing = 3, Unlimited = 4 };

std::string_view to_string(StructureLevel level);

// True when an arc set of level `actual` is permitted under `permitted`.
constexpr bool within(StructureLevel actual, StructureLevel permitted) {
    return static_cast<int>(actual) <= static_cast<int>(permitted);
}

// Strictest level whose restrictions hold:
//   1: no two arcs share an endpoint
//   2: no crossing, 3: no nesting (both for distinct arcs)
//   4: no arcs
// Nested and Chain also require restriction 1. Endpoints must lie in [1, n].
StructureLevel classify_structure(std::span<const Arc> arcs, Pos n);

inline StructureLevel classify_structure(const AnnotatedSequence& a) {
    return classify_structure(a.arcs(), a.size());
}

struct MatchPair {
    Pos i = 0;  // position in the first sequence
    Pos j = 0;  // position in the second sequence

    friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

// Witness of a common subsequence; pairs sorted by i.
using Mapping = std::vector<MatchPair>;

// Restricts which (i, j) pairs may be matched.
class MatchConstraint {
public:
    enum class Kind : std::uint8_t { Unconstrained, Fragment, Diagonal };

    static MatchConstraint unconstrained() { return MatchConstraint(Kind::Unconstrained, 0); }
    // c >= 1
    static MatchConstraint fragment(int c);
    // c >= 0
    static MatchConstraint diagonal(int c);

    Kind kind() const noexcept { return kind_; }
    int width() const noexcept { return width_; }

    // Fragment(1) and Diagonal(0) both force i == j.
    bool is_identity() const noexcept {
        return (kind_ == Kind::Fragment && width_ == 1) || (kind_ == Kind::Diagonal && width_ == 0);
    }

    bool allowed(Pos i, Pos j) const noexcept;

    std::string to_string() const;

    friend bool operator==(const MatchConstraint&, const MatchConstraint&) = default;

private:
    MatchConstraint(Kind kind, int width) : kind_(kind), width_(width) {}

    Kind kind_;
    int width_;
};

// Throws ValidationError unless `m` is strictly increasing in both
// coordinates, in range, and matches equal letters.
void validate_mapping(const Mapping& m, const AnnotatedSequence& a1, const AnnotatedSequence& a2);

// Throws ValidationError if some pair of `m` is not allowed by `mc`.
void validate_constraint(const Mapping& m, const MatchConstraint& mc);

// For every two pairs (i1,j1), (i2,j2): (i1,i2) in P1 <=> (j1,j2) in P2.
// Invalid mappings raise ValidationError rather than returning false.
bool is_arc_preserving(const Mapping& m, const AnnotatedSequence& a1, const AnnotatedSequence& a2);

Mapping invert(const Mapping& m);

}  // namespace lapcs
