#include "lapcs/arc_core.hpp"

#include <algorithm>

#include "lapcs/errors.hpp"

namespace lapcs {

AnnotatedSequence::AnnotatedSequence(std::string seq, std::vector<Arc> arcs) : seq_(std::move(seq)) {
    const Pos n = size();
    for (Arc& arc : arcs) {
        if (arc.first == arc.second)
            throw ValidationError("self arc (" + std::to_string(arc.first) + "," + std::to_string(arc.second) + ")");
        if (arc.first > arc.second)
            std::swap(arc.first, arc.second);
        if (arc.first < 1 || arc.second > n)
            throw ValidationError("arc (" + std::to_string(arc.first) + "," + std::to_string(arc.second) +
                                  ") outside sequence of length " + std::to_string(n));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
}

bool AnnotatedSequence::has_arc(Pos a, Pos b) const {
    if (a > b)
        std::swap(a, b);
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{a, b});
}

std::string_view to_string(StructureLevel level) {
    switch (level) {
    case StructureLevel::Plain: return "plain";
    case StructureLevel::Chain: return "chain";
    case StructureLevel::Nested: return "nested";
    case StructureLevel::Crossing: return "crossing";
    case StructureLevel::Unlimited: return "unlimited";
    }
    return "unknown";
}

StructureLevel classify_structure(std::span<const Arc> arcs, Pos n) {
    for (const Arc& arc : arcs) {
        if (arc.first < 1 || arc.second > n || arc.first >= arc.second)
            throw ValidationError("arc (" + std::to_string(arc.first) + "," + std::to_string(arc.second) +
                                  ") is not canonical within length " + std::to_string(n));
    }
    if (arcs.empty())
        return StructureLevel::Plain;

    // Restriction 1: every position is an endpoint of at most one arc.
    // partner[p] = other endpoint of the arc at p, 0 if none.
    std::vector<Pos> partner(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& arc : arcs) {
        Pos& a = partner[static_cast<std::size_t>(arc.first)];
        Pos& b = partner[static_cast<std::size_t>(arc.second)];
        if (a != 0 || b != 0)
            return StructureLevel::Unlimited;
        a = arc.second;
        b = arc.first;
    }

    // Restriction 2: with distinct endpoints, arcs close in LIFO order.
    std::vector<Pos> open;
    for (Pos p = 1; p <= n; ++p) {
        const Pos q = partner[static_cast<std::size_t>(p)];
        if (q == 0)
            continue;
        if (q > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != q)
                return StructureLevel::Crossing;
            open.pop_back();
        }
    }

    // Restriction 3: with distinct endpoints, arcs are pairwise disjoint.
    std::vector<Arc> sorted(arcs.begin(), arcs.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sorted[k - 1].second > sorted[k].first)
            return StructureLevel::Nested;
    }
    return StructureLevel::Chain;
}

MatchConstraint MatchConstraint::fragment(int c) {
    if (c < 1)
        throw ValidationError("fragment width must be >= 1, got " + std::to_string(c));
    return MatchConstraint(Kind::Fragment, c);
}

MatchConstraint MatchConstraint::diagonal(int c) {
    if (c < 0)
        throw ValidationError("diagonal width must be >= 0, got " + std::to_string(c));
    return MatchConstraint(Kind::Diagonal, c);
}

bool MatchConstraint::allowed(Pos i, Pos j) const noexcept {
    switch (kind_) {
    case Kind::Unconstrained: return true;
    // ceil(i / c) == ceil(j / c) for positive positions
    case Kind::Fragment: return (i - 1) / width_ == (j - 1) / width_;
    case Kind::Diagonal: return i - width_ <= j && j <= i + width_;
    }
    return false;
}

std::string MatchConstraint::to_string() const {
    switch (kind_) {
    case Kind::Unconstrained: return "unconstrained";
    case Kind::Fragment: return "fragment(" + std::to_string(width_) + ")";
    case Kind::Diagonal: return "diagonal(" + std::to_string(width_) + ")";
    }
    return "unknown";
}

void validate_mapping(const Mapping& m, const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    for (std::size_t k = 0; k < m.size(); ++k) {
        const auto [i, j] = m[k];
        if (i < 1 || i > a1.size() || j < 1 || j > a2.size())
            throw ValidationError("mapping pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        if (a1.at(i) != a2.at(j))
            throw ValidationError("mapping pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") matches different letters");
        if (k > 0 && (m[k - 1].i >= i || m[k - 1].j >= j))
            throw ValidationError("mapping is not strictly increasing at pair " + std::to_string(k + 1));
    }
}

void validate_constraint(const Mapping& m, const MatchConstraint& mc) {
    for (const auto& [i, j] : m) {
        if (!mc.allowed(i, j))
            throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") violates " +
                                  mc.to_string());
    }
}

bool is_arc_preserving(const Mapping& m, const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    validate_mapping(m, a1, a2);
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = x + 1; y < m.size(); ++y) {
            if (a1.has_arc(m[x].i, m[y].i) != a2.has_arc(m[x].j, m[y].j))
                return false;
        }
    }
    return true;
}

Mapping invert(const Mapping& m) {
    Mapping out;
    out.reserve(m.size());
    for (const auto& [i, j] : m)
        out.push_back({j, i});
    return out;
}

}  // namespace lapcs
