#include <algorithm>
#include <stdexcept>

#include "lapcs/errors.hpp"
#include "lapcs/reductions.hpp"

namespace lapcs {

namespace {

void require_positive_k(int k) {
    if (k < 1)
        throw InvalidInputError("k must be >= 1, got " + std::to_string(k));
}

}  // namespace

ReductionInstance reduce_theorem1(const Graph& g, int k) {
    require_positive_k(k);
    const std::string letters(static_cast<std::size_t>(g.order()), 'a');
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        arcs.push_back({e.u, e.v});

    ReductionInstance inst;
    inst.first = AnnotatedSequence(letters, std::move(arcs));
    inst.second = AnnotatedSequence(letters);
    inst.constraint = MatchConstraint::fragment(1);
    inst.threshold = k;
    inst.theorem = Theorem::One;
    inst.kind = ReductionCase::Unary;
    inst.source = g;
    inst.k = k;
    return inst;
}

ReductionInstance reduce_theorem2(const Graph& g, int k) {
    require_positive_k(k);
    const int n = g.order();

    ReductionInstance inst;
    inst.constraint = MatchConstraint::fragment(1);
    inst.theorem = Theorem::Two;
    inst.source = g;
    inst.k = k;

    if (k > n) {
        inst.first = AnnotatedSequence("a");
        inst.second = AnnotatedSequence("a");
        inst.threshold = k;
        inst.kind = ReductionCase::SingleBase;
        return inst;
    }

    const int width = n + 2;
    std::string block = "b";
    block.append(static_cast<std::size_t>(n), 'a');
    block.push_back('b');
    std::string letters;
    letters.reserve(static_cast<std::size_t>(n) * block.size());
    for (int i = 0; i < n; ++i)
        letters += block;

    std::vector<Arc> brackets;
    for (int i = 1; i <= n; ++i)
        brackets.push_back({(i - 1) * width + 1, i * width});

    // Edge (i, j): the (j+1)-th letter of block i joins the (i+1)-th letter
    // of block j. Orientation (j, i) gives the same arc after normalisation.
    std::vector<Arc> edge_arcs;
    for (const Edge& e : g.edges())
        edge_arcs.push_back({(e.u - 1) * width + e.v + 1, (e.v - 1) * width + e.u + 1});

    std::vector<Arc> first_arcs = brackets;
    first_arcs.insert(first_arcs.end(), edge_arcs.begin(), edge_arcs.end());

    inst.first = AnnotatedSequence(letters, std::move(first_arcs));
    inst.second = AnnotatedSequence(letters, brackets);
    inst.threshold = static_cast<long>(k) * width;
    inst.kind = ReductionCase::Blocks;

    if (inst.first.arcs().size() != g.edges().size() + static_cast<std::size_t>(n) ||
        inst.second.arcs().size() != static_cast<std::size_t>(n))
        throw std::logic_error("block reduction produced unexpected arc counts");
    if (classify_structure(inst.second) != StructureLevel::Chain)
        throw std::logic_error("block reduction: bracket arcs do not form a chain");
    if (!within(classify_structure(inst.first), StructureLevel::Crossing))
        throw std::logic_error("block reduction: first arc set shares endpoints");
    for (const Arc& arc : edge_arcs) {
        if (inst.first.at(arc.first) != 'a' || inst.first.at(arc.second) != 'a')
            throw std::logic_error("block reduction: edge arc does not join two 'a' letters");
    }
    return inst;
}

ReductionInstance reduce(Theorem theorem, const Graph& g, int k) {
    return theorem == Theorem::One ? reduce_theorem1(g, k) : reduce_theorem2(g, k);
}

Mapping forward_mapping(const ReductionInstance& inst, const std::vector<Vertex>& independent_set) {
    std::vector<Vertex> sorted = independent_set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 1 || v > inst.source.order())
            throw InvalidInputError("vertex " + std::to_string(v) + " outside source graph");
    }

    Mapping m;
    switch (inst.kind) {
    case ReductionCase::Unary:
        for (Vertex v : sorted)
            m.push_back({v, v});
        break;
    case ReductionCase::Blocks: {
        const int width = inst.block_width();
        for (Vertex v : sorted) {
            for (int l = 1; l <= width; ++l) {
                const Pos p = (v - 1) * width + l;
                m.push_back({p, p});
            }
        }
        break;
    }
    case ReductionCase::SingleBase:
        break;
    }
    return m;
}

ExtractedSet extract_independent_set(const ReductionInstance& inst, const Mapping& m) {
    validate_mapping(m, inst.first, inst.second);
    validate_constraint(m, inst.constraint);
    if (!is_arc_preserving(m, inst.first, inst.second))
        throw ValidationError("mapping is not arc-preserving for this instance");

    ExtractedSet out;
    switch (inst.kind) {
    case ReductionCase::Unary:
        for (const auto& [i, j] : m)
            out.vertices.push_back(i);
        break;
    case ReductionCase::Blocks: {
        const int width = inst.block_width();
        std::vector<int> matched(static_cast<std::size_t>(inst.source.order()) + 1, 0);
        for (const auto& [i, j] : m)
            ++matched[static_cast<std::size_t>((i - 1) / width + 1)];
        for (Vertex v = 1; v <= inst.source.order(); ++v) {
            if (matched[static_cast<std::size_t>(v)] == width)
                out.vertices.push_back(v);
        }
        break;
    }
    case ReductionCase::SingleBase:
        break;
    }

    for (std::size_t x = 0; x < out.vertices.size(); ++x) {
        for (std::size_t y = x + 1; y < out.vertices.size(); ++y) {
            if (inst.source.has_edge(out.vertices[x], out.vertices[y]))
                out.violations.push_back({out.vertices[x], out.vertices[y]});
        }
    }
    out.independent = out.violations.empty();
    if (inst.kind == ReductionCase::Unary && !out.independent)
        throw std::logic_error("arc-preserving mapping of a unary instance selected adjacent vertices");
    return out;
}

}  // namespace lapcs
