#include <limits>

#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"

namespace lapcs {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw InvalidInputError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)  // full 64-bit range
        return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return lo + static_cast<std::int64_t>(x % span);
}

bool bernoulli(Rng& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

void shuffle(Rng& rng, std::vector<Pos>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace

std::vector<Arc> random_arcs(Rng& rng, Pos n, StructureLevel level) {
    std::vector<Arc> arcs;
    if (n < 2)
        return arcs;
    switch (level) {
    case StructureLevel::Plain:
        break;
    case StructureLevel::Chain: {
        Pos p = 1;
        while (p < n) {
            if (bernoulli(rng, 0.5)) {
                const Pos len = static_cast<Pos>(uniform_int(rng, 1, std::min<Pos>(n - p, 4)));
                arcs.push_back({p, p + len});
                p += len + 1;
            } else {
                ++p;
            }
        }
        break;
    }
    case StructureLevel::Nested: {
        std::vector<Pos> open;
        for (Pos p = 1; p <= n; ++p) {
            const auto action = uniform_int(rng, 0, 2);
            if (action == 0) {
                open.push_back(p);
            } else if (action == 1 && !open.empty()) {
                arcs.push_back({open.back(), p});
                open.pop_back();
            }
        }
        break;
    }
    case StructureLevel::Crossing: {
        std::vector<Pos> positions(static_cast<std::size_t>(n));
        for (Pos p = 1; p <= n; ++p)
            positions[static_cast<std::size_t>(p - 1)] = p;
        shuffle(rng, positions);
        const auto pairs = uniform_int(rng, 1, n / 2);
        for (std::int64_t t = 0; t < pairs; ++t) {
            Pos a = positions[static_cast<std::size_t>(2 * t)];
            Pos b = positions[static_cast<std::size_t>(2 * t + 1)];
            arcs.push_back({std::min(a, b), std::max(a, b)});
        }
        break;
    }
    case StructureLevel::Unlimited: {
        const auto count = uniform_int(rng, 1, n);
        for (std::int64_t t = 0; t < count; ++t) {
            const Pos a = static_cast<Pos>(uniform_int(rng, 1, n));
            Pos b = static_cast<Pos>(uniform_int(rng, 1, n - 1));
            if (b >= a)
                ++b;
            arcs.push_back({std::min(a, b), std::max(a, b)});
        }
        break;
    }
    }
    return arcs;
}

AnnotatedSequence random_annotated(Rng& rng, Pos n, std::string_view alphabet, StructureLevel level) {
    if (alphabet.empty())
        throw InvalidInputError("random_annotated: empty alphabet");
    std::string seq;
    seq.reserve(static_cast<std::size_t>(n));
    for (Pos p = 0; p < n; ++p)
        seq.push_back(alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))]);
    return AnnotatedSequence(std::move(seq), random_arcs(rng, n, level));
}

Graph random_graph(Rng& rng, int n, double edge_probability) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (bernoulli(rng, edge_probability))
                edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

std::uint64_t graph_count(int n) {
    const int pairs = n * (n - 1) / 2;
    if (pairs >= 64)
        throw InvalidInputError("too many labeled graphs on " + std::to_string(n) + " vertices");
    return std::uint64_t{1} << pairs;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v, ++bit) {
            if ((mask >> bit) & 1U)
                edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace lapcs
