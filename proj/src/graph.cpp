#include <algorithm>
#include <numeric>

#include "lapcs/errors.hpp"
#include "lapcs/reductions.hpp"

namespace lapcs {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0)
        throw InvalidInputError("graph order must be non-negative");
    for (Edge& e : edges) {
        if (e.u == e.v)
            throw InvalidInputError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw InvalidInputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} outside vertex range 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InvalidInputError("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = n_;
    for (const Edge& e : edges_) {
        const int a = find(e.u);
        const int b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

bool Graph::is_independent(const std::vector<Vertex>& set) const {
    for (std::size_t x = 0; x < set.size(); ++x) {
        for (std::size_t y = x + 1; y < set.size(); ++y) {
            if (has_edge(set[x], set[y]))
                return false;
        }
    }
    return true;
}

}  // namespace lapcs
