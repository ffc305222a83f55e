#include "nvcat/forms.hpp"

#include "nvcat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace nvcat {

namespace {

// BFS spanning tree from vertex 0 with ascending neighbour order.
struct SpanningTree {
    std::vector<int> parent;
    std::vector<std::int64_t> potential;  // integral of xi along the tree path from 0
};

SpanningTree spanning_tree(const SimplicialComplex& x, const IntegralCocycle& xi) {
    if (!x.connected()) throw ValidationError("complex is not connected");
    auto adj = x.adjacency();
    SpanningTree t{std::vector<int>(x.vertex_count(), -1), std::vector<std::int64_t>(x.vertex_count(), 0)};
    std::vector<bool> seen(x.vertex_count(), false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            t.parent[w] = v;
            t.potential[w] = t.potential[v] + xi.value(v, w);
            todo.push(w);
        }
    }
    return t;
}

bool is_tree_edge(const SpanningTree& t, int i, int j) { return t.parent[j] == i || t.parent[i] == j; }

std::vector<int> path_from_root(const SpanningTree& t, int v) {
    std::vector<int> p;
    for (int u = v; u != -1; u = t.parent[u]) p.push_back(u);
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

std::int64_t integrate_path(const SimplicialComplex& x, const IntegralCocycle& xi, std::span<const int> path) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        int i = path[k], j = path[k + 1];
        if (!x.has_edge(i, j))
            throw ValidationError("path step " + std::to_string(i) + " -> " + std::to_string(j) + " is not an edge");
        total += xi.value(i, j);
    }
    return total;
}

std::int64_t periods(const SimplicialComplex& x, const IntegralCocycle& xi) {
    auto t = spanning_tree(x, xi);
    std::int64_t g = 0;
    for (const auto& e : x.simplices(1)) {
        std::int64_t reduced = xi.value(e[0], e[1]) - (t.potential[e[1]] - t.potential[e[0]]);
        g = std::gcd(g, reduced);
    }
    return g;
}

ExactnessWitness exactness_witness(const SimplicialComplex& x, const IntegralCocycle& xi) {
    auto t = spanning_tree(x, xi);
    ExactnessWitness w;
    for (const auto& e : x.simplices(1)) {
        int i = e[0], j = e[1];
        if (is_tree_edge(t, i, j)) continue;
        std::int64_t reduced = xi.value(i, j) - (t.potential[j] - t.potential[i]);
        if (reduced == 0) continue;
        w.loop = path_from_root(t, i);
        auto back = path_from_root(t, j);
        w.loop.insert(w.loop.end(), back.rbegin(), back.rend());
        w.loop_integral = reduced;
        return w;
    }
    w.exact = true;
    w.potential = t.potential;
    return w;
}

Divisibility divisibility(const SimplicialComplex& x, const IntegralCocycle& xi) {
    auto t = spanning_tree(x, xi);
    std::int64_t g = periods(x, xi);
    if (g == 0) throw ContractError("divisibility: xi is exact, lambda is undefined");
    Divisibility d{g, {}};
    // xi - delta(potential) vanishes on tree edges and takes period values elsewhere.
    for (const auto& e : x.simplices(1)) {
        std::int64_t reduced = xi.value(e[0], e[1]) - (t.potential[e[1]] - t.potential[e[0]]);
        d.eta.set(e[0], e[1], reduced / g);
    }
    return d;
}

}  // namespace nvcat
