#include "bc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;

    explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
};

}  // namespace

Graph::Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = vertex_count();
    require_cap(n, kMaxGroundSize, "graph vertices");
    std::set<std::string> labels(vertices_.begin(), vertices_.end());
    if (static_cast<int>(labels.size()) != n) throw SchemaError("duplicate vertex label");
    adjacency_.assign(n, 0);
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw SchemaError("edge endpoint out of range");
        if (u == v) throw PreconditionViolation("graph must be simple: loop at vertex " + vertices_[u]);
        if (contains(adjacency_[u], v))
            throw PreconditionViolation("graph must be simple: parallel edge " + vertices_[u] + "-" + vertices_[v]);
        adjacency_[u] |= bit(v);
        adjacency_[v] |= bit(u);
    }
}

Graph Graph::unlabelled(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    return Graph(std::move(labels), std::move(edges));
}

Mask Graph::closed_neighbourhood(Mask a) const {
    Mask n = a;
    for (int v : elements_of(a)) n |= adjacency_[v];
    return n;
}

Graph Graph::with_edge_order(const std::vector<int>& perm) const {
    if (perm.size() != edges_.size()) throw SchemaError("edge permutation has the wrong length");
    std::vector<std::pair<int, int>> e;
    for (int p : perm) e.push_back(edges_.at(p));
    std::vector<int> check = perm;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i)) throw SchemaError("not a permutation");
    return Graph(vertices_, std::move(e));
}

Graph Graph::with_vertex_order(const std::vector<int>& perm) const {
    const int n = vertex_count();
    if (static_cast<int>(perm.size()) != n) throw SchemaError("vertex permutation has the wrong length");
    std::vector<int> inv(n, -1);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] != -1) throw SchemaError("not a permutation");
        inv[perm[i]] = i;
        labels.push_back(vertices_[perm[i]]);
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges_) e.emplace_back(inv[u], inv[v]);
    return Graph(std::move(labels), std::move(e));
}

int components_spanning(const Graph& g, Mask edges) {
    UnionFind uf(g.vertex_count());
    for (int e : elements_of(edges)) uf.unite(g.edges()[e].first, g.edges()[e].second);
    return uf.components;
}

int components_induced(const Graph& g, Mask vertices) {
    int count = 0;
    Mask left = vertices;
    while (left) {
        ++count;
        Mask frontier = bit(min_element(left));
        Mask seen = frontier;
        while (frontier) {
            Mask next = 0;
            for (int v : elements_of(frontier)) next |= g.neighbours(v) & vertices;
            frontier = next & ~seen;
            seen |= next;
        }
        left &= ~seen;
    }
    return count;
}

int edges_induced(const Graph& g, Mask vertices) {
    int m = 0;
    for (int v : elements_of(vertices)) m += popcount(g.neighbours(v) & vertices);
    return m / 2;
}

std::vector<Cycle> cycles(const Graph& g, int edge_cap) {
    require_cap(g.edge_count(), edge_cap, "cycle enumeration (edges)");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        edge_id[u][v] = edge_id[v][u] = e;
    }
    std::set<Mask> seen;
    std::vector<Cycle> out;
    // Each cycle is rooted at its smallest vertex and walked through larger
    // vertices only; both directions produce the same edge set.
    for (int s = 0; s < n; ++s) {
        auto rec = [&](auto&& self, int v, Mask verts, Mask es) -> void {
            for (int w : elements_of(g.neighbours(v))) {
                if (w == s && popcount(verts) >= 3) {
                    Mask closed = es | bit(edge_id[v][w]);
                    if (seen.insert(closed).second) out.push_back({closed, verts});
                } else if (w > s && !contains(verts, w)) {
                    self(self, w, verts | bit(w), es | bit(edge_id[v][w]));
                }
            }
        };
        rec(rec, s, bit(s), Mask{0});
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
    return out;
}

std::vector<Mask> cycles_edge_sets(const Graph& g, int edge_cap) {
    std::vector<Mask> out;
    for (const auto& c : cycles(g, edge_cap)) out.push_back(c.edges);
    return out;
}

ChromaticResult chromatic_polynomial(const Graph& g, ChromaticMethod method, Exec exec) {
    const int m = g.edge_count();
    ChromaticResult r;
    if (method == ChromaticMethod::full) {
        r.polynomial = sum_full<IntPolynomial>(m, chromatic_term(g), exec);
        return r;
    }
    auto broken = broken_sets(derive_broken_circuits(cycles_edge_sets(g), m));
    r.polynomial = sum_pruned<IntPolynomial>(m, broken, chromatic_term(g), exec);
    r.broken_free_counts = enumerate_avoiding(m, broken, exec);
    return r;
}

bool on_cycle(const Graph& g, int v) {
    // v lies on a cycle iff some incident edge {v,u} is not a bridge.
    for (int u : elements_of(g.neighbours(v))) {
        Mask seen = bit(u);
        Mask frontier = bit(u);
        while (frontier) {
            Mask next = 0;
            for (int w : elements_of(frontier)) {
                Mask nb = g.neighbours(w);
                if (w == u) nb &= ~bit(v);  // drop the edge {u, v}
                next |= nb;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (contains(seen, v)) return true;
    }
    return false;
}

bool is_cyclically_claw_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3 && on_cycle(g, v)) return false;
    return true;
}

BiPolynomial subgraph_component_polynomial(const Graph& g, Exec exec) {
    require_cap(g.vertex_count(), 20, "subgraph component polynomial");
    return sum_full<BiPolynomial>(
        g.vertex_count(),
        [&g](Mask a) {
            return BiTerm{1, static_cast<unsigned>(popcount(a)), static_cast<unsigned>(components_induced(g, a))};
        },
        exec);
}

std::vector<BrokenCircuit> vertex_broken_circuits(const Graph& g) {
    std::vector<Mask> vertex_cycles;
    for (const auto& c : cycles(g)) vertex_cycles.push_back(c.vertices);
    return derive_broken_circuits(vertex_cycles, g.vertex_count());
}

IntPolynomial q_at_minus1(const Graph& g, QMethod method, Exec exec) {
    const int n = g.vertex_count();
    require_cap(n, 20, "Q(G,-1,y)");
    auto signed_components = [&g](Mask a) {
        return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(components_induced(g, a))};
    };
    if (method == QMethod::direct) return sum_full<IntPolynomial>(n, signed_components, exec);
    if (!is_cyclically_claw_free(g))
        throw PreconditionViolation("graph is not cyclically claw-free (a claw centre lies on a cycle)");
    auto broken = broken_sets(vertex_broken_circuits(g));
    if (method == QMethod::eq5) return sum_pruned<IntPolynomial>(n, broken, signed_components, exec);
    // Broken-circuit-free vertex sets induce forests: c = |A| - m(G[A]).
    auto forest_components = [&g](Mask a) {
        return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(popcount(a) - edges_induced(g, a))};
    };
    return sum_pruned<IntPolynomial>(n, broken, forest_components, exec);
}

std::vector<Mask> neighbourhood_circuits(const Graph& g) {
    std::vector<Mask> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Mask nv = g.closed_neighbourhood(bit(v));
        if (max_element(nv) == v) out.push_back(nv);
    }
    return out;
}

namespace {

// Σ (-1)^|A| t^{|V| - |N[A]|} accumulated in t, then t := x + 1.
auto domination_term(const Graph& g) {
    const int n = g.vertex_count();
    return [&g, n](Mask a) {
        return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(n - popcount(g.closed_neighbourhood(a)))};
    };
}

}  // namespace

IntPolynomial domination_polynomial_pruned(const Graph& g, const std::vector<Mask>& broken, Exec exec) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionViolation("pruned domination sum requires a graph without isolated vertices");
    auto in_t = sum_pruned<IntPolynomial>(g.vertex_count(), broken, domination_term(g), exec);
    return in_t.shifted(BigInt(1));
}

IntPolynomial domination_polynomial(const Graph& g, DominationMethod method, Exec exec) {
    const int n = g.vertex_count();
    require_cap(n, kDefaultEnumerationCap, "domination polynomial");
    const Mask all = full_mask(n);
    switch (method) {
        case DominationMethod::direct:
            return sum_full<IntPolynomial>(
                n,
                [&g, all](Mask a) {
                    return IntTerm{g.closed_neighbourhood(a) == all ? 1L : 0L, static_cast<unsigned>(popcount(a))};
                },
                exec);
        case DominationMethod::bnh:
            return sum_full<IntPolynomial>(n, domination_term(g), exec).shifted(BigInt(1));
        case DominationMethod::bnh_pruned: {
            auto broken = broken_sets(derive_broken_circuits(neighbourhood_circuits(g), n));
            return domination_polynomial_pruned(g, broken, exec);
        }
    }
    throw PreconditionViolation("unknown domination method");
}

UpsetOrder degree1_upset_order(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) throw PreconditionViolation("isolated vertex " + g.vertices()[v]);
        if (g.degree(v) == 1 && g.degree(min_element(g.neighbours(v))) == 1)
            throw PreconditionViolation("isolated edge at vertex " + g.vertices()[v]);
    }
    UpsetOrder r;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 1) r.order.push_back(v);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) r.order.push_back(v);
    r.graph = g.with_vertex_order(r.order);
    std::set<Mask> pendant;
    for (int v = 0; v < n; ++v) {
        if (r.graph.degree(v) != 1) continue;
        int w = min_element(r.graph.neighbours(v));
        // v is the maximum of N[v] = {v, w} because degree-1 vertices come last.
        if (max_element(r.graph.closed_neighbourhood(bit(v))) == v) pendant.insert(bit(w));
    }
    r.pendant.assign(pendant.begin(), pendant.end());
    return r;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::unlabelled(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::unlabelled(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph::unlabelled(n, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::unlabelled(leaves + 1, std::move(e));
}

Graph empty_graph(int n) { return Graph::unlabelled(n, {}); }

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::unlabelled(n, std::move(e));
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components_induced(g, full_mask(g.vertex_count())) == 1;
}

}  // namespace bc
