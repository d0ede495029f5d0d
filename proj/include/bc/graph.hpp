#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/whitney.hpp"

namespace bc {

inline constexpr int kCycleEdgeCap = 24;

// Finite simple graph. Vertex order and edge order are the ambient linear
// orders used for broken circuits and broken neighbourhoods.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges);
    static Graph unlabelled(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Neighbourhood of v as a vertex mask (open).
    Mask neighbours(int v) const { return adjacency_.at(v); }
    Mask closed_neighbourhood(Mask a) const;
    int degree(int v) const { return popcount(adjacency_.at(v)); }
    bool adjacent(int u, int v) const { return contains(adjacency_.at(u), v); }

    // Edge order permuted: edge perm[i] becomes edge i.
    Graph with_edge_order(const std::vector<int>& perm) const;
    // Vertex order permuted: vertex perm[i] becomes vertex i.
    Graph with_vertex_order(const std::vector<int>& perm) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Mask> adjacency_;
};

// c(V, A): components of the spanning subgraph with edge set A.
int components_spanning(const Graph& g, Mask edges);
// c(G[A]) and m(G[A]) for a vertex subset A.
int components_induced(const Graph& g, Mask vertices);
int edges_induced(const Graph& g, Mask vertices);

struct Cycle {
    Mask edges = 0;
    Mask vertices = 0;
};

// All simple cycles, deduplicated by edge set, in a deterministic order.
std::vector<Cycle> cycles(const Graph& g, int edge_cap = kCycleEdgeCap);
std::vector<Mask> cycles_edge_sets(const Graph& g, int edge_cap = kCycleEdgeCap);

enum class ChromaticMethod { full, broken_circuit };

struct ChromaticResult {
    IntPolynomial polynomial;
    std::vector<std::uint64_t> broken_free_counts;  // b_k, broken_circuit method only
};

ChromaticResult chromatic_polynomial(const Graph& g, ChromaticMethod method, Exec exec = Exec::parallel);

// (-1)^|A| x^{c(V,A)} over edge subsets.
inline auto chromatic_term(const Graph& g) {
    return [&g](Mask a) { return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(components_spanning(g, a))}; };
}

// True iff no vertex of degree >= 3 (the centre of a claw subgraph) lies on a cycle.
bool is_cyclically_claw_free(const Graph& g);
bool on_cycle(const Graph& g, int v);

BiPolynomial subgraph_component_polynomial(const Graph& g, Exec exec = Exec::parallel);

enum class QMethod { direct, eq5, eq6 };

// Vertex broken circuits: vertex sets of cycles minus their maximum vertex.
std::vector<BrokenCircuit> vertex_broken_circuits(const Graph& g);

// Q(G, -1, y) as a polynomial in y.
IntPolynomial q_at_minus1(const Graph& g, QMethod method, Exec exec = Exec::parallel);

enum class DominationMethod { direct, bnh, bnh_pruned };

// Circuits N_G[v] with v = max N_G[v]; broken neighbourhoods are N_G[v] \ {v}.
std::vector<Mask> neighbourhood_circuits(const Graph& g);

IntPolynomial domination_polynomial(const Graph& g, DominationMethod method, Exec exec = Exec::parallel);
// Pruned evaluation with a caller-chosen subset of broken neighbourhoods.
IntPolynomial domination_polynomial_pruned(const Graph& g, const std::vector<Mask>& broken,
                                           Exec exec = Exec::parallel);

struct UpsetOrder {
    Graph graph;                 // degree-1 vertices moved last, stable otherwise
    std::vector<int> order;      // order[i] = original index of new vertex i
    std::vector<Mask> pendant;   // singleton broken neighbourhoods {w}, new indices
};

UpsetOrder degree1_upset_order(const Graph& g);

// Named graphs and random generators.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);
Graph random_graph(int n, double p, std::mt19937_64& rng);
bool is_connected(const Graph& g);

}  // namespace bc
