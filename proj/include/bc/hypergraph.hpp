#pragma once

#include <string>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/whitney.hpp"

namespace bc {

// Finite simple hypergraph. Edges are vertex masks; edge order is the ambient order.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::vector<std::string> vertices, std::vector<Mask> edges);
    static Hypergraph from_lists(std::vector<std::string> vertices, const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Mask>& edges() const { return edges_; }
    Mask edge(int i) const { return edges_.at(i); }
    // r if every edge has exactly r vertices, else 0.
    int uniformity() const;
    int edge_index(Mask vertices) const;  // -1 if absent

private:
    std::vector<std::string> vertices_;
    std::vector<Mask> edges_;
};

// c(V, A) for an edge subset A.
int components_spanning(const Hypergraph& h, Mask edges);

// Edges of C can be arranged as a Berge cycle (distinct edges, distinct linking vertices).
bool is_berge_cycle(const Hypergraph& h, Mask edge_set);

bool validate_condition_a(const std::vector<Mask>& circuits, const Hypergraph& h);
bool validate_condition_b(const std::vector<Mask>& circuits, const Hypergraph& h);

enum class HyperMethod { full, restricted };

IntPolynomial hypergraph_chromatic(const Hypergraph& h, HyperMethod method, const std::vector<Mask>& circuits = {},
                                   Exec exec = Exec::parallel);

inline auto hyper_chromatic_term(const Hypergraph& h) {
    return [&h](Mask a) {
        return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(components_spanning(h, a))};
    };
}

// Edge sets of l-tight cycles (at least three distinct edges).
std::vector<Mask> tight_cycles(const Hypergraph& h, int l);

struct GridRectangles {
    int m = 0;
    int n = 0;
    Hypergraph hypergraph;
    std::vector<Mask> circuits;
    std::vector<int> area;  // per edge, in edge order
};

GridRectangles grid_rectangle_hypergraph(int m, int n);
// Neighbouring-rectangle triples of a 4-uniform hypergraph, as edge-index masks.
std::vector<Mask> rectangle_circuits(const Hypergraph& h);

// Complete r-uniform hypergraph on n vertices, edges in colex order.
Hypergraph complete_uniform_hypergraph(int n, int r);

}  // namespace bc
