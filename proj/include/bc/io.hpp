#pragma once

// JSON instance files: parsing with strict field checks, and serialization
// for the generators. Labels may be given as strings or integers; integers
// are read as their decimal string.

#include <optional>
#include <string>
#include <vector>

#include "bc/convex.hpp"
#include "bc/graph.hpp"
#include "bc/hypergraph.hpp"
#include "bc/lattice.hpp"
#include "bc/matroid.hpp"
#include "json.hpp"

namespace bc::io {

using nlohmann::json;

json load_json(const std::string& path);

// Rejects fields outside `allowed`; "kind" and "seed" are always accepted.
// A present "kind" must equal `kind`.
void check_fields(const json& j, const std::vector<std::string>& allowed, const std::string& kind);

std::vector<std::string> parse_labels(const json& arr, const std::string& what);
Mask parse_subset(const std::vector<std::string>& labels, const json& arr, const std::string& what);
json subset_json(const std::vector<std::string>& labels, Mask m);
BigInt parse_bigint(const json& v, const std::string& what);

Graph parse_graph(const json& j);
json graph_json(const Graph& g);

struct HypergraphInstance {
    Hypergraph hypergraph;
    std::optional<std::vector<Mask>> circuits;  // edge-index sets
};
HypergraphInstance parse_hypergraph(const json& j);
std::vector<Mask> parse_edge_circuits(const json& arr, int edge_count);
json hypergraph_json(const Hypergraph& h, const std::vector<Mask>* circuits = nullptr);

// `base_dir` resolves {"graphic": "<path>"}.
Matroid parse_matroid(const json& j, const std::string& base_dir);
json matroid_json(const Matroid& m);

struct LatticeInstance {
    FiniteLattice lattice;
    std::optional<std::vector<int>> crosscut;          // lattice indices
    std::vector<std::pair<int, int>> crosscut_order;   // strict ⊴ pairs, positions in `crosscut`
};
LatticeInstance parse_lattice(const json& j);
json lattice_json(const FiniteLattice& l);

struct GeometryInstance {
    std::vector<std::string> elements;
    std::vector<Mask> closed;
};
GeometryInstance parse_geometry(const json& j);
json geometry_json(const std::vector<std::string>& elements, const ClosureSystem& cs);

// {"elements", "circuits", "broken": "all" | [...], "function": {...}}
struct CoreInstance {
    std::vector<std::string> elements;
    std::vector<Mask> circuits;
    std::optional<std::vector<Mask>> broken;  // nullopt = all derived broken circuits
    json function;
};
CoreInstance parse_core(const json& j);

}  // namespace bc::io
