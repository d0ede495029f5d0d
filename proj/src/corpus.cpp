#include "bc/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bc::corpus {

namespace {

// Adjacency as the bit string of the upper triangle.
std::uint64_t encode(int n, const std::vector<Mask>& adj, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (contains(adj[perm[i]], perm[j])) code |= std::uint64_t{1} << b;
    return code;
}

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& e) { return Graph::unlabelled(n, e); }

}  // namespace

std::vector<Graph> small_graphs(int max_vertices, bool connected_only) {
    require_cap(max_vertices, 6, "isomorphism-reduced graph corpus");
    std::vector<Graph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        std::set<std::uint64_t> seen;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
            std::vector<Mask> adj(n, 0);
            std::vector<std::pair<int, int>> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((code >> s) & 1u) {
                    auto [u, v] = slots[s];
                    adj[u] |= bit(v);
                    adj[v] |= bit(u);
                    edges.push_back(slots[s]);
                }
            std::uint64_t canon = ~std::uint64_t{0};
            for (const auto& q : perms) canon = std::min(canon, encode(n, adj, q));
            if (!seen.insert(canon).second) continue;
            Graph g = from_pairs(n, edges);
            if (connected_only && !is_connected(g)) continue;
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> random_graphs(int count, int min_vertices, int max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(min_vertices, max_vertices);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = size(rng);
        out.push_back(random_graph(n, density(rng), rng));
    }
    return out;
}

std::vector<Graph> cyclically_claw_free_graphs(int count, int max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        std::vector<std::pair<int, int>> e;
        int v = 0;
        while (v < n) {
            int left = n - v;
            if (left >= 3 && std::bernoulli_distribution(0.4)(rng)) {
                int len = std::uniform_int_distribution<int>(3, left)(rng);
                for (int k = 0; k < len; ++k) e.emplace_back(v + k, v + (k + 1) % len);
                v += len;
            } else {
                int len = std::uniform_int_distribution<int>(1, left)(rng);
                for (int k = 1; k < len; ++k) e.emplace_back(v + std::uniform_int_distribution<int>(0, k - 1)(rng), v + k);
                v += len;
            }
        }
        for (auto& [a, b] : e)
            if (a > b) std::swap(a, b);
        // Shuffle vertex labels so cycles are not always consecutive in the order.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& [a, b] : e) {
            a = perm[a];
            b = perm[b];
        }
        out.push_back(from_pairs(n, e));
    }
    return out;
}

std::vector<Graph> named_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 5; ++n) out.push_back(complete_graph(n));
    for (int n = 2; n <= 7; ++n) out.push_back(path_graph(n));
    for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
    for (int k = 2; k <= 5; ++k) out.push_back(star_graph(k));
    out.push_back(empty_graph(3));
    // Petersen-free but dense: K_{3,3}.
    out.push_back(from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    return out;
}

namespace {

// Closure under all circuits: h(A) = A ∪ {max C : C \ {max C} ⊆ A}.
Mask circuit_closure(Mask a, const std::vector<Mask>& circuits) {
    while (true) {
        Mask next = a;
        for (Mask c : circuits) {
            Mask top = bit(max_element(c));
            if (is_subset(c & ~top, a)) next |= top;
        }
        if (next == a) return a;
        a = next;
    }
}

}  // namespace

std::vector<PruningInstance> pruning_instances(int count, int max_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PruningInstance> out;
    int made = 0;
    while (made < count) {
        const int kind = made % 5;
        PruningInstance inst;
        if (kind <= 1) {
            // Random circuits, random γ on closed sets.
            const int n = std::uniform_int_distribution<int>(3, max_size)(rng);
            const int m = std::uniform_int_distribution<int>(1, 6)(rng);
            std::vector<Mask> circuits;
            for (int i = 0; i < m; ++i) {
                Mask c = 0;
                int size = std::uniform_int_distribution<int>(2, std::min(n, 5))(rng);
                while (popcount(c) < size) c |= bit(std::uniform_int_distribution<int>(0, n - 1)(rng));
                circuits.push_back(c);
            }
            std::uint64_t salt = rng();
            inst.name = "closure#" + std::to_string(made);
            inst.n = n;
            inst.circuits = circuits;
            inst.f = [circuits, salt](Mask a) {
                std::uint64_t h = circuit_closure(a, circuits) * 0x9E3779B97F4A7C15ull ^ salt;
                h ^= h >> 29;
                long gamma = static_cast<long>(h % 19) - 9;
                return BigInt((popcount(a) % 2) ? -gamma : gamma);
            };
        } else {
            int nv = std::uniform_int_distribution<int>(3, 6)(rng);
            Graph g = random_graph(nv, 0.55, rng);
            if (kind == 2) {
                if (g.edge_count() > max_size || g.edge_count() == 0) continue;
                long x = std::uniform_int_distribution<long>(2, 9)(rng);
                inst.name = "chromatic#" + std::to_string(made);
                inst.n = g.edge_count();
                inst.circuits = cycles_edge_sets(g);
                inst.f = [g, x](Mask a) {
                    BigInt v;
                    mpz_ui_pow_ui(v.get_mpz_t(), x, components_spanning(g, a));
                    return (popcount(a) % 2) ? BigInt(-v) : v;
                };
            } else if (kind == 3) {
                if (g.edge_count() > max_size || g.edge_count() == 0) continue;
                Matroid m = graphic_matroid(g);
                inst.name = "rank#" + std::to_string(made);
                inst.n = m.size();
                inst.circuits = m.circuits();
                inst.f = [m](Mask a) { return BigInt((popcount(a) % 2) ? -m.rank_fast(a) : m.rank_fast(a)); };
            } else {
                bool isolated = false;
                for (int v = 0; v < nv; ++v) isolated = isolated || g.degree(v) == 0;
                if (isolated) continue;
                long x = std::uniform_int_distribution<long>(1, 5)(rng);
                inst.name = "domination#" + std::to_string(made);
                inst.n = nv;
                inst.circuits = neighbourhood_circuits(g);
                inst.f = [g, x, nv](Mask a) {
                    BigInt v;
                    mpz_ui_pow_ui(v.get_mpz_t(), x + 1, nv - popcount(g.closed_neighbourhood(a)));
                    return (popcount(a) % 2) ? BigInt(-v) : v;
                };
            }
        }
        out.push_back(std::move(inst));
        ++made;
    }
    return out;
}

std::vector<GeometryInstance> geometries(int count, int max_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GeometryInstance> out;
    for (int n = 1; n <= std::min(max_size, 6); ++n) {
        out.push_back({"interval-" + std::to_string(n), interval_geometry(n)});
        out.push_back({"discrete-" + std::to_string(n), discrete_geometry(n)});
    }
    int i = 0;
    while (static_cast<int>(out.size()) < count) {
        const int n = std::uniform_int_distribution<int>(1, max_size)(rng);
        if (i++ % 2 == 0) {
            out.push_back({"points-" + std::to_string(i), random_point_geometry(n, rng)});
        } else {
            double d = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
            out.push_back({"ideals-" + std::to_string(i), order_ideal_geometry(random_poset(n, d, rng))});
        }
    }
    return out;
}

std::vector<LatticeInstance> lattices() {
    return {
        {"B2", boolean_lattice(2)},     {"B3", boolean_lattice(3)},     {"B4", boolean_lattice(4)},
        {"D12", divisor_lattice(12)},   {"D30", divisor_lattice(30)},   {"D60", divisor_lattice(60)},
        {"Pi3", partition_lattice(3)},  {"Pi4", partition_lattice(4)},
    };
}

std::vector<Matroid> matroids() {
    std::vector<Matroid> out;
    for (int n = 1; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) out.push_back(uniform_matroid(r, n));
    for (const auto& g : small_graphs(5, true)) out.push_back(graphic_matroid(g));
    // Loop and coloop cases.
    out.push_back(Matroid(OrderedGroundSet::indexed(1), {bit(0)}));
    out.push_back(Matroid(OrderedGroundSet::indexed(3), {bit(0), bit(1) | bit(2)}));
    out.push_back(Matroid(OrderedGroundSet::indexed(4), {bit(0) | bit(1) | bit(2)}));
    return out;
}

FinitePoset random_order(int k, std::mt19937_64& rng) {
    // Random DAG on a random permutation, closed transitively.
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    double d = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
    std::bernoulli_distribution coin(d);
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (coin(rng)) less.emplace_back(perm[i], perm[j]);
    return FinitePoset::from_less_pairs(k, less);
}

}  // namespace bc::corpus
