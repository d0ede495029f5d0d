#include "bc/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace bc {

Hypergraph::Hypergraph(std::vector<std::string> vertices, std::vector<Mask> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = vertex_count();
    require_cap(n, kMaxGroundSize, "hypergraph vertices");
    std::set<std::string> labels(vertices_.begin(), vertices_.end());
    if (static_cast<int>(labels.size()) != n) throw SchemaError("duplicate vertex label");
    std::set<Mask> seen;
    for (Mask e : edges_) {
        if (!is_subset(e, full_mask(n))) throw SchemaError("edge vertex out of range");
        if (popcount(e) < 2) throw PreconditionViolation("hypergraph must be simple: every edge needs >= 2 vertices");
        if (!seen.insert(e).second) throw PreconditionViolation("repeated edge");
    }
}

Hypergraph Hypergraph::from_lists(std::vector<std::string> vertices, const std::vector<std::vector<int>>& edges) {
    std::vector<Mask> masks;
    for (const auto& e : edges) {
        Mask m = 0;
        for (int v : e) {
            if (v < 0 || v >= static_cast<int>(vertices.size())) throw SchemaError("edge vertex out of range");
            m |= bit(v);
        }
        masks.push_back(m);
    }
    return Hypergraph(std::move(vertices), std::move(masks));
}

int Hypergraph::uniformity() const {
    if (edges_.empty()) return 0;
    int r = popcount(edges_[0]);
    for (Mask e : edges_)
        if (popcount(e) != r) return 0;
    return r;
}

int Hypergraph::edge_index(Mask vertices) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i] == vertices) return i;
    return -1;
}

int components_spanning(const Hypergraph& h, Mask edges) {
    std::vector<int> parent(h.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = h.vertex_count();
    for (int e : elements_of(edges)) {
        Mask verts = h.edge(e);
        int root = find(min_element(verts));
        for (int v : elements_of(verts)) {
            int r = find(v);
            if (r != root) {
                parent[r] = root;
                --components;
            }
        }
    }
    return components;
}

namespace {

// Distinct representatives v_i ∈ slot_i (bipartite matching, Kuhn).
bool distinct_representatives(const std::vector<Mask>& slots) {
    std::vector<int> owner(kMaxGroundSize, -1);
    auto augment = [&](auto&& self, int s, Mask& tried) -> bool {
        for (int v : elements_of(slots[s] & ~tried)) {
            tried |= bit(v);
            if (owner[v] == -1 || self(self, owner[v], tried)) {
                owner[v] = s;
                return true;
            }
        }
        return false;
    };
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        Mask tried = 0;
        if (!augment(augment, s, tried)) return false;
    }
    return true;
}

}  // namespace

bool is_berge_cycle(const Hypergraph& h, Mask edge_set) {
    auto ids = elements_of(edge_set);
    const int l = static_cast<int>(ids.size());
    if (l < 2) return false;
    require_cap(l, 10, "Berge cycle check");
    // Fix the first edge, try every cyclic arrangement of the rest.
    std::vector<int> order(ids.begin() + 1, ids.end());
    std::sort(order.begin(), order.end());
    do {
        std::vector<int> cyc{ids[0]};
        cyc.insert(cyc.end(), order.begin(), order.end());
        std::vector<Mask> slots;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            Mask s = h.edge(cyc[i]) & h.edge(cyc[(i + 1) % l]);
            ok = s != 0;
            slots.push_back(s);
        }
        if (ok && distinct_representatives(slots)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool validate_condition_a(const std::vector<Mask>& circuits, const Hypergraph& h) {
    for (Mask c : circuits) {
        if (!is_subset(c, full_mask(h.edge_count())) || !is_berge_cycle(h, c)) return false;
        for (int e : elements_of(c)) {
            Mask others = 0;
            for (int f : elements_of(c & ~bit(e))) others |= h.edge(f);
            if (!is_subset(h.edge(e), others)) return false;
        }
    }
    return true;
}

bool validate_condition_b(const std::vector<Mask>& circuits, const Hypergraph& h) {
    bool seen_two = false;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (popcount(h.edge(e)) == 2) seen_two = true;
        else if (seen_two) return false;  // a larger edge after a 2-edge
    }
    for (Mask c : circuits) {
        if (!is_subset(c, full_mask(h.edge_count())) || !is_berge_cycle(h, c)) return false;
        bool has_two = false;
        for (int e : elements_of(c)) has_two = has_two || popcount(h.edge(e)) == 2;
        if (!has_two) return false;
    }
    return true;
}

IntPolynomial hypergraph_chromatic(const Hypergraph& h, HyperMethod method, const std::vector<Mask>& circuits,
                                   Exec exec) {
    const int m = h.edge_count();
    if (method == HyperMethod::full) return sum_full<IntPolynomial>(m, hyper_chromatic_term(h), exec);
    if (!validate_condition_a(circuits, h) && !validate_condition_b(circuits, h))
        throw PreconditionViolation("circuit family satisfies neither condition (a) nor condition (b)");
    auto broken = broken_sets(derive_broken_circuits(circuits, m));
    return sum_pruned<IntPolynomial>(m, broken, hyper_chromatic_term(h), exec);
}

std::vector<Mask> tight_cycles(const Hypergraph& h, int l) {
    const int r = h.uniformity();
    if (r == 0) throw PreconditionViolation("tight cycles need a uniform hypergraph");
    if (l < 1 || l >= r) throw PreconditionViolation("tightness l must satisfy 1 <= l < r");
    if (2 * l < r) throw PreconditionViolation("tightness l must satisfy l >= r/2");
    const int n = h.vertex_count();
    require_cap(n, 16, "tight cycle search (vertices)");
    const int step = r - l;

    std::set<Mask> found;
    std::vector<int> seq;
    // Edges are segments [j*step, j*step + r) of a cyclic vertex sequence of
    // length k*step. Segments are checked as soon as they are complete.
    auto segment = [&](int start, int len) {
        Mask s = 0;
        for (int i = 0; i < r; ++i) s |= bit(seq[(start + i) % len]);
        return s;
    };
    auto close_cycle = [&](int k) {
        const int len = k * step;
        std::vector<int> ids;
        Mask edges = 0;
        for (int j = 0; j < k; ++j) {
            int id = h.edge_index(segment(j * step, len));
            if (id < 0 || contains(edges, id)) return;
            edges |= bit(id);
            ids.push_back(id);
        }
        for (int j = 0; j < k; ++j)
            if (popcount(h.edge(ids[j]) & h.edge(ids[(j + 1) % k])) != l) return;
        found.insert(edges);
    };
    auto rec = [&](auto&& self, Mask used) -> void {
        const int p = static_cast<int>(seq.size());
        if (p >= r && (p - r) % step == 0 && h.edge_index(segment(p - r, p)) < 0) return;
        if (p % step == 0 && p / step >= 3) close_cycle(p / step);
        for (int v = 0; v < n; ++v) {
            if (contains(used, v)) continue;
            // Root each cyclic sequence at its smallest vertex.
            if (p > 0 && v < seq[0]) continue;
            seq.push_back(v);
            self(self, used | bit(v));
            seq.pop_back();
        }
    };
    rec(rec, Mask{0});
    return {found.begin(), found.end()};
}

std::vector<Mask> rectangle_circuits(const Hypergraph& h) {
    if (h.uniformity() != 4) throw PreconditionViolation("rectangle circuits need a 4-uniform hypergraph");
    // 2-tight cycles of length three: pairwise overlaps of two points, six
    // points in total, each covered exactly twice.
    std::vector<Mask> out;
    const int k = h.edge_count();
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
            if (popcount(h.edge(x) & h.edge(y)) != 2) continue;
            for (int z = y + 1; z < k; ++z) {
                Mask a = h.edge(x), b = h.edge(y), c = h.edge(z);
                if (popcount(a & c) != 2 || popcount(b & c) != 2) continue;
                if (popcount(a | b | c) != 6 || (a & b & c) != 0) continue;
                out.push_back(bit(x) | bit(y) | bit(z));
            }
        }
    return out;
}

GridRectangles grid_rectangle_hypergraph(int m, int n) {
    if (m < 2 || n < 2) throw PreconditionViolation("grid needs m, n >= 2");
    require_cap(m * n, 16, "grid points");
    struct Rect {
        int area;
        Mask pts;
        std::vector<int> sorted;
    };
    std::vector<Rect> rects;
    auto pt = [n](int i, int j) { return i * n + j; };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    Mask p = bit(pt(a, c)) | bit(pt(a, d)) | bit(pt(b, c)) | bit(pt(b, d));
                    rects.push_back({(b - a) * (d - c), p, elements_of(p)});
                }
    std::sort(rects.begin(), rects.end(),
              [](const Rect& x, const Rect& y) { return std::tie(x.area, x.sorted) < std::tie(y.area, y.sorted); });
    require_cap(static_cast<int>(rects.size()), kMaxGroundSize, "grid rectangles");

    GridRectangles g;
    g.m = m;
    g.n = n;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<Mask> edges;
    for (const auto& r : rects) {
        edges.push_back(r.pts);
        g.area.push_back(r.area);
    }
    g.hypergraph = Hypergraph(std::move(labels), std::move(edges));

    g.circuits = rectangle_circuits(g.hypergraph);
    return g;
}

Hypergraph complete_uniform_hypergraph(int n, int r) {
    std::vector<Mask> edges;
    for (Mask e = 0; e < bit(n); ++e)
        if (popcount(e) == r) edges.push_back(e);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
    return Hypergraph(std::move(labels), std::move(edges));
}

}  // namespace bc
