#include "bc/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "bc/convex.hpp"
#include "bc/corpus.hpp"
#include "bc/graph.hpp"
#include "bc/hypergraph.hpp"
#include "bc/lattice.hpp"
#include "bc/matroid.hpp"
#include "bc/number.hpp"
#include "bc/oracles/oracles.hpp"
#include "bc/whitney.hpp"

namespace bc::verify {

namespace {

std::string set_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::string graph_string(const Graph& g) {
    std::string s = "graph n=" + std::to_string(g.vertex_count()) + " edges=[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
    }
    return s + "]";
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Ctx {
    std::mt19937_64 rng;
    const Options& opts;
    bool ok = true;
    std::string witness;
    std::uint64_t instances = 0;
    std::string detail;

    template <class W>
    void expect(bool cond, W&& what) {
        if (!cond && ok) {
            ok = false;
            witness = what();
        }
    }
};

using CheckFn = std::function<void(Ctx&)>;

struct Check {
    std::string name;
    std::string suite;
    CheckFn fn;
};

std::vector<Mask> random_subfamily(const std::vector<Mask>& family, std::mt19937_64& rng) {
    std::vector<Mask> out;
    for (Mask b : family)
        if (rng() & 1) out.push_back(b);
    return out;
}

// ---------------------------------------------------------------- algebra

void algebra_group_axioms(Ctx& c) {
    std::uniform_int_distribution<long> coef(-1000, 1000);
    auto poly = [&] {
        std::vector<BigInt> v(std::uniform_int_distribution<int>(0, 8)(c.rng));
        for (auto& x : v) x = coef(c.rng);
        return IntPolynomial(v);
    };
    auto bipoly = [&] {
        BiPolynomial b;
        for (int k = 0; k < 5; ++k)
            b.add_term(std::uniform_int_distribution<unsigned>(0, 3)(c.rng),
                       std::uniform_int_distribution<unsigned>(0, 3)(c.rng), coef(c.rng));
        return b;
    };
    for (int i = 0; i < 500; ++i, ++c.instances) {
        auto p = poly(), q = poly(), r = poly();
        BigInt t = coef(c.rng);
        c.expect((p + q) + r == p + (q + r), [&] { return "associativity: " + p.to_string(); });
        c.expect(p + q == q + p, [&] { return "commutativity: " + p.to_string(); });
        c.expect((p + (-p)).is_zero(), [&] { return "inverse: " + p.to_string(); });
        c.expect((p + q).eval(t) == p.eval(t) + q.eval(t), [&] { return "evaluation: " + p.to_string(); });
        auto a = bipoly(), b = bipoly(), d = bipoly();
        c.expect((a + b) + d == a + (b + d), [&] { return "bivariate associativity: " + a.to_string(); });
        c.expect(a + b == b + a, [&] { return "bivariate commutativity: " + a.to_string(); });
        c.expect((a - a).is_zero(), [&] { return "bivariate inverse: " + a.to_string(); });
        BigInt x = coef(c.rng), y = coef(c.rng), z = coef(c.rng);
        c.expect((x + y) + z == x + (y + z) && x + y == y + x && x - x == 0, [] { return std::string("integers"); });
    }
}

// ------------------------------------------------------------ whitney-core

void whitney_theorem1(Ctx& c) {
    auto insts = corpus::pruning_instances(500, 14, c.rng());
    std::uint64_t passing = 0, families = 0;
    for (const auto& inst : insts) {
        auto report = verify_cancellation<BigInt>(inst.n, inst.circuits, inst.f);
        if (!report.ok) continue;
        ++passing;
        BigInt full = sum_full<BigInt>(inst.n, inst.f);
        auto broken = broken_sets(derive_broken_circuits(inst.circuits, inst.n));
        std::vector<std::vector<Mask>> fams{broken};
        for (int k = 0; k < 3; ++k) fams.push_back(random_subfamily(broken, c.rng));
        if (c.opts.inject_mutant) {
            // C \ {min C} is not C \ {max C}; excluding it drops non-cancelling terms.
            for (Mask circ : inst.circuits) {
                if (popcount(circ) < 2) continue;
                Mask bad = circ & ~bit(min_element(circ));
                if (std::find(broken.begin(), broken.end(), bad) != broken.end()) continue;
                auto mutated = broken;
                mutated.push_back(bad);
                BigInt pruned = sum_pruned<BigInt>(inst.n, mutated, inst.f);
                if (pruned != full) {
                    // A subset the mutant removes although the true family keeps it.
                    Mask excluded = 0;
                    for_each_avoiding(inst.n, broken, [&](Mask a) {
                        if (!excluded && is_subset(bad, a) && inst.f(a) != 0) excluded = a;
                    });
                    c.expect(false, [&] {
                        return inst.name + ": mutant broken set " + set_string(bad) + " excludes subset " +
                               set_string(excluded) + "; full=" + full.get_str() + " pruned=" + pruned.get_str();
                    });
                }
                break;
            }
        }
        for (std::size_t k = 0; k < fams.size(); ++k, ++families) {
            BigInt pruned = sum_pruned<BigInt>(inst.n, fams[k], inst.f);
            c.expect(pruned == full, [&] {
                return inst.name + " family#" + std::to_string(k) + ": full=" + full.get_str() +
                       " pruned=" + pruned.get_str();
            });
        }
        if (inst.n <= 10) {
            c.expect(sum_pruned<BigInt>(inst.n, broken, inst.f, Exec::serial) == full,
                     [&] { return inst.name + ": serial pruned differs"; });
        }
    }
    c.instances = passing;
    c.expect(passing >= 500, [&] { return "only " + std::to_string(passing) + " instances passed cancellation"; });
    c.detail = std::to_string(passing) + " instances, " + std::to_string(families) + " broken families";
}

void whitney_monotone(Ctx& c) {
    for (int t = 0; t < 300; ++t, ++c.instances) {
        int n = std::uniform_int_distribution<int>(1, 14)(c.rng);
        auto rand_family = [&] {
            std::vector<Mask> f;
            int k = std::uniform_int_distribution<int>(0, 4)(c.rng);
            for (int i = 0; i < k; ++i) f.push_back(static_cast<Mask>(c.rng()) & full_mask(n));
            return f;
        };
        auto b1 = rand_family(), b2 = rand_family();
        auto both = b1;
        both.insert(both.end(), b2.begin(), b2.end());
        auto one = enumerate_avoiding(n, b1), u = enumerate_avoiding(n, both);
        for (std::size_t k = 0; k < one.size(); ++k)
            c.expect(u[k] <= one[k], [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
}

void whitney_maxmin(Ctx& c) {
    for (int t = 0; t < 200; ++t) {
        int n = std::uniform_int_distribution<int>(1, 9)(c.rng);
        std::vector<BigInt> v(n);
        for (auto& x : v) x = std::uniform_int_distribution<long>(-50, 50)(c.rng);
        auto shuffled = v;
        std::shuffle(shuffled.begin(), shuffled.end(), c.rng);
        for (int k = 1; k <= n; ++k, ++c.instances) {
            auto r = maxmin_identity<BigInt>(v, k);
            auto s = maxmin_identity<BigInt>(shuffled, k);
            c.expect(r.lhs == r.rhs && r.pruned == r.rhs && s.lhs == r.lhs && s.rhs == r.rhs, [&] {
                return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lhs=" + r.lhs.get_str() +
                       " rhs=" + r.rhs.get_str();
            });
        }
    }
}

void whitney_union_size(Ctx& c) {
    std::uint64_t with_broken = 0;
    for (int t = 0; t < 300; ++t, ++c.instances) {
        int n = std::uniform_int_distribution<int>(1, 10)(c.rng);
        std::vector<std::vector<int>> sets(n);
        for (auto& s : sets) {
            for (int atom = 0; atom < 12; ++atom)
                if (std::bernoulli_distribution(0.4)(c.rng)) s.push_back(atom);
        }
        IndexedSetFamily fam(sets);
        // Keep every valid (B, c) with |B| <= 3 that the random draw offers.
        std::vector<WitnessedBroken> broken;
        for (int tries = 0; tries < 8; ++tries) {
            Mask b = static_cast<Mask>(c.rng()) & full_mask(n);
            if (b == 0 || popcount(b) > 3) continue;
            for (int w = max_element(b) + 1; w < n; ++w)
                if (fam.intersection_within(b, w)) {
                    broken.push_back({b, w});
                    break;
                }
        }
        with_broken += !broken.empty();
        auto r = restricted_union_size(fam, broken);
        BigInt truth = oracle::union_size(sets).value;
        c.expect(r.restricted == truth && r.direct == truth, [&] {
            return "family #" + std::to_string(t) + ": restricted=" + r.restricted.get_str() + " oracle=" + truth.get_str();
        });
    }
    c.detail = std::to_string(with_broken) + " families with a non-empty restriction";
}

void whitney_narushima(Ctx& c) {
    // L_n \ {1} under divisibility with M_d = multiples of d up to N:
    // M_s ∩ M_t = M_lcm(s,t) = M_{s ∨ t}.
    for (std::uint64_t n : {6ull, 12ull, 30ull, 36ull, 60ull, 64ull, 210ull}) {
        auto d = divisors(n);
        d.erase(d.begin());
        const int k = static_cast<int>(d.size());
        std::vector<std::pair<int, int>> less;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && d[j] % d[i] == 0) less.emplace_back(i, j);
        FinitePoset p = FinitePoset::from_less_pairs(k, less);
        const int bound = std::uniform_int_distribution<int>(50, 400)(c.rng);
        std::vector<std::vector<int>> sets(k);
        for (int i = 0; i < k; ++i)
            for (int x = static_cast<int>(d[i]); x <= bound; x += static_cast<int>(d[i])) sets[i].push_back(x);
        auto r = narushima_union(p, IndexedSetFamily(sets));
        BigInt truth = oracle::union_size(sets).value;
        ++c.instances;
        c.expect(r.restricted == truth, [&] {
            return "n=" + std::to_string(n) + " N=" + std::to_string(bound) + ": chain sum " + r.restricted.get_str() +
                   " vs " + truth.get_str();
        });
    }
}

void whitney_serial_parallel(Ctx& c) {
    for (int t = 0; t < 60; ++t, ++c.instances) {
        int n = std::uniform_int_distribution<int>(1, 18)(c.rng);
        std::vector<Mask> broken;
        for (int i = 0; i < 5; ++i)
            if (Mask b = static_cast<Mask>(c.rng()) & full_mask(n)) broken.push_back(b);
        std::uint64_t salt = c.rng();
        auto f = [salt](Mask m) { return BigInt(static_cast<long>((m * 2654435761u ^ salt) % 201) - 100); };
        c.expect(sum_full<BigInt>(n, f, Exec::serial) == sum_full<BigInt>(n, f, Exec::parallel),
                 [&] { return "sum_full n=" + std::to_string(n); });
        c.expect(sum_pruned<BigInt>(n, broken, f, Exec::serial) == sum_pruned<BigInt>(n, broken, f, Exec::parallel),
                 [&] { return "sum_pruned n=" + std::to_string(n); });
    }
}

// --------------------------------------------------------- convex-geometry

void convex_theorem2(Ctx& c) {
    auto geoms = corpus::geometries(220, 10, c.rng());
    for (const auto& inst : geoms) {
        ConvexGeometry g(inst.closure);
        std::uint64_t salt = c.rng();
        auto f = [&g, salt](Mask a) {
            std::uint64_t h = (g.hull(a) + 1) * 0x9E3779B97F4A7C15ull ^ salt;
            long gamma = static_cast<long>((h >> 17) % 23) - 11;
            return BigInt(parity_sign(a) * gamma);
        };
        auto r = reduce_free_sets<BigInt>(g, f);
        ++c.instances;
        c.expect(r.full == r.free,
                 [&] { return inst.name + ": full=" + r.full.get_str() + " free=" + r.free.get_str(); });
    }
    c.detail = std::to_string(geoms.size()) + " geometries";
}

void convex_euler(Ctx& c) {
    for (const auto& inst : corpus::geometries(220, 10, c.rng())) {
        ConvexGeometry g(inst.closure);
        if (g.size() == 0) continue;
        ++c.instances;
        BigInt chi = euler_characteristic_free(g);
        BigInt signed_count = count_free_signed(g);
        c.expect(chi == 1, [&] { return inst.name + ": Euler characteristic " + chi.get_str(); });
        c.expect(signed_count == static_cast<unsigned long>(g.free_sets().size()),
                 [&] { return inst.name + ": signed count " + signed_count.get_str(); });
    }
}

void convex_hull_axioms(Ctx& c) {
    for (const auto& inst : corpus::geometries(220, 10, c.rng())) {
        ConvexGeometry g(inst.closure);
        const int n = g.size();
        ++c.instances;
        for (Mask a = 0; a < bit(n); ++a) {
            const Mask h = g.hull(a);
            c.expect(is_subset(a, h) && g.hull(h) == h, [&] { return inst.name + ": extensive/idempotent at " + set_string(a); });
            for (int e = 0; e < n; ++e)
                if (!contains(a, e))
                    c.expect(is_subset(h, g.hull(a | bit(e))), [&] { return inst.name + ": monotone at " + set_string(a); });
        }
        for (Mask closed : g.closure().closed_sets()) {
            Mask b = g.basis(closed);
            c.expect(g.hull(b) == closed, [&] { return inst.name + ": basis of " + set_string(closed); });
            for (int e : elements_of(b))
                c.expect(g.hull(b & ~bit(e)) != closed,
                         [&] { return inst.name + ": basis of " + set_string(closed) + " not minimal"; });
        }
    }
}

void convex_hstar_bridge(Ctx& c) {
    for (const auto& g : corpus::small_graphs(6, false)) {
        const int m = g.edge_count();
        auto circuits = cycles_edge_sets(g);
        auto r = hstar_from_circuits(m, circuits);
        ConvexGeometry geo(r.closure);
        auto free = geo.free_sets();
        std::sort(free.begin(), free.end());
        std::vector<Mask> avoiding;
        for_each_avoiding(m, broken_sets(derive_broken_circuits(circuits, m)), [&](Mask a) { avoiding.push_back(a); });
        std::sort(avoiding.begin(), avoiding.end());
        ++c.instances;
        c.expect(r.convex && free == avoiding, [&] { return graph_string(g); });
    }
}

// ------------------------------------------------------- graph-polynomials

void graph_chromatic_goldens(Ctx& c) {
    auto k3 = chromatic_polynomial(complete_graph(3), ChromaticMethod::broken_circuit);
    auto k4 = chromatic_polynomial(complete_graph(4), ChromaticMethod::broken_circuit);
    c.instances = 2;
    c.expect(k3.polynomial == IntPolynomial{0, 2, -3, 1}, [&] { return "K3: " + k3.polynomial.to_string(); });
    c.expect(k3.broken_free_counts == std::vector<std::uint64_t>{1, 3, 2, 0}, [] { return std::string("K3 b_k"); });
    c.expect(k4.polynomial == IntPolynomial{0, -6, 11, -6, 1}, [&] { return "K4: " + k4.polynomial.to_string(); });
}

void graph_chromatic(Ctx& c) {
    auto graphs = corpus::small_graphs(6, true);
    const std::size_t connected = graphs.size();
    auto random = corpus::random_graphs(200, 1, 7, c.rng());
    graphs.insert(graphs.end(), random.begin(), random.end());
    auto named = corpus::named_graphs();
    for (auto& g : named)
        if (g.vertex_count() <= 7) graphs.push_back(g);
    for (const auto& g : graphs) {
        ++c.instances;
        auto full = chromatic_polynomial(g, ChromaticMethod::full).polynomial;
        auto bc = chromatic_polynomial(g, ChromaticMethod::broken_circuit);
        c.expect(full == bc.polynomial, [&] { return graph_string(g) + ": full " + full.to_string() + " vs " + bc.polynomial.to_string(); });
        const int n = g.vertex_count();
        for (std::size_t k = 0; k < bc.broken_free_counts.size(); ++k) {
            BigInt expected = BigInt(bc.broken_free_counts[k]) * ((k % 2) ? -1 : 1);
            c.expect(full.coeff(n - k) == expected, [&] { return graph_string(g) + ": coefficient law at k=" + std::to_string(k); });
        }
        if (n <= 6)
            for (unsigned x = 1; x <= 3; ++x) {
                BigInt count = oracle::colourings(g, x).value;
                c.expect(full.eval(BigInt(x)) == count, [&] { return graph_string(g) + ": P(" + std::to_string(x) + ")"; });
            }
    }
    c.detail = std::to_string(connected) + " connected graphs <= 6 vertices, 200 random <= 7, named";
}

void graph_scp(Ctx& c) {
    auto k3 = q_at_minus1(complete_graph(3), QMethod::eq6);
    c.expect(k3 == IntPolynomial{1, -1}, [&] { return "K3 golden: " + k3.to_string("y"); });
    auto graphs = corpus::cyclically_claw_free_graphs(300, 8, c.rng());
    for (auto& g : corpus::named_graphs())
        if (g.vertex_count() <= 8 && is_cyclically_claw_free(g)) graphs.push_back(g);
    for (const auto& g : graphs) {
        ++c.instances;
        c.expect(is_cyclically_claw_free(g), [&] { return graph_string(g) + " not cyclically claw-free"; });
        auto direct = q_at_minus1(g, QMethod::direct);
        auto e5 = q_at_minus1(g, QMethod::eq5), e6 = q_at_minus1(g, QMethod::eq6);
        c.expect(direct == e5 && direct == e6, [&] {
            return graph_string(g) + ": direct " + direct.to_string("y") + " eq5 " + e5.to_string("y") + " eq6 " +
                   e6.to_string("y");
        });
        c.expect(subgraph_component_polynomial(g).eval_x(BigInt(-1)) == direct,
                 [&] { return graph_string(g) + ": Q(G,-1,y) mismatch"; });
    }
}

void graph_domination(Ctx& c) {
    auto p3 = domination_polynomial(path_graph(3), DominationMethod::bnh_pruned);
    c.expect(p3 == IntPolynomial{0, 1, 3, 1}, [&] { return "P3 golden: " + p3.to_string(); });
    auto graphs = corpus::small_graphs(6, false);
    auto random = corpus::random_graphs(200, 7, 8, c.rng());
    graphs.insert(graphs.end(), random.begin(), random.end());
    std::uint64_t pruned = 0, refined = 0;
    for (const auto& g : graphs) {
        ++c.instances;
        auto direct = domination_polynomial(g, DominationMethod::direct);
        auto bnh = domination_polynomial(g, DominationMethod::bnh);
        c.expect(direct == bnh, [&] { return graph_string(g) + ": direct " + direct.to_string() + " bnh " + bnh.to_string(); });
        auto counts = oracle::dominating(g).value;
        for (std::size_t k = 0; k < counts.size(); ++k)
            c.expect(direct.coeff(k) == counts[k], [&] { return graph_string(g) + ": oracle d_" + std::to_string(k); });
        bool isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(v) == 0;
        if (isolated) continue;
        ++pruned;
        auto p = domination_polynomial(g, DominationMethod::bnh_pruned);
        c.expect(p == direct, [&] { return graph_string(g) + ": bnh_pruned " + p.to_string(); });
        try {
            auto u = degree1_upset_order(g);
            ++refined;
            auto q = domination_polynomial_pruned(u.graph, u.pendant);
            c.expect(q == direct, [&] { return graph_string(g) + ": degree-1 refinement " + q.to_string(); });
        } catch (const PreconditionViolation&) {
            // isolated edge: refinement not licensed
        }
    }
    c.detail = std::to_string(pruned) + " pruned, " + std::to_string(refined) + " with degree-1 refinement";
}

void graph_absorption(Ctx& c) {
    for (const auto& g : corpus::small_graphs(6, false)) {
        const int n = g.vertex_count();
        ++c.instances;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 0) continue;
            const Mask nv = g.closed_neighbourhood(bit(v));
            const Mask rest = full_mask(n) & ~nv;
            for (Mask s = rest;; s = (s - 1) & rest) {
                const Mask a = nv | s;
                c.expect(g.closed_neighbourhood(a & ~bit(v)) == g.closed_neighbourhood(a),
                         [&] { return graph_string(g) + ": v=" + std::to_string(v) + " A=" + set_string(a); });
                if (s == 0) break;
            }
        }
    }
}

// -------------------------------------------------- hypergraph-polynomials

struct HyperCase {
    std::string name;
    Hypergraph h;
    std::vector<Mask> circuits;
};

void check_hyper_case(Ctx& c, const HyperCase& hc, bool condition_a) {
    ++c.instances;
    const bool valid = condition_a ? validate_condition_a(hc.circuits, hc.h) : validate_condition_b(hc.circuits, hc.h);
    c.expect(valid, [&] { return hc.name + ": circuit family fails its condition"; });
    if (!valid) return;
    auto full = hypergraph_chromatic(hc.h, HyperMethod::full);
    auto restricted = hypergraph_chromatic(hc.h, HyperMethod::restricted, hc.circuits);
    c.expect(full == restricted,
             [&] { return hc.name + ": full " + full.to_string() + " restricted " + restricted.to_string(); });
    BigInt col = oracle::hyper_colourings(hc.h, 2).value;
    c.expect(full.eval(BigInt(2)) == col, [&] { return hc.name + ": P(H,2) vs oracle " + col.get_str(); });
}

Hypergraph random_subhypergraph(const Hypergraph& h, int keep, std::mt19937_64& rng) {
    std::vector<Mask> edges = h.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(keep, edges.size()));
    std::sort(edges.begin(), edges.end());
    return Hypergraph(h.vertices(), edges);
}

void hypergraph_tight(Ctx& c) {
    std::vector<Hypergraph> hs;
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {4, 3}, {5, 3}, {5, 4}, {6, 5}, {6, 4}, {7, 3}})
        hs.push_back(complete_uniform_hypergraph(n, r));
    std::vector<HyperCase> cases;
    for (const auto& base : hs) {
        const int r = base.uniformity();
        for (int trial = 0; trial < 6; ++trial) {
            Hypergraph h = base.edge_count() <= 12 && trial == 0 ? base : random_subhypergraph(base, 12 - trial, c.rng);
            for (int l = (r + 1) / 2; l < r; ++l) {
                auto cs = tight_cycles(h, l);
                if (cs.empty()) continue;
                cases.push_back({"K_" + std::to_string(base.vertex_count()) + "^(" + std::to_string(r) + ") trial " +
                                     std::to_string(trial) + " l=" + std::to_string(l),
                                 h, cs});
            }
        }
    }
    for (const auto& hc : cases) check_hyper_case(c, hc, true);
    c.detail = std::to_string(cases.size()) + " tight-cycle families";
}

void hypergraph_grid(Ctx& c) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
        auto g = grid_rectangle_hypergraph(m, n);
        check_hyper_case(c, {"grid " + std::to_string(m) + "x" + std::to_string(n), g.hypergraph, g.circuits}, true);
        for (Mask circ : g.circuits) {
            const int top = max_element(circ);
            for (int e : elements_of(circ))
                c.expect(g.area[e] <= g.area[top], [&] { return "grid: circuit max is not the largest rectangle"; });
        }
        if (m == 2 && n == 3)
            c.expect(g.circuits.size() == 1, [&] { return "2x3 grid has " + std::to_string(g.circuits.size()) + " circuits"; });
    }
}

void hypergraph_condition_b(Ctx& c) {
    // 3-edges first, then the edges of a random graph; circuits are the graph's cycles.
    for (int t = 0; t < 40; ++t) {
        const int n = std::uniform_int_distribution<int>(4, 6)(c.rng);
        Graph g = random_graph(n, 0.5, c.rng);
        std::vector<Mask> edges;
        for (Mask e = 0; e < bit(n) && edges.size() < 3; ++e)
            if (popcount(e) == 3 && (c.rng() % 4 == 0)) edges.push_back(e);
        const int offset = static_cast<int>(edges.size());
        for (auto [u, v] : g.edges()) edges.push_back(bit(u) | bit(v));
        if (edges.size() > 12 || g.edge_count() == 0) continue;
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        Hypergraph h(labels, edges);
        std::vector<Mask> circuits;
        for (Mask cyc : cycles_edge_sets(g)) circuits.push_back(cyc << offset);
        if (circuits.empty()) continue;
        check_hyper_case(c, {"mixed#" + std::to_string(t), h, circuits}, false);
    }
}

void hypergraph_cancellation(Ctx& c) {
    std::vector<HyperCase> cases;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
        auto g = grid_rectangle_hypergraph(m, n);
        cases.push_back({"grid", g.hypergraph, g.circuits});
    }
    Hypergraph k53 = complete_uniform_hypergraph(5, 3);
    cases.push_back({"K5^(3)", k53, tight_cycles(k53, 2)});
    for (const auto& hc : cases) {
        const int m = hc.h.edge_count();
        for (Mask circ : hc.circuits) {
            ++c.instances;
            const Mask top = bit(max_element(circ));
            const Mask rest = full_mask(m) & ~circ;
            for (Mask s = rest;; s = (s - 1) & rest) {
                c.expect(components_spanning(hc.h, circ | s) == components_spanning(hc.h, (circ | s) & ~top),
                         [&] { return hc.name + ": circuit " + set_string(circ) + " at " + set_string(circ | s); });
                if (s == 0) break;
            }
        }
    }
}

// ------------------------------------------------------------------ matroid

std::vector<std::pair<std::string, Matroid>> matroid_corpus() {
    std::vector<std::pair<std::string, Matroid>> out;
    for (int n = 1; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) out.emplace_back("U_" + std::to_string(r) + "," + std::to_string(n), uniform_matroid(r, n));
    for (const auto& g : corpus::small_graphs(6, true)) out.emplace_back("M(" + graph_string(g) + ")", graphic_matroid(g));
    out.emplace_back("loop", Matroid(OrderedGroundSet::indexed(1), {bit(0)}));
    out.emplace_back("loop+coloop+parallel pair", Matroid(OrderedGroundSet::indexed(4), {bit(0), bit(2) | bit(3)}));
    out.emplace_back("coloop", uniform_matroid(1, 1));
    out.emplace_back("two loops", Matroid(OrderedGroundSet::indexed(3), {bit(0), bit(2)}));
    return out;
}

void matroid_characteristic(Ctx& c) {
    auto u = characteristic_polynomial(uniform_matroid(2, 3), CharMethod::heron);
    c.expect(u.polynomial == IntPolynomial{2, -3, 1}, [&] { return "U_2,3 golden: " + u.polynomial.to_string(); });
    c.expect(u.broken_free_counts == std::vector<std::uint64_t>{1, 3, 2, 0}, [] { return std::string("U_2,3 b_k"); });
    for (const auto& [name, m] : matroid_corpus()) {
        ++c.instances;
        auto full = characteristic_polynomial(m, CharMethod::full).polynomial;
        auto heron = characteristic_polynomial(m, CharMethod::heron).polynomial;
        c.expect(full == heron, [&] { return name + ": full " + full.to_string() + " heron " + heron.to_string(); });
    }
}

void matroid_beta(Ctx& c) {
    c.expect(beta_invariant(uniform_matroid(2, 3), BetaMethod::broken_circuit) == 1, [] { return std::string("U_2,3 golden"); });
    for (const auto& [name, m] : matroid_corpus()) {
        ++c.instances;
        BigInt a = beta_invariant(m, BetaMethod::full), b = beta_invariant(m, BetaMethod::broken_circuit),
               d = beta_invariant(m, BetaMethod::derivative);
        c.expect(a == b && a == d, [&] {
            return name + ": full " + a.get_str() + " broken_circuit " + b.get_str() + " derivative " + d.get_str();
        });
    }
}

void matroid_rank(Ctx& c) {
    for (const auto& [name, m] : matroid_corpus()) {
        const int n = m.size();
        ++c.instances;
        for (Mask a = 0; a < bit(n); ++a)
            c.expect(m.rank(a) == m.rank_fast(a), [&] { return name + ": greedy and table rank differ at " + set_string(a); });
        for (int t = 0; t < 30; ++t) {
            Mask a = static_cast<Mask>(c.rng()) & full_mask(n), b = static_cast<Mask>(c.rng()) & full_mask(n);
            c.expect(m.rank(a) <= popcount(a) && m.rank(a & b) <= m.rank(a) &&
                         m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b),
                     [&] { return name + ": rank axioms at " + set_string(a) + ", " + set_string(b); });
        }
        if (n > 10) continue;
        for (Mask circ : m.circuits()) {
            const Mask top = bit(max_element(circ));
            const Mask rest = full_mask(n) & ~circ;
            for (Mask s = rest;; s = (s - 1) & rest) {
                c.expect(m.rank_fast((circ | s) & ~top) == m.rank_fast(circ | s),
                         [&] { return name + ": r(A \\ max C) != r(A) at " + set_string(circ | s); });
                if (s == 0) break;
            }
        }
    }
}

// ------------------------------------------------------------------ lattice

void lattice_mobius(Ctx& c) {
    c.expect(mobius_of_lattice(partition_lattice(4)) == -6, [] { return std::string("mu(Pi4) golden"); });
    c.expect(mobius_of_lattice(boolean_lattice(3)) == -1, [] { return std::string("mu(B3) golden"); });
    c.expect(mobius_of_lattice(partition_lattice(3)) == 2, [] { return std::string("mu(Pi3) golden"); });
    for (const auto& inst : corpus::lattices()) {
        ++c.instances;
        BigInt mu = mobius_of_lattice(inst.lattice), o = oracle::mobius(inst.lattice).value;
        c.expect(mu == o, [&] { return inst.name + ": recursive " + mu.get_str() + " oracle " + o.get_str(); });
    }
}

void lattice_rota(Ctx& c) {
    for (const auto& inst : corpus::lattices()) {
        BigInt mu = oracle::mobius(inst.lattice).value;
        for (const auto& cc : enumerate_crosscuts(inst.lattice)) {
            ++c.instances;
            BigInt r = rota_crosscut(inst.lattice, cc);
            c.expect(r == mu, [&] { return inst.name + ": crosscut sum " + r.get_str() + " vs " + mu.get_str(); });
        }
    }
}

void lattice_blass_sagan(Ctx& c) {
    std::uint64_t crosscuts = 0, orders = 0, families = 0;
    for (const auto& inst : corpus::lattices()) {
        const auto& l = inst.lattice;
        BigInt mu = oracle::mobius(l).value;
        for (const auto& cc : enumerate_crosscuts(l)) {
            ++crosscuts;
            const int k = static_cast<int>(cc.size());
            std::vector<FinitePoset> ords{FinitePoset::antichain(k), FinitePoset::chain(k)};
            while (ords.size() < 20) ords.push_back(corpus::random_order(k, c.rng));
            for (const auto& ord : ords) {
                ++orders;
                Crosscut x{cc, ord};
                auto fam = blass_sagan_B(l, x);
                auto full = blass_sagan_mu(l, x);
                ++families;
                c.expect(full.restricted == mu && full.crosscut == mu, [&] {
                    return inst.name + ": |C|=" + std::to_string(k) + " full family gives " + full.restricted.get_str() +
                           ", mu " + mu.get_str();
                });
                for (int s = 0; s < 5; ++s) {
                    auto sub = random_subfamily(fam.broken, c.rng);
                    auto r = blass_sagan_mu(l, x, &sub);
                    ++families;
                    c.expect(r.restricted == mu, [&] {
                        return inst.name + ": |C|=" + std::to_string(k) + " sub-family of size " +
                               std::to_string(sub.size()) + " gives " + r.restricted.get_str();
                    });
                }
            }
        }
    }
    c.instances = families;
    c.detail = std::to_string(crosscuts) + " crosscuts, " + std::to_string(orders) + " orders, " +
               std::to_string(families) + " families";
}

void lattice_atoms_footnote(Ctx& c) {
    for (const auto& inst : corpus::lattices()) {
        const auto& l = inst.lattice;
        auto atoms = l.atoms();
        for (int t = 0; t < 10; ++t) {
            ++c.instances;
            Crosscut x{atoms, corpus::random_order(static_cast<int>(atoms.size()), c.rng)};
            auto kept = blass_sagan_mu(l, x, nullptr, false);
            auto dropped = blass_sagan_mu(l, x, nullptr, true);
            c.expect(kept.restricted == dropped.restricted && kept.crosscut == dropped.crosscut,
                     [&] { return inst.name + ": atoms-mode sum " + dropped.restricted.get_str(); });
        }
    }
}

void lattice_dual_form(Ctx& c) {
    for (const auto& inst : corpus::lattices()) {
        for (const auto& cc : enumerate_crosscuts(inst.lattice)) {
            for (int t = 0; t < 5; ++t) {
                ++c.instances;
                Crosscut x{cc, corpus::random_order(static_cast<int>(cc.size()), c.rng)};
                auto fam = blass_sagan_B(inst.lattice, x);
                c.expect(blass_sagan_dual_form_consistent(fam, static_cast<int>(cc.size())),
                         [&] { return inst.name + ": dual-form broken sets differ"; });
            }
        }
    }
}

// ------------------------------------------------------------ number-theory

std::vector<std::uint64_t> nonprime_upto(std::uint64_t bound, std::size_t max_divisors) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n)
        if (!is_prime(n) && divisors(n).size() <= max_divisors) out.push_back(n);
    return out;
}

void number_gcd_expansion(Ctx& c) {
    for (auto n : nonprime_upto(200, 22)) {
        const int mu = classical_mobius(n);
        for (auto v : {GcdVariant::eq12, GcdVariant::eq19}) {
            ++c.instances;
            auto r = gcd_expansion(n, v);
            bool ok = r.value == mu && r.reduced == mu;
            for (const auto& x : r.chain) ok = ok && x == mu;
            c.expect(ok, [&] {
                return "n=" + std::to_string(n) + (v == GcdVariant::eq12 ? " gcd" : " lcm") + " form: " +
                       r.value.get_str() + " vs mu " + std::to_string(mu);
            });
        }
    }
    for (std::uint64_t p : primes_up_to(200)) {
        ++c.instances;
        auto a = gcd_expansion(p, GcdVariant::eq12, true), b = gcd_expansion(p, GcdVariant::eq19, true);
        c.expect(a.value == -1 && b.value == -1, [&] { return "prime " + std::to_string(p) + " modified domain"; });
    }
}

void number_totient(Ctx& c) {
    auto id = MultiplicativeFunction::parse("identity");
    auto sq = MultiplicativeFunction::power(2);
    auto inv = MultiplicativeFunction::power(-1);
    struct Case {
        const MultiplicativeFunction* h;
        std::uint64_t bound;
    };
    for (auto [h, bound] : {Case{&id, 500}, Case{&sq, 200}, Case{&inv, 120}}) {
        for (std::uint64_t n = 1; n <= bound; ++n) {
            ++c.instances;
            Rational p = totient_h(n, *h, TotientMethod::product);
            Rational d = totient_h(n, *h, TotientMethod::divisor_sum);
            c.expect(p == d, [&] { return h->name() + " n=" + std::to_string(n) + ": product vs divisor sum"; });
            c.expect(totient_product_identity(n, *h), [&] { return h->name() + " n=" + std::to_string(n) + ": product identity"; });
            if (divisors(n).size() <= 22) {
                Rational s = totient_h(n, *h, TotientMethod::subset_sum);
                c.expect(p == s, [&] { return h->name() + " n=" + std::to_string(n) + ": subset sum " + rational_string(s); });
            }
            if (!is_squarefree(n) && divisors(n).size() <= 22) {
                Rational r = totient_subset_sum_gcd_gt1(n, *h);
                c.expect(r == p, [&] { return h->name() + " n=" + std::to_string(n) + ": gcd>1 restriction"; });
            }
        }
    }
    // Squarefree n with a multiplicative, not completely multiplicative h.
    auto tot = MultiplicativeFunction::parse("totient");
    for (std::uint64_t n = 1; n <= 300; ++n) {
        if (!is_squarefree(n) || tot(n) == 0) continue;
        bool vanishes = false;
        for (auto p : prime_factors(n)) vanishes = vanishes || tot(p) == 0;
        if (vanishes) continue;
        ++c.instances;
        Rational p = totient_h(n, tot, TotientMethod::product);
        c.expect(p == totient_h(n, tot, TotientMethod::divisor_sum) && p == totient_h(n, tot, TotientMethod::subset_sum),
                 [&] { return "totient-as-h n=" + std::to_string(n); });
    }
}

void number_dirichlet(Ctx& c) {
    for (auto name : {"identity", "power:2", "power:-1", "liouville", "mobius", "totient"}) {
        auto h = MultiplicativeFunction::parse(name);
        for (std::uint64_t n = 1; n <= 300; ++n) {
            ++c.instances;
            Rational p = dirichlet_inverse_totient(n, h, TotientMethod::product);
            Rational d = dirichlet_inverse_totient(n, h, TotientMethod::divisor_sum);
            c.expect(p == d, [&] { return std::string(name) + " n=" + std::to_string(n) + ": product vs divisor sum"; });
            if (divisors(n).size() <= 22) {
                Rational s = dirichlet_inverse_totient(n, h, TotientMethod::subset_sum);
                c.expect(p == s, [&] { return std::string(name) + " n=" + std::to_string(n) + ": subset sum"; });
                if (!is_squarefree(n))
                    c.expect(dirichlet_subset_sum_lcm_lt_n(n, h) == p,
                             [&] { return std::string(name) + " n=" + std::to_string(n) + ": lcm<n restriction"; });
            }
        }
    }
}

void number_chains(Ctx& c) {
    auto id = MultiplicativeFunction::parse("identity");
    auto sq = MultiplicativeFunction::power(2);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        if (divisors(n).size() > 12) continue;
        for (const auto* h : {&id, &sq}) {
            ++c.instances;
            auto r = chain_identities(n, *h);
            bool cm = is_squarefree(n) || h->completely_multiplicative();
            if (cm)
                c.expect(r.totient_chain == (*h)(n) - totient_h(n, *h, TotientMethod::product),
                         [&] { return "n=" + std::to_string(n) + ": gcd chain sum"; });
            c.expect(r.dirichlet_chain == dirichlet_inverse_totient(n, *h, TotientMethod::product),
                     [&] { return "n=" + std::to_string(n) + ": lcm chain sum"; });
            for (std::size_t i = 0; i < r.divisors.size(); ++i) {
                const auto d = r.divisors[i];
                if (d < n)
                    c.expect(r.totient_inner[i] == -classical_mobius(n / d),
                             [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": gcd inner sum"; });
                if (d > 1)
                    c.expect(r.dirichlet_inner[i] == classical_mobius(d),
                             [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": lcm inner sum"; });
            }
        }
    }
}

void number_complexes(Ctx& c) {
    for (std::uint64_t n = 4; n <= 200; ++n) {
        if (is_squarefree(n) || divisors(n).size() > 22) continue;
        ++c.instances;
        auto s = build_complex(n, ComplexKind::S), t = build_complex(n, ComplexKind::T);
        c.expect(s.downward_closed() && t.downward_closed(), [&] { return "n=" + std::to_string(n) + ": not downward closed"; });
        c.expect(s.euler_characteristic() == 1 && t.euler_characteristic() == 1, [&] {
            return "n=" + std::to_string(n) + ": chi(S)=" + s.euler_characteristic().get_str() +
                   " chi(T)=" + t.euler_characteristic().get_str();
        });
        c.expect(bonferroni_check(s) && bonferroni_check(t), [&] { return "n=" + std::to_string(n) + ": Bonferroni"; });
        c.expect(complexes_isomorphic_by_star(n), [&] { return "n=" + std::to_string(n) + ": A -> A* isomorphism"; });
    }
}

void number_zeta(Ctx& c) {
    const double ref = 6.0 / (std::numbers::pi * std::numbers::pi);
    auto z = zeta_reciprocal(2, 10000);
    c.expect(std::abs(z.value - ref) < 5e-5, [&] { return "bound 10^4: error " + std::to_string(z.value - ref); });
    auto small = zeta_reciprocal(2, 13);
    c.expect(std::abs(small.value - 0.618078425071) < 1e-9, [&] { return "bound 13: " + std::to_string(small.value); });
    // Monotone in the bound: one evaluation per prime.
    double prev = 1.0;
    for (auto p : primes_up_to(10000)) {
        ++c.instances;
        double v = zeta_reciprocal(2, p).value;
        c.expect(v < prev && v > ref, [&] { return "bound " + std::to_string(p) + ": " + std::to_string(v); });
        prev = v;
    }
    for (std::uint64_t bound : {2ull, 3ull, 5ull, 7ull})
        for (long s = 1; s <= 3; ++s) {
            auto sur = zeta_subset_surrogate(bound, s);
            c.expect(sur.subset_form == sur.product,
                     [&] { return "primorial surrogate bound " + std::to_string(bound) + " s=" + std::to_string(s); });
        }
}

void number_primorial(Ctx& c) {
    c.instances = 3;
    c.expect(primorial(10) == 210 && primorial(1) == 1 && primorial(2) == 2, [] { return std::string("primorial goldens"); });
    BigInt p = 1;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        if (is_prime(n)) p *= static_cast<unsigned long>(n);
        c.expect(primorial(n) == p, [&] { return "primorial(" + std::to_string(n) + ")"; });
    }
}

// ------------------------------------------------------------- test-oracles

void oracle_goldens(Ctx& c) {
    c.instances = 12;
    c.expect(oracle::colourings(complete_graph(3), 3).value == 6, [] { return std::string("K3, x=3"); });
    c.expect(oracle::colourings(complete_graph(3), 2).value == 0, [] { return std::string("K3, x=2"); });
    c.expect(oracle::colourings(empty_graph(2), 2).value == 4, [] { return std::string("edgeless, x=2"); });
    Hypergraph one = Hypergraph::from_lists({"a", "b", "c"}, {{0, 1, 2}});
    c.expect(oracle::hyper_colourings(one, 2).value == 6, [] { return std::string("3-edge, x=2"); });
    c.expect(oracle::hyper_colourings(one, 1).value == 0, [] { return std::string("3-edge, x=1"); });
    c.expect(oracle::dominating(path_graph(2)).value == std::vector<BigInt>{0, 2, 1}, [] { return std::string("P2"); });
    c.expect(oracle::dominating(empty_graph(1)).value == std::vector<BigInt>{0, 1}, [] { return std::string("K1"); });
    c.expect(oracle::dominating(path_graph(3)).value == std::vector<BigInt>{0, 1, 3, 1}, [] { return std::string("P3"); });
    c.expect(oracle::mobius(boolean_lattice(3)).value == -1, [] { return std::string("B3"); });
    c.expect(oracle::mobius(partition_lattice(3)).value == 2, [] { return std::string("Pi3"); });
    c.expect(oracle::mobius(FiniteLattice({"0", "1", "2"}, {{0, 1}, {1, 2}})).value == 0, [] { return std::string("chain"); });
    c.expect(oracle::union_size({{1, 2}, {2, 3}, {2}}).value == 3, [] { return std::string("union"); });
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> v{
            {"algebra.group-axioms", "algebra", algebra_group_axioms},
            {"whitney-core.theorem1", "whitney-core", whitney_theorem1},
            {"whitney-core.monotone-pruning", "whitney-core", whitney_monotone},
            {"whitney-core.maxmin", "whitney-core", whitney_maxmin},
            {"whitney-core.union-size", "whitney-core", whitney_union_size},
            {"whitney-core.narushima", "whitney-core", whitney_narushima},
            {"whitney-core.serial-parallel", "whitney-core", whitney_serial_parallel},
            {"convex-geometry.theorem2", "convex-geometry", convex_theorem2},
            {"convex-geometry.euler", "convex-geometry", convex_euler},
            {"convex-geometry.hull-axioms", "convex-geometry", convex_hull_axioms},
            {"convex-geometry.hstar-bridge", "convex-geometry", convex_hstar_bridge},
            {"graph-polynomials.chromatic-goldens", "graph-polynomials", graph_chromatic_goldens},
            {"graph-polynomials.chromatic", "graph-polynomials", graph_chromatic},
            {"graph-polynomials.scp", "graph-polynomials", graph_scp},
            {"graph-polynomials.domination", "graph-polynomials", graph_domination},
            {"graph-polynomials.absorption", "graph-polynomials", graph_absorption},
            {"hypergraph-polynomials.tight", "hypergraph-polynomials", hypergraph_tight},
            {"hypergraph-polynomials.grid", "hypergraph-polynomials", hypergraph_grid},
            {"hypergraph-polynomials.condition-b", "hypergraph-polynomials", hypergraph_condition_b},
            {"hypergraph-polynomials.cancellation", "hypergraph-polynomials", hypergraph_cancellation},
            {"matroid.characteristic", "matroid", matroid_characteristic},
            {"matroid.beta", "matroid", matroid_beta},
            {"matroid.rank", "matroid", matroid_rank},
            {"lattice.mobius", "lattice", lattice_mobius},
            {"lattice.rota", "lattice", lattice_rota},
            {"lattice.blass-sagan", "lattice", lattice_blass_sagan},
            {"lattice.atoms-footnote", "lattice", lattice_atoms_footnote},
            {"lattice.dual-form", "lattice", lattice_dual_form},
            {"number-theory.gcd-expansion", "number-theory", number_gcd_expansion},
            {"number-theory.totient", "number-theory", number_totient},
            {"number-theory.dirichlet", "number-theory", number_dirichlet},
            {"number-theory.chains", "number-theory", number_chains},
            {"number-theory.complexes", "number-theory", number_complexes},
            {"number-theory.zeta", "number-theory", number_zeta},
            {"number-theory.primorial", "number-theory", number_primorial},
            {"test-oracles.goldens", "test-oracles", oracle_goldens},
        };
        std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
        return v;
    }();
    return checks;
}

CheckResult execute(const Check& check, const Options& opts) {
    CheckResult r;
    r.name = check.name;
    Ctx ctx{std::mt19937_64(opts.seed ^ fnv1a(check.name)), opts, true, {}, 0, {}};
    auto t0 = std::chrono::steady_clock::now();
    try {
        check.fn(ctx);
        r.status = ctx.ok ? Status::pass : Status::fail;
        r.witness = ctx.witness;
    } catch (const CapExceeded& e) {
        r.status = Status::skipped_cap;
        r.witness = e.what();
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.witness = std::string("exception: ") + e.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.detail = ctx.detail;
    r.instances = ctx.instances;
    return r;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_cap: return "skipped-cap";
    }
    return "fail";
}

std::vector<std::string> suites() {
    std::set<std::string> s;
    for (const auto& c : registry()) s.insert(c.suite);
    return {s.begin(), s.end()};
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& c : registry())
        if (c.suite == name) return true;
    return false;
}

bool is_check(const std::string& name) {
    for (const auto& c : registry())
        if (c.name == name) return true;
    return false;
}

std::vector<std::string> check_names(const std::string& suite) {
    std::vector<std::string> out;
    for (const auto& c : registry())
        if (suite == "all" || c.suite == suite || c.name == suite) out.push_back(c.name);
    return out;
}

CheckResult run_check(const std::string& name, const Options& opts) {
    for (const auto& c : registry())
        if (c.name == name) return execute(c, opts);
    throw SchemaError("unknown check '" + name + "'");
}

std::vector<CheckResult> run(const std::string& target, const Options& opts) {
    if (!is_suite(target) && !is_check(target)) throw SchemaError("unknown suite or check '" + target + "'");
    std::vector<const Check*> todo;
    for (const auto& c : registry())
        if (target == "all" || c.suite == target || c.name == target) todo.push_back(&c);
    std::vector<CheckResult> out(todo.size());
    const int k = static_cast<int>(todo.size());
    // Checks run concurrently; each engine call inside then runs on one thread.
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel_checks && k > 1)
    for (int i = 0; i < k; ++i) out[i] = execute(*todo[i], opts);
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

nlohmann::json to_json(const std::vector<CheckResult>& results, const std::string& target, const Options& opts) {
    nlohmann::json checks = nlohmann::json::array();
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& r : results) {
        nlohmann::json j{{"name", r.name},
                         {"status", status_name(r.status)},
                         {"instances", r.instances},
                         {"wall_ms", std::round(r.wall_ms * 1000) / 1000}};
        if (!r.witness.empty()) j["witness"] = r.witness;
        if (!r.detail.empty()) j["detail"] = r.detail;
        checks.push_back(j);
        (r.status == Status::pass ? pass : r.status == Status::fail ? fail : skipped)++;
    }
    return {{"suite", target},
            {"seed", opts.seed},
            {"inject_mutant", opts.inject_mutant},
            {"checks", checks},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped-cap", skipped}}}};
}

}  // namespace bc::verify
