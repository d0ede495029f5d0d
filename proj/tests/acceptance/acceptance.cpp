// One line per acceptance criterion; exit status 0 iff all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "bc/verify.hpp"

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> checks;
    double budget_ms;  // 0 = no runtime budget
};

}  // namespace

int main(int argc, char** argv) {
    bc::verify::Options opts;
    if (argc > 1) opts.seed = std::stoull(argv[1]);
    opts.parallel_checks = false;

    const std::vector<Criterion> criteria{
        {1, "pruned = full equivalence (>=500 instances, full and 3 sub-families)", {"whitney-core.theorem1"}, 60000},
        {2, "chromatic: full = broken-circuit, coefficient law, oracle x=1..3, K3/K4",
         {"graph-polynomials.chromatic", "graph-polynomials.chromatic-goldens"}, 0},
        {3, "hypergraph: restricted = full on tight-cycle and grid families, P(H,2) oracle",
         {"hypergraph-polynomials.tight", "hypergraph-polynomials.grid"}, 0},
        {4, "subgraph component polynomial: direct = eq5 = eq6, Q(K3,-1,y) = 1-y", {"graph-polynomials.scp"}, 0},
        {5, "domination: direct = bnh = bnh_pruned, P3 golden", {"graph-polynomials.domination"}, 0},
        {6, "matroid: chi full = Heron, beta by three methods, U_2,3 goldens",
         {"matroid.characteristic", "matroid.beta"}, 0},
        {7, "Blass-Sagan: restricted sum = oracle mu on every crosscut, order and sub-family; mu(Pi4) = -6",
         {"lattice.blass-sagan", "lattice.mobius"}, 0},
        {8, "arithmetic: gcd/lcm expansions, totient and Dirichlet inverse, complexes and Bonferroni",
         {"number-theory.gcd-expansion", "number-theory.totient", "number-theory.dirichlet", "number-theory.complexes"}, 0},
        {9, "zeta: |P(10^4) - 6/pi^2| < 5e-5, monotone in the bound, < 5 s", {"number-theory.zeta"}, 5000},
        {10, "convex geometry: full = free, Euler characteristic 1, h* bridge",
         {"convex-geometry.theorem2", "convex-geometry.euler", "convex-geometry.hstar-bridge"}, 0},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        double ms = 0;
        std::uint64_t instances = 0;
        std::string why;
        for (const auto& name : c.checks) {
            auto r = bc::verify::run_check(name, opts);
            ms += r.wall_ms;
            instances += r.instances;
            if (r.status != bc::verify::Status::pass && ok) {
                ok = false;
                why = name + ": " + bc::verify::status_name(r.status) + " " + r.witness;
            }
        }
        if (ok && c.budget_ms > 0 && ms >= c.budget_ms) {
            ok = false;
            why = "runtime " + std::to_string(ms) + " ms exceeds budget";
        }
        failed += !ok;
        std::printf("%s  criterion %2d  %-100s  instances=%llu  %.0f ms%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), static_cast<unsigned long long>(instances), ms, ok ? "" : "  ", why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
