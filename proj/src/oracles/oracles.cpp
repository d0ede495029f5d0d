#include "bc/oracles/oracles.hpp"

#include <algorithm>
#include <set>

namespace bc::oracle {

namespace {

std::uint64_t checked_power(unsigned x, int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= x;
        if (total > kColouringCap) throw CapExceeded("x^|V| exceeds the oracle cap");
    }
    return total;
}

// Decodes colouring number `code` into digits base x.
std::vector<unsigned> digits(std::uint64_t code, unsigned x, int n) {
    std::vector<unsigned> col(n);
    for (int i = 0; i < n; ++i) {
        col[i] = static_cast<unsigned>(code % x);
        code /= x;
    }
    return col;
}

}  // namespace

OracleResult<BigInt> colourings(const Graph& g, unsigned x) {
    const int n = g.vertex_count();
    OracleResult<BigInt> r{0, "oracle:colourings-brute-force", 1};
    if (x == 0) {
        r.value = (n == 0) ? 1 : 0;
        return r;
    }
    const std::uint64_t total = checked_power(x, n);
    long count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        auto col = digits(code, x, n);
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (col[u] == col[v]) {
                proper = false;
                break;
            }
        if (proper) ++count;
    }
    r.value = count;
    return r;
}

OracleResult<BigInt> hyper_colourings(const Hypergraph& h, unsigned x) {
    const int n = h.vertex_count();
    OracleResult<BigInt> r{0, "oracle:hyper-colourings-brute-force", 1};
    if (x == 0) {
        r.value = (n == 0) ? 1 : 0;
        return r;
    }
    const std::uint64_t total = checked_power(x, n);
    long count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        auto col = digits(code, x, n);
        bool ok = true;
        for (Mask e : h.edges()) {
            std::set<unsigned> seen;
            for (int v = 0; v < n; ++v)
                if ((e >> v) & 1u) seen.insert(col[v]);
            if (seen.size() == 1) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    r.value = count;
    return r;
}

OracleResult<std::vector<BigInt>> dominating(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw CapExceeded("dominating-set oracle limited to 20 vertices");
    OracleResult<std::vector<BigInt>> r{std::vector<BigInt>(n + 1, BigInt(0)), "oracle:dominating-brute-force", 1};
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        std::vector<char> covered(n, 0);
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (!((a >> v) & 1u)) continue;
            ++size;
            covered[v] = 1;
            for (auto [p, q] : g.edges()) {
                if (p == v) covered[q] = 1;
                if (q == v) covered[p] = 1;
            }
        }
        if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) r.value[size] += 1;
    }
    return r;
}

OracleResult<BigInt> mobius(const FiniteLattice& l) {
    OracleResult<BigInt> r{0, "oracle:hall-chain-count", 1};
    const int n = l.size();
    if (n == 1) {
        r.value = 1;
        return r;
    }
    long total = 0;
    // Walk every strict chain from the bottom; count it when it reaches the top.
    auto rec = [&](auto&& self, int x, int steps) -> void {
        if (x == l.top()) {
            total += (steps % 2) ? -1 : 1;
            return;
        }
        for (int y = 0; y < n; ++y)
            if (l.less(x, y)) self(self, y, steps + 1);
    };
    rec(rec, l.bottom(), 0);
    r.value = total;
    return r;
}

OracleResult<BigInt> union_size(const std::vector<std::vector<int>>& sets) {
    std::set<int> all;
    for (const auto& s : sets) all.insert(s.begin(), s.end());
    return {BigInt(static_cast<unsigned long>(all.size())), "oracle:direct-union", 1};
}

}  // namespace bc::oracle
