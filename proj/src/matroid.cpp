#include "bc/matroid.hpp"

#include <algorithm>
#include <set>

namespace bc {

Matroid::Matroid(OrderedGroundSet ground, std::vector<Mask> circuits)
    : ground_(std::move(ground)), circuits_(std::move(circuits)) {
    const int n = size();
    const Mask all = full_mask(n);
    std::sort(circuits_.begin(), circuits_.end());
    circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
    for (Mask c : circuits_) {
        if (c == 0) throw PreconditionViolation("circuits must be non-empty");
        if (!is_subset(c, all)) throw SchemaError("circuit outside the ground set");
    }
    for (Mask a : circuits_)
        for (Mask b : circuits_)
            if (a != b && is_subset(a, b)) throw PreconditionViolation("circuits are not incomparable");
    if (n <= kMatroidValidateCap) {
        for (std::size_t i = 0; i < circuits_.size(); ++i)
            for (std::size_t j = i + 1; j < circuits_.size(); ++j)
                for (int e : elements_of(circuits_[i] & circuits_[j])) {
                    Mask u = (circuits_[i] | circuits_[j]) & ~bit(e);
                    bool found = std::any_of(circuits_.begin(), circuits_.end(),
                                             [u](Mask c) { return is_subset(c, u); });
                    if (!found) throw PreconditionViolation("circuit elimination fails");
                }
        validated_ = true;
    }
    build_table();
}

void Matroid::build_table() {
    const int n = size();
    if (n > kRankTableCap) return;
    // rank(A) = rank(A \ t) + [no circuit C with t ∈ C ⊆ A], t = max A
    std::vector<std::vector<Mask>> through(n);
    for (Mask c : circuits_)
        for (int e : elements_of(c)) through[e].push_back(c);
    const std::size_t total = std::size_t{1} << n;
    table_.assign(total, 0);
    for (std::size_t a = 1; a < total; ++a) {
        const Mask m = static_cast<Mask>(a);
        const int t = max_element(m);
        bool dependent = false;
        for (Mask c : through[t])
            if (is_subset(c, m)) {
                dependent = true;
                break;
            }
        table_[a] = static_cast<std::uint8_t>(table_[m & ~bit(t)] + (dependent ? 0 : 1));
    }
}

bool Matroid::independent(Mask a) const {
    return std::none_of(circuits_.begin(), circuits_.end(), [a](Mask c) { return is_subset(c, a); });
}

int Matroid::rank(Mask a) const {
    Mask basis = 0;
    for (int e : elements_of(a))
        if (independent(basis | bit(e))) basis |= bit(e);
    return popcount(basis);
}

Matroid graphic_matroid(const Graph& g) {
    std::vector<std::string> labels;
    for (auto [u, v] : g.edges()) labels.push_back(g.vertices()[u] + "-" + g.vertices()[v]);
    return Matroid(OrderedGroundSet(std::move(labels), kMaxGroundSize), cycles_edge_sets(g));
}

Matroid uniform_matroid(int r, int n) {
    if (r < 0 || r > n) throw PreconditionViolation("uniform matroid needs 0 <= r <= n");
    require_cap(n, kDefaultEnumerationCap, "uniform matroid");
    std::vector<Mask> circuits;
    if (r < n)
        for (Mask c = 0; c < bit(n); ++c)
            if (popcount(c) == r + 1) circuits.push_back(c);
    return Matroid(OrderedGroundSet::indexed(n), std::move(circuits));
}

Matroid free_matroid(int n) { return uniform_matroid(n, n); }

CharacteristicResult characteristic_polynomial(const Matroid& m, CharMethod method, Exec exec) {
    const int n = m.size();
    const int rE = m.full_rank();
    CharacteristicResult r;
    if (method == CharMethod::full) {
        r.polynomial = sum_full<IntPolynomial>(
            n,
            [&m, rE](Mask a) {
                return IntTerm{(popcount(a) % 2) ? -1L : 1L, static_cast<unsigned>(rE - m.rank_fast(a))};
            },
            exec);
        return r;
    }
    auto broken = broken_sets(derive_broken_circuits(m.circuits(), n));
    // Broken-circuit-free sets are independent; asserted on every visited set.
    for_each_avoiding(n, broken, [&m](Mask a) {
        if (m.rank_fast(a) != popcount(a))
            throw PreconditionViolation("broken-circuit-free set is dependent; circuit family is not a matroid");
    });
    r.broken_free_counts = enumerate_avoiding(n, broken, exec);
    std::vector<BigInt> coeffs(rE + 1, BigInt(0));
    for (int k = 0; k < static_cast<int>(r.broken_free_counts.size()); ++k) {
        if (r.broken_free_counts[k] == 0) continue;
        BigInt b(static_cast<unsigned long>(r.broken_free_counts[k]));
        coeffs.at(rE - k) += (k % 2) ? BigInt(-b) : b;
    }
    r.polynomial = IntPolynomial(std::move(coeffs));
    return r;
}

BigInt beta_invariant(const Matroid& m, BetaMethod method, Exec exec) {
    const int n = m.size();
    const int rE = m.full_rank();
    const BigInt sign = (rE % 2) ? BigInt(-1) : BigInt(1);
    switch (method) {
        case BetaMethod::full: {
            BigInt s = sum_full<BigInt>(
                n, [&m](Mask a) { return BigInt((popcount(a) % 2) ? -m.rank_fast(a) : m.rank_fast(a)); }, exec);
            return sign * s;
        }
        case BetaMethod::broken_circuit: {
            auto b = characteristic_polynomial(m, CharMethod::heron, exec).broken_free_counts;
            BigInt s = 0;
            for (int k = 0; k < static_cast<int>(b.size()); ++k) {
                BigInt term = BigInt(k) * BigInt(static_cast<unsigned long>(b[k]));
                s += (k % 2) ? BigInt(-term) : term;
            }
            return sign * s;
        }
        case BetaMethod::derivative: {
            if (n == 0) return BigInt(0);
            BigInt d = characteristic_polynomial(m, CharMethod::full, exec).polynomial.derivative_eval(BigInt(1));
            return BigInt(-sign * d);
        }
    }
    throw PreconditionViolation("unknown beta method");
}

}  // namespace bc
