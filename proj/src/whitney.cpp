#include "bc/whitney.hpp"

#include <set>
#include <unordered_map>

namespace bc {

OrderedGroundSet::OrderedGroundSet(std::vector<std::string> labels, int cap) : labels_(std::move(labels)) {
    require_cap(size(), cap, "ground set");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw SchemaError("duplicate element label: " + l);
    }
}

OrderedGroundSet OrderedGroundSet::indexed(int n, int cap) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return OrderedGroundSet(std::move(labels), cap);
}

int OrderedGroundSet::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw SchemaError("unknown element: " + label);
}

Mask OrderedGroundSet::subset(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
}

std::vector<std::string> OrderedGroundSet::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : elements_of(m)) out.push_back(labels_.at(i));
    return out;
}

OrderedGroundSet OrderedGroundSet::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != size()) throw SchemaError("permutation has the wrong length");
    std::vector<char> used(perm.size(), 0);
    std::vector<std::string> out;
    for (int p : perm) {
        if (p < 0 || p >= size() || used[p]) throw SchemaError("not a permutation");
        used[p] = 1;
        out.push_back(labels_[p]);
    }
    return OrderedGroundSet(std::move(out), kMaxGroundSize);
}

std::vector<BrokenCircuit> derive_broken_circuits(const std::vector<Mask>& circuits, int n) {
    const Mask all = full_mask(n);
    std::vector<BrokenCircuit> out;
    std::unordered_map<Mask, std::size_t> seen;
    for (Mask c : circuits) {
        if (c == 0) throw PreconditionViolation("empty circuit");
        if (!is_subset(c, all)) throw PreconditionViolation("circuit not a subset of the ground set");
        const Mask b = c & ~bit(max_element(c));
        if (seen.emplace(b, out.size()).second) out.push_back({b, c});
    }
    return out;
}

std::vector<Mask> broken_sets(const std::vector<BrokenCircuit>& bcs) {
    std::vector<Mask> out;
    out.reserve(bcs.size());
    for (const auto& b : bcs) out.push_back(b.broken);
    return out;
}

bool is_broken_subfamily(const std::vector<Mask>& broken, const std::vector<Mask>& circuits) {
    std::set<Mask> derived;
    for (Mask c : circuits)
        if (c != 0) derived.insert(c & ~bit(max_element(c)));
    for (Mask b : broken)
        if (!derived.count(b)) return false;
    return true;
}

namespace {

struct CardinalityCounts {
    std::vector<std::uint64_t> counts;

    CardinalityCounts& operator+=(const CardinalityCounts& o) {
        if (o.counts.size() > counts.size()) counts.resize(o.counts.size());
        for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
        return *this;
    }
};

}  // namespace

std::vector<std::uint64_t> enumerate_avoiding(int n, const std::vector<Mask>& broken, Exec exec, int cap) {
    require_cap(n, cap, "enumerate_avoiding");
    PruneIndex index(n, broken);
    CardinalityCounts total;
    auto visit = [n](CardinalityCounts& acc, Mask a) {
        if (acc.counts.empty()) acc.counts.assign(n + 1, 0);
        ++acc.counts[popcount(a)];
    };
    if (exec == Exec::serial) {
        serial::for_each_avoiding(index, [&](Mask a) { visit(total, a); });
    } else {
        total = parallel::reduce_avoiding<CardinalityCounts>(index, visit);
    }
    total.counts.resize(n + 1, 0);
    return total.counts;
}

FinitePoset::FinitePoset(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    if (static_cast<int>(leq_.size()) != n * n) throw SchemaError("relation matrix has the wrong size");
    for (int a = 0; a < n; ++a) {
        if (!this->leq(a, a)) throw PreconditionViolation("relation is not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && this->leq(a, b) && this->leq(b, a))
                throw PreconditionViolation("relation is not antisymmetric");
            for (int c = 0; c < n; ++c)
                if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c))
                    throw PreconditionViolation("relation is not transitive");
        }
    }
}

FinitePoset FinitePoset::from_less_pairs(int n, const std::vector<std::pair<int, int>>& less) {
    std::vector<char> r(n * n, 0);
    for (int i = 0; i < n; ++i) r[i * n + i] = 1;
    for (auto [a, b] : less) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw SchemaError("relation pair out of range");
        r[a * n + b] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (r[k * n + j]) r[i * n + j] = 1;
    return FinitePoset(n, std::move(r));
}

FinitePoset FinitePoset::chain(int n) {
    std::vector<std::pair<int, int>> less;
    for (int i = 0; i + 1 < n; ++i) less.emplace_back(i, i + 1);
    return from_less_pairs(n, less);
}

FinitePoset FinitePoset::antichain(int n) { return from_less_pairs(n, {}); }

Mask FinitePoset::maximal() const {
    require_cap(n_, kMaxGroundSize, "poset maxima");
    Mask m = 0;
    for (int a = 0; a < n_; ++a) {
        bool is_max = true;
        for (int b = 0; b < n_ && is_max; ++b)
            if (less(a, b)) is_max = false;
        if (is_max) m |= bit(a);
    }
    return m;
}

std::vector<int> FinitePoset::linear_extension() const {
    std::vector<int> out;
    std::vector<char> placed(n_, 0);
    for (int step = 0; step < n_; ++step) {
        for (int a = 0; a < n_; ++a) {
            if (placed[a]) continue;
            bool ready = true;
            for (int b = 0; b < n_ && ready; ++b)
                if (!placed[b] && less(b, a)) ready = false;
            if (ready) {
                placed[a] = 1;
                out.push_back(a);
                break;
            }
        }
    }
    return out;
}

std::optional<int> FinitePoset::join(int a, int b) const {
    std::optional<int> best;
    for (int c = 0; c < n_; ++c) {
        if (!leq(a, c) || !leq(b, c)) continue;
        if (!best || leq(c, *best)) {
            best = c;
        }
    }
    if (!best) return std::nullopt;
    for (int c = 0; c < n_; ++c)
        if (leq(a, c) && leq(b, c) && !leq(*best, c)) return std::nullopt;
    return best;
}

bool FinitePoset::is_upper_semilattice() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!join(a, b)) return false;
    return true;
}

bool FinitePoset::is_chain(Mask m) const {
    auto e = elements_of(m);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!comparable(e[i], e[j])) return false;
    return true;
}

FinitePoset FinitePoset::dual() const {
    std::vector<char> r(n_ * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) r[a * n_ + b] = leq_[b * n_ + a];
    return FinitePoset(n_, std::move(r));
}

IndexedSetFamily::IndexedSetFamily(std::vector<std::vector<int>> sets) : sets_(std::move(sets)) {
    std::vector<int> universe;
    for (auto& s : sets_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        universe.insert(universe.end(), s.begin(), s.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    words_ = (universe.size() + 63) / 64;
    for (const auto& s : sets_) {
        std::vector<std::uint64_t> w(words_, 0);
        for (int atom : s) {
            auto idx = std::lower_bound(universe.begin(), universe.end(), atom) - universe.begin();
            w[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
        bits_.push_back(std::move(w));
    }
}

std::size_t IndexedSetFamily::intersection_size(Mask a) const {
    auto members = elements_of(a);
    if (members.empty()) throw PreconditionViolation("intersection over the empty index set");
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t acc = ~std::uint64_t{0};
        for (int s : members) acc &= bits_[s][w];
        total += std::popcount(acc);
    }
    return total;
}

bool IndexedSetFamily::intersection_within(Mask a, int target) const {
    auto members = elements_of(a);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t acc = ~std::uint64_t{0};
        for (int s : members) acc &= bits_[s][w];
        if (acc & ~bits_[target][w]) return false;
    }
    return true;
}

std::size_t IndexedSetFamily::union_size() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t acc = 0;
        for (const auto& b : bits_) acc |= b[w];
        total += std::popcount(acc);
    }
    return total;
}

namespace {

auto signed_intersection(const IndexedSetFamily& family) {
    return [&family](Mask a) -> BigInt {
        if (a == 0) return BigInt(0);
        BigInt v(static_cast<unsigned long>(family.intersection_size(a)));
        return (popcount(a) % 2 == 1) ? v : BigInt(-v);
    };
}

}  // namespace

UnionSizeResult restricted_union_size(const IndexedSetFamily& family, const std::vector<WitnessedBroken>& broken,
                                      Exec exec) {
    const int n = family.size();
    require_cap(n, kDefaultEnumerationCap, "restricted_union_size");
    std::vector<Mask> sets;
    for (const auto& b : broken) {
        if (b.broken == 0) throw PreconditionViolation("broken set must be non-empty");
        if (b.witness < 0 || b.witness >= n || b.witness <= max_element(b.broken))
            throw PreconditionViolation("witness c(B) must exceed max B");
        if (!is_subset(b.broken, full_mask(n))) throw PreconditionViolation("broken set outside the index set");
        if (!family.intersection_within(b.broken, b.witness))
            throw PreconditionViolation("intersection over B is not contained in M_c(B)");
        sets.push_back(b.broken);
    }
    UnionSizeResult r;
    r.restricted = sum_pruned<BigInt>(n, sets, signed_intersection(family), exec);
    r.direct = static_cast<unsigned long>(family.union_size());
    return r;
}

UnionSizeResult narushima_union(const FinitePoset& p, const IndexedSetFamily& family, Exec exec) {
    if (p.size() != family.size()) throw SchemaError("poset and family sizes differ");
    if (!p.is_upper_semilattice()) throw PreconditionViolation("poset is not an upper semilattice");
    for (int s = 0; s < p.size(); ++s)
        for (int t = s + 1; t < p.size(); ++t)
            if (!family.intersection_within(bit(s) | bit(t), *p.join(s, t)))
                throw PreconditionViolation("M_s ∩ M_t is not contained in M_{s∨t}");
    UnionSizeResult r;
    // The prerequisite makes the condition hold by construction; skip the exhaustive check.
    r.restricted = sum_over_chains<BigInt>(p, signed_intersection(family), false, exec).restricted;
    r.direct = static_cast<unsigned long>(family.union_size());
    return r;
}

}  // namespace bc
