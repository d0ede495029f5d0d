#include "bc/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bc/number.hpp"

namespace bc {

FiniteLattice::FiniteLattice(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw PreconditionViolation("lattice must be non-empty");
    require_cap(n, kLatticeCap, "lattice elements");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n) throw SchemaError("duplicate lattice element label");
    }
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw SchemaError("cover pair out of range");
        if (a == b) throw PreconditionViolation("cover relation has a loop");
    }
    FinitePoset p = FinitePoset::from_less_pairs(n, covers);
    for (auto [a, b] : covers)
        if (p.leq(b, a)) throw PreconditionViolation("cover relation contains a cycle");

    // Relabel along a linear extension: bottom first, top last.
    std::vector<int> ext = p.linear_extension();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ext[i]] = i;
    for (int x = 0; x < n; ++x) {
        if (!p.leq(ext[0], x)) throw PreconditionViolation("no unique minimum: " + labels[ext[0]] + " vs " + labels[x]);
        if (!p.leq(x, ext[n - 1]))
            throw PreconditionViolation("no unique maximum: " + labels[x] + " vs " + labels[ext[n - 1]]);
    }
    for (int i = 0; i < n; ++i) labels_.push_back(labels[ext[i]]);
    leq_.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq_[a * n + b] = p.leq(ext[a], ext[b]) ? 1 : 0;

    cover_.assign(n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int z = 0; z < n && direct; ++z)
                if (less(a, z) && less(z, b)) direct = false;
            cover_[a * n + b] = direct ? 1 : 0;
        }

    meet_.assign(n * n, -1);
    join_.assign(n * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int lo = -1, hi = -1;
            for (int z = 0; z < n; ++z) {
                if (leq(z, a) && leq(z, b) && (lo < 0 || leq(lo, z))) lo = z;
                if (leq(a, z) && leq(b, z) && (hi < 0 || leq(z, hi))) hi = z;
            }
            for (int z = 0; z < n; ++z) {
                if (leq(z, a) && leq(z, b) && !leq(z, lo))
                    throw PreconditionViolation("meet of " + labels_[a] + " and " + labels_[b] + " is not unique");
                if (leq(a, z) && leq(b, z) && !leq(hi, z))
                    throw PreconditionViolation("join of " + labels_[a] + " and " + labels_[b] + " is not unique");
            }
            meet_[a * n + b] = lo;
            join_[a * n + b] = hi;
        }
}

int FiniteLattice::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw SchemaError("unknown lattice element: " + label);
}

int FiniteLattice::meet_of(const std::vector<int>& elements, Mask a) const {
    int m = top();
    for (int i : elements_of(a)) m = meet(m, elements[i]);
    return m;
}

int FiniteLattice::join_of(const std::vector<int>& elements, Mask a) const {
    int j = bottom();
    for (int i : elements_of(a)) j = join(j, elements[i]);
    return j;
}

std::vector<int> FiniteLattice::atoms() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (covers(bottom(), x)) out.push_back(x);
    return out;
}

std::vector<int> FiniteLattice::coatoms() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (covers(x, top())) out.push_back(x);
    return out;
}

std::vector<BigInt> mobius_recursive(const FiniteLattice& l) {
    const int n = l.size();
    std::vector<BigInt> mu(n, BigInt(0));
    // Indices follow a linear extension, so every y < x is already computed.
    for (int x = 0; x < n; ++x) {
        if (x == l.bottom()) {
            mu[x] = 1;
            continue;
        }
        BigInt s = 0;
        for (int y = 0; y < x; ++y)
            if (l.less(y, x)) s += mu[y];
        mu[x] = -s;
    }
    return mu;
}

bool is_crosscut(const FiniteLattice& l, const std::vector<int>& c) {
    if (!l.nontrivial()) throw PreconditionViolation("lattice is trivial: L \\ {0,1} is empty");
    const int n = l.size();
    std::vector<char> in_c(n, 0);
    for (int x : c) {
        if (x < 0 || x >= n) throw SchemaError("crosscut element out of range");
        if (x == l.bottom() || x == l.top()) return false;
        in_c[x] = 1;
    }
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j && l.leq(c[i], c[j])) return false;
    // Every maximal chain meets C iff the top is unreachable from the bottom by
    // cover steps through elements outside C.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{l.bottom()};
    seen[l.bottom()] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == l.top()) return false;
        for (int y = 0; y < n; ++y)
            if (!seen[y] && !in_c[y] && l.covers(x, y)) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return true;
}

std::vector<std::vector<int>> enumerate_crosscuts(const FiniteLattice& l, std::size_t limit) {
    std::vector<int> interior;
    for (int x = 1; x + 1 < l.size(); ++x) interior.push_back(x);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (out.size() >= limit) return;
        if (i == interior.size()) {
            if (!current.empty() && is_crosscut(l, current)) out.push_back(current);
            return;
        }
        self(self, i + 1);
        int x = interior[i];
        for (int y : current)
            if (l.leq(x, y) || l.leq(y, x)) return;
        current.push_back(x);
        self(self, i + 1);
        current.pop_back();
    };
    rec(rec, 0);
    return out;
}

namespace {

auto crosscut_term(const FiniteLattice& l, const std::vector<int>& c, bool require_meet) {
    return [&l, &c, require_meet](Mask a) -> BigInt {
        if (require_meet && l.meet_of(c, a) != l.bottom()) return BigInt(0);
        if (l.join_of(c, a) != l.top()) return BigInt(0);
        return BigInt((popcount(a) % 2) ? -1 : 1);
    };
}

void check_crosscut(const FiniteLattice& l, const std::vector<int>& c) {
    require_cap(static_cast<int>(c.size()), kCrosscutCap, "crosscut size");
    if (!is_crosscut(l, c)) throw PreconditionViolation("given set is not a crosscut");
}

}  // namespace

BigInt rota_crosscut(const FiniteLattice& l, const std::vector<int>& c, Exec exec) {
    check_crosscut(l, c);
    return sum_full<BigInt>(static_cast<int>(c.size()), crosscut_term(l, c, true), exec, kCrosscutCap);
}

BlassSaganFamily blass_sagan_B(const FiniteLattice& l, const Crosscut& cc, bool atoms_mode) {
    const auto& c = cc.elements;
    const int k = static_cast<int>(c.size());
    check_crosscut(l, c);
    if (cc.order.size() != k) throw SchemaError("crosscut order has the wrong size");
    if (atoms_mode) {
        auto atoms = l.atoms();
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != atoms) throw PreconditionViolation("atoms mode requires C to be the set of atoms");
    }

    BlassSaganFamily fam;
    fam.extension = cc.order.linear_extension();
    std::vector<int> rank(k);
    for (int i = 0; i < k; ++i) rank[fam.extension[i]] = i;

    for (Mask b = 1; b < bit(k); ++b) {
        const int lo = l.meet_of(c, b);
        const int hi = l.join_of(c, b);
        int best = -1;
        bool all = true;
        for (int bi : elements_of(b)) {
            int local = -1;
            for (int ci = 0; ci < k; ++ci) {
                if (!cc.order.less(ci, bi)) continue;
                if (!atoms_mode && !l.less(lo, c[ci])) continue;
                if (!l.less(c[ci], hi)) continue;
                if (local < 0 || rank[ci] < rank[local]) local = ci;
            }
            if (local < 0) {
                all = false;
                break;
            }
            if (best < 0 || rank[local] < rank[best]) best = local;
        }
        if (all) {
            fam.broken.push_back(b);
            fam.witness.push_back(best);
        }
    }
    return fam;
}

bool blass_sagan_dual_form_consistent(const BlassSaganFamily& family, int k) {
    // Reverse the extension: position of ci is k-1-rank(ci), so min becomes max.
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[family.extension[i]] = k - 1 - i;
    std::vector<Mask> circuits;
    for (std::size_t i = 0; i < family.broken.size(); ++i) {
        if (contains(family.broken[i], family.witness[i])) return false;
        circuits.push_back(permute_mask(family.broken[i] | bit(family.witness[i]), pos));
    }
    std::set<Mask> expect;
    for (Mask b : family.broken) expect.insert(permute_mask(b, pos));
    std::set<Mask> got;
    for (Mask b : broken_sets(derive_broken_circuits(circuits, k))) got.insert(b);
    return got == expect;
}

BlassSaganResult blass_sagan_mu(const FiniteLattice& l, const Crosscut& cc, const std::vector<Mask>* subfamily,
                                bool atoms_mode, Exec exec) {
    const auto& c = cc.elements;
    const int k = static_cast<int>(c.size());
    BlassSaganFamily fam = blass_sagan_B(l, cc, atoms_mode);
    std::vector<Mask> use = fam.broken;
    if (subfamily) {
        std::set<Mask> all(fam.broken.begin(), fam.broken.end());
        for (Mask b : *subfamily)
            if (!all.count(b)) throw PreconditionViolation("sub-family is not contained in the Blass-Sagan family");
        use = *subfamily;
    }
    BlassSaganResult r;
    r.restricted = sum_pruned<BigInt>(k, use, crosscut_term(l, c, !atoms_mode), exec, kCrosscutCap);
    r.crosscut = rota_crosscut(l, c, exec);
    r.mu = mobius_of_lattice(l);
    return r;
}

FiniteLattice boolean_lattice(int n) {
    require_cap(n, 6, "boolean lattice rank");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (Mask a = 0; a < bit(n); ++a) {
        std::string s = "{";
        for (int i : elements_of(a)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
        labels.push_back(s + "}");
        for (int e = 0; e < n; ++e)
            if (!contains(a, e)) covers.emplace_back(static_cast<int>(a), static_cast<int>(a | bit(e)));
    }
    return FiniteLattice(std::move(labels), covers);
}

FiniteLattice divisor_lattice(std::uint64_t n) {
    auto divs = divisors(n);
    require_cap(static_cast<int>(divs.size()), 64, "divisor lattice d(n)");
    std::vector<std::string> labels;
    for (auto d : divs) labels.push_back(std::to_string(d));
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = 0; j < divs.size(); ++j)
            if (divs[j] % divs[i] == 0 && is_prime(divs[j] / divs[i]))
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return FiniteLattice(std::move(labels), covers);
}

FiniteLattice partition_lattice(int n) {
    if (n < 1) throw PreconditionViolation("partition lattice needs n >= 1");
    require_cap(n, 5, "partition lattice n");
    // Restricted growth strings; blocks as vertex masks.
    std::vector<std::vector<Mask>> parts;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            std::vector<Mask> p(blocks, 0);
            for (int v = 0; v < n; ++v) p[rgs[v]] |= bit(v);
            std::sort(p.begin(), p.end());
            parts.push_back(p);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    std::map<std::vector<Mask>, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        index[parts[i]] = static_cast<int>(i);
        std::string s;
        for (Mask b : parts[i]) {
            if (!s.empty()) s += "|";
            for (int v : elements_of(b)) s += std::to_string(v + 1);
        }
        labels.push_back(s);
    }
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                std::vector<Mask> q;
                for (std::size_t c = 0; c < p.size(); ++c)
                    if (c != a && c != b) q.push_back(p[c]);
                q.push_back(p[a] | p[b]);
                std::sort(q.begin(), q.end());
                covers.emplace_back(static_cast<int>(i), index.at(q));
            }
    }
    return FiniteLattice(std::move(labels), covers);
}

}  // namespace bc
