#include "bc/number.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <set>

namespace bc {

namespace {

std::mutex factor_mutex;
std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, int>>> factor_cache;

void check_range(std::uint64_t n) {
    if (n < 1) throw PreconditionViolation("n must be >= 1");
    if (n > kNumberCap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(kNumberCap));
}

// Signed counts per divisor index; lets 2^d subset sums stay in machine integers.
struct TallyTerm {
    int index = -1;  // -1: contributes nothing
    long sign = 0;
};

struct Tally {
    std::vector<long> c;

    Tally& operator+=(const TallyTerm& t) {
        if (t.index < 0) return *this;
        if (static_cast<int>(c.size()) <= t.index) c.resize(t.index + 1, 0);
        c[t.index] += t.sign;
        return *this;
    }
    Tally& operator+=(const Tally& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend bool operator==(const Tally& a, const Tally& b) {
        const std::size_t n = std::max(a.c.size(), b.c.size());
        for (std::size_t i = 0; i < n; ++i)
            if ((i < a.c.size() ? a.c[i] : 0) != (i < b.c.size() ? b.c[i] : 0)) return false;
        return true;
    }
    long at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
};

long sign_of(Mask a) { return (popcount(a) % 2) ? -1 : 1; }

std::uint64_t gcd_of(const std::vector<std::uint64_t>& d, Mask a) {
    std::uint64_t g = 0;  // gcd(∅) = 0
    for (int i : elements_of(a)) g = gcd_u(g, d[i]);
    return g;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& d, Mask a) {
    std::uint64_t l = 1;  // lcm(∅) = 1
    for (int i : elements_of(a)) l = lcm_u(l, d[i]);
    return l;
}

FinitePoset divisibility(const std::vector<std::uint64_t>& d) {
    std::vector<std::pair<int, int>> less;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (i != j && d[j] % d[i] == 0) less.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return FinitePoset::from_less_pairs(static_cast<int>(d.size()), less);
}

std::vector<std::uint64_t> without(std::vector<std::uint64_t> d, std::initializer_list<std::uint64_t> drop) {
    for (auto x : drop) d.erase(std::remove(d.begin(), d.end(), x), d.end());
    return d;
}

// Σ over subsets of a small list with a predicate on the subset.
template <class Pred>
BigInt signed_count(const std::vector<std::uint64_t>& items, Pred&& pred) {
    require_cap(static_cast<int>(items.size()), kDefaultEnumerationCap, "signed subset count");
    long total = 0;
    for (Mask a = 0; a < bit(static_cast<int>(items.size())); ++a)
        if (pred(a)) total += sign_of(a);
    return BigInt(total);
}

Rational combine(const Tally& t, const std::vector<std::uint64_t>& d, const MultiplicativeFunction& h) {
    Rational s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (t.at(i) != 0) s += Rational(t.at(i)) * h(d[i]);
    return s;
}

int index_in(const std::vector<std::uint64_t>& d, std::uint64_t x) {
    auto it = std::lower_bound(d.begin(), d.end(), x);
    return (it != d.end() && *it == x) ? static_cast<int>(it - d.begin()) : -1;
}

void require_totient_preconditions(std::uint64_t n, const MultiplicativeFunction& h) {
    if (!is_squarefree(n) && !h.completely_multiplicative())
        throw PreconditionViolation("phi_h(n) needs n squarefree or h completely multiplicative (h = " + h.name() + ")");
    for (auto p : prime_factors(n))
        if (h(p) == 0) throw PreconditionViolation("h vanishes at the prime " + std::to_string(p));
}

}  // namespace

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / gcd_u(a, b) * b; }

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    check_range(n);
    {
        std::lock_guard<std::mutex> lock(factor_mutex);
        auto it = factor_cache.find(n);
        if (it != factor_cache.end()) return it->second;
    }
    std::vector<std::pair<std::uint64_t, int>> f;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (m > 1) f.emplace_back(m, 1);
    std::lock_guard<std::mutex> lock(factor_mutex);
    factor_cache.emplace(n, f);
    return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t k = d.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

bool is_squarefree(std::uint64_t n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    if (bound > kNumberCap) throw CapExceeded("prime bound exceeds the cap");
    std::vector<char> composite(bound + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return out;
}

int classical_mobius(std::uint64_t n) {
    auto f = factorize(n);
    for (auto [p, e] : f)
        if (e > 1) return 0;
    return (f.size() % 2) ? -1 : 1;
}

GcdExpansion gcd_expansion(std::uint64_t n, GcdVariant variant, bool modified_domain, Exec exec) {
    check_range(n);
    const bool eq12 = variant == GcdVariant::eq12;
    if (eq12 && n == 1) throw PreconditionViolation("the gcd expansion needs n > 1");
    if (is_prime(n) && !modified_domain)
        throw PreconditionViolation("n = " + std::to_string(n) +
                                    " is prime: P_n is not inside L_n \\ {1,n}; use the modified domain");
    const auto all = divisors(n);
    require_cap(static_cast<int>(all.size()), kDivisorSubsetCap, "gcd expansion d(n)");
    std::vector<std::uint64_t> dom;
    if (modified_domain) dom = eq12 ? without(all, {n}) : without(all, {1});
    else dom = without(all, {1, n});

    FinitePoset p = divisibility(dom);
    if (!eq12) p = p.dual();
    auto f = [&dom, n, eq12](Mask a) -> BigInt {
        bool hit = eq12 ? gcd_of(dom, a) == 1 : lcm_of(dom, a) == n;
        return hit ? BigInt(sign_of(a)) : BigInt(0);
    };
    auto ps = sum_over_maxima<BigInt>(p, f, true, exec);

    GcdExpansion r;
    r.modified_domain = modified_domain;
    r.value = *ps.full;
    r.reduced = ps.restricted;
    r.mu = classical_mobius(n);

    const auto primes = prime_factors(n);
    std::vector<std::uint64_t> star;
    for (auto q : primes) star.push_back(n / q);
    auto gcd_star_p = signed_count(primes, [&](Mask a) {
        std::uint64_t g = 0;
        for (int i : elements_of(a)) g = gcd_u(g, n / primes[i]);
        return g == 1;
    });
    auto lcm_p = signed_count(primes, [&](Mask a) { return lcm_of(primes, a) == n; });
    auto gcd_pstar = signed_count(star, [&](Mask a) { return gcd_of(star, a) == 1; });
    if (eq12) r.chain = {r.value, gcd_pstar, gcd_star_p, lcm_p};
    else r.chain = {r.value, lcm_p, gcd_star_p, gcd_pstar};
    return r;
}

MultiplicativeFunction MultiplicativeFunction::power(long k) {
    MultiplicativeFunction h;
    h.kind_ = Kind::power;
    h.exponent_ = k;
    return h;
}

MultiplicativeFunction MultiplicativeFunction::parse(const std::string& spec) {
    if (spec == "identity") return power(1);
    MultiplicativeFunction h;
    if (spec == "liouville") h.kind_ = Kind::liouville;
    else if (spec == "mobius") h.kind_ = Kind::mobius;
    else if (spec == "totient") h.kind_ = Kind::totient;
    else if (spec.rfind("power:", 0) == 0) {
        try {
            std::size_t used = 0;
            long k = std::stol(spec.substr(6), &used);
            if (used != spec.size() - 6) throw SchemaError("bad exponent");
            return power(k);
        } catch (const std::logic_error&) {
            throw SchemaError("bad multiplicative function: " + spec);
        }
    } else {
        throw SchemaError("unknown multiplicative function: " + spec + " (use identity|power:k|liouville|mobius|totient)");
    }
    return h;
}

Rational MultiplicativeFunction::operator()(std::uint64_t n) const {
    switch (kind_) {
        case Kind::power: {
            BigInt b;
            mpz_ui_pow_ui(b.get_mpz_t(), n, static_cast<unsigned long>(std::labs(exponent_)));
            if (exponent_ >= 0) return Rational(b);
            Rational q(BigInt(1), b);
            q.canonicalize();
            return q;
        }
        case Kind::liouville: {
            int omega = 0;
            for (auto [p, e] : factorize(n)) omega += e;
            return Rational(omega % 2 ? -1 : 1);
        }
        case Kind::mobius:
            return Rational(classical_mobius(n));
        case Kind::totient: {
            std::uint64_t phi = n;
            for (auto p : prime_factors(n)) phi = phi / p * (p - 1);
            return Rational(BigInt(static_cast<unsigned long>(phi)));
        }
    }
    return Rational(0);
}

bool MultiplicativeFunction::nonvanishing_on_primes() const { return true; }

std::string MultiplicativeFunction::name() const {
    switch (kind_) {
        case Kind::power:
            return exponent_ == 1 ? "identity" : "power:" + std::to_string(exponent_);
        case Kind::liouville:
            return "liouville";
        case Kind::mobius:
            return "mobius";
        case Kind::totient:
            return "totient";
    }
    return "?";
}

bool totient_product_identity(std::uint64_t n, const MultiplicativeFunction& h) {
    Rational prod = 1;
    for (auto p : prime_factors(n)) prod *= Rational(1) - Rational(1) / h(p);
    Rational sum = 0;
    for (auto d : divisors(n)) {
        int m = classical_mobius(d);
        if (m != 0) sum += Rational(m) / h(d);
    }
    return prod == sum;
}

namespace {

std::vector<std::uint64_t> totient_domain(std::uint64_t n) {
    const auto all = divisors(n);
    require_cap(static_cast<int>(all.size()), kDivisorSubsetCap, "subset sum d(n)");
    return (n > 1 && !is_prime(n)) ? without(all, {1, n}) : without(all, {n});
}

std::vector<std::uint64_t> dirichlet_domain(std::uint64_t n) {
    const auto all = divisors(n);
    require_cap(static_cast<int>(all.size()), kDivisorSubsetCap, "subset sum d(n)");
    return (n > 1 && !is_prime(n)) ? without(all, {1, n}) : without(all, {1});
}

// Σ_{A ≠ ∅} (-1)^{|A|-1} h(gcd A), optionally only over gcd(A) > 1.
Rational totient_lhs(std::uint64_t n, const MultiplicativeFunction& h, bool gcd_gt1, Exec exec) {
    const auto dom = totient_domain(n);
    const auto all = divisors(n);
    Tally t = sum_full<Tally>(
        static_cast<int>(dom.size()),
        [&](Mask a) -> TallyTerm {
            if (a == 0) return {};
            std::uint64_t g = gcd_of(dom, a);
            if (gcd_gt1 && g == 1) return {};
            return {index_in(all, g), -sign_of(a)};
        },
        exec);
    return combine(t, all, h);
}

Rational dirichlet_sum(std::uint64_t n, const MultiplicativeFunction& h, bool lcm_lt_n, Exec exec) {
    const auto dom = dirichlet_domain(n);
    const auto all = divisors(n);
    Tally t = sum_full<Tally>(
        static_cast<int>(dom.size()),
        [&](Mask a) -> TallyTerm {
            std::uint64_t l = lcm_of(dom, a);
            if (lcm_lt_n && l == n) return {};
            return {index_in(all, l), sign_of(a)};
        },
        exec);
    return combine(t, all, h);
}

}  // namespace

Rational totient_h(std::uint64_t n, const MultiplicativeFunction& h, TotientMethod method, Exec exec) {
    check_range(n);
    require_totient_preconditions(n, h);
    if (!totient_product_identity(n, h))
        throw PreconditionViolation("product identity for 1/h fails at n = " + std::to_string(n));
    switch (method) {
        case TotientMethod::product: {
            Rational r = h(n);
            for (auto p : prime_factors(n)) r *= Rational(1) - Rational(1) / h(p);
            return r;
        }
        case TotientMethod::divisor_sum: {
            Rational r = 0;
            for (auto d : divisors(n)) {
                int m = classical_mobius(n / d);
                if (m != 0) r += Rational(m) * h(d);
            }
            return r;
        }
        case TotientMethod::subset_sum:
            return h(n) - totient_lhs(n, h, false, exec);
    }
    throw PreconditionViolation("unknown method");
}

Rational totient_subset_sum_gcd_gt1(std::uint64_t n, const MultiplicativeFunction& h) {
    check_range(n);
    require_totient_preconditions(n, h);
    return h(n) - totient_lhs(n, h, true, Exec::parallel);
}

Rational dirichlet_inverse_totient(std::uint64_t n, const MultiplicativeFunction& h, TotientMethod method,
                                   Exec exec) {
    check_range(n);
    switch (method) {
        case TotientMethod::product: {
            Rational r = 1;
            for (auto p : prime_factors(n)) r *= Rational(1) - h(p);
            return r;
        }
        case TotientMethod::divisor_sum: {
            Rational r = 0;
            for (auto d : divisors(n)) {
                int m = classical_mobius(d);
                if (m != 0) r += Rational(m) * h(d);
            }
            return r;
        }
        case TotientMethod::subset_sum:
            return dirichlet_sum(n, h, false, exec);
    }
    throw PreconditionViolation("unknown method");
}

Rational dirichlet_subset_sum_lcm_lt_n(std::uint64_t n, const MultiplicativeFunction& h) {
    check_range(n);
    return dirichlet_sum(n, h, true, Exec::parallel);
}

ChainIdentities chain_identities(std::uint64_t n, const MultiplicativeFunction& h, Exec exec) {
    check_range(n);
    const auto all = divisors(n);
    require_cap(static_cast<int>(all.size()), kDivisorSubsetCap, "chain identities d(n)");
    ChainIdentities r;
    r.divisors = all;

    // L_n \ {n} under the dual order is an upper semilattice with join = gcd.
    const auto low = without(all, {n});
    auto t = sum_over_chains<Tally>(
        divisibility(low).dual(),
        [&](Mask a) -> TallyTerm {
            if (a == 0) return {};
            return {index_in(all, gcd_of(low, a)), -sign_of(a)};
        },
        low.size() <= 12, exec);
    r.totient_chain = combine(t.restricted, all, h);

    const auto high = without(all, {1});
    auto u = sum_over_chains<Tally>(
        divisibility(high), [&](Mask a) -> TallyTerm { return {index_in(all, lcm_of(high, a)), sign_of(a)}; },
        high.size() <= 12, exec);
    r.dirichlet_chain = combine(u.restricted, all, h);

    if (all.size() <= 12) {
        // Direct chain enumeration: extend chains upward by proper multiples.
        auto walk = [&](const std::vector<std::uint64_t>& dom, std::uint64_t start, bool upward) {
            long total = 0;
            auto rec = [&](auto&& self, std::uint64_t cur, int len) -> void {
                total += (len % 2) ? 1 : -1;  // (-1)^{len-1}
                for (auto e : dom) {
                    bool next = upward ? (e != cur && e % cur == 0) : (e != cur && cur % e == 0);
                    if (next) self(self, e, len + 1);
                }
            };
            rec(rec, start, 1);
            return total;
        };
        // Both vectors are indexed like `divisors`; the excluded end gets 0.
        for (auto d : low) r.totient_inner.push_back(BigInt(walk(low, d, true)));
        r.totient_inner.push_back(0);
        // Chains with maximum d in L_n\{1}, weighted (-1)^|A|.
        r.dirichlet_inner.push_back(0);
        for (auto d : high) r.dirichlet_inner.push_back(BigInt(-walk(high, d, false)));
    }
    return r;
}

ZetaReport zeta_reciprocal(double s, std::uint64_t prime_bound) {
    if (!(s > 1)) throw PreconditionViolation("zeta needs s > 1");
    if (prime_bound < 2) throw PreconditionViolation("prime bound must be >= 2");
    ZetaReport r;
    r.primes = primes_up_to(prime_bound);
    r.value = 1;
    for (auto p : r.primes) r.value *= 1.0 - std::pow(static_cast<double>(p), -s);
    if (s == 2) {
        r.reference = 6.0 / (std::numbers::pi * std::numbers::pi);
        r.error = r.value - r.reference;
    }
    return r;
}

ZetaSurrogate zeta_subset_surrogate(std::uint64_t prime_bound, long s, Exec exec) {
    if (s < 1) throw PreconditionViolation("surrogate needs an integer s >= 1");
    auto primes = primes_up_to(prime_bound);
    if (primes.empty()) throw PreconditionViolation("prime bound must be >= 2");
    if (primes.size() > 4) throw CapExceeded("surrogate limited to primorials with at most 4 primes");
    ZetaSurrogate z;
    for (auto p : primes) z.primorial *= p;
    auto h = MultiplicativeFunction::power(s);
    // 1 + m^{-s} Σ_{A} (-1)^|A| h(gcd A) = 1 - LHS / h(m)
    z.subset_form = Rational(1) - totient_lhs(z.primorial, h, false, exec) / h(z.primorial);
    z.product = 1;
    for (auto p : primes) z.product *= Rational(1) - Rational(1) / h(p);
    return z;
}

BigInt primorial(std::uint64_t n) {
    BigInt r = 1;
    for (auto p : primes_up_to(n)) r *= static_cast<unsigned long>(p);
    return r;
}

bool AbstractComplex::downward_closed() const {
    std::set<Mask> f(faces.begin(), faces.end());
    for (Mask a : faces)
        for (int i : elements_of(a)) {
            Mask b = a & ~bit(i);
            if (b != 0 && !f.count(b)) return false;
        }
    return true;
}

BigInt AbstractComplex::euler_characteristic() const {
    long x = 0;
    for (Mask a : faces) x += (popcount(a) % 2) ? 1 : -1;
    return BigInt(x);
}

int AbstractComplex::dimension() const {
    int d = -1;
    for (Mask a : faces) d = std::max(d, popcount(a) - 1);
    return d;
}

AbstractComplex build_complex(std::uint64_t n, ComplexKind kind) {
    check_range(n);
    const auto all = divisors(n);
    require_cap(static_cast<int>(all.size()), kDivisorSubsetCap, "complex d(n)");
    AbstractComplex c;
    c.vertices = n > 1 ? without(all, {1, n}) : std::vector<std::uint64_t>{};
    const int k = static_cast<int>(c.vertices.size());
    for (Mask a = 1; a < bit(k); ++a) {
        bool face = kind == ComplexKind::S ? gcd_of(c.vertices, a) > 1 : lcm_of(c.vertices, a) < n;
        if (face) c.faces.push_back(a);
    }
    if (!c.downward_closed()) throw PreconditionViolation("face family is not downward closed");
    return c;
}

bool complexes_isomorphic_by_star(std::uint64_t n) {
    auto s = build_complex(n, ComplexKind::S);
    auto t = build_complex(n, ComplexKind::T);
    const int k = static_cast<int>(s.vertices.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = index_in(s.vertices, n / s.vertices[i]);
    std::set<Mask> image;
    for (Mask a : s.faces) image.insert(permute_mask(a, perm));
    return image == std::set<Mask>(t.faces.begin(), t.faces.end());
}

bool bonferroni_check(const AbstractComplex& c, int r) {
    long partial = 0;
    for (Mask a : c.faces)
        if (popcount(a) <= r) partial += (popcount(a) % 2) ? 1 : -1;
    const long sign = (r % 2) ? -1 : 1;
    return sign * partial <= sign;
}

bool bonferroni_check(const AbstractComplex& c) {
    for (int r = 1; r <= c.dimension() + 1; ++r)
        if (!bonferroni_check(c, r)) return false;
    return true;
}

}  // namespace bc
