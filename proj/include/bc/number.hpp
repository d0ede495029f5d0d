#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/whitney.hpp"

namespace bc {

inline constexpr std::uint64_t kNumberCap = 1000000;
inline constexpr int kDivisorSubsetCap = 22;  // d(n) for subset sums

// Trial division behind a synchronized cache. Returns (p, e) pairs, p ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);

int classical_mobius(std::uint64_t n);

enum class GcdVariant { eq12, eq19 };

struct GcdExpansion {
    BigInt value;                // sum over the (possibly modified) divisor domain
    BigInt reduced;              // same sum restricted to the maximal elements
    std::vector<BigInt> chain;   // the four members of the equality chain, in printed order
    BigInt mu;
    bool modified_domain = false;
};

// Eq12: Σ_{A ⊆ L_n\{1,n}, gcd(A)=1} (-1)^|A|.  Eq19: the lcm(A)=n dual.
GcdExpansion gcd_expansion(std::uint64_t n, GcdVariant variant, bool modified_domain = false,
                           Exec exec = Exec::parallel);

// Multiplicative function with exact rational values.
class MultiplicativeFunction {
public:
    enum class Kind { power, liouville, mobius, totient };

    // "identity", "power:k" (k may be negative), "liouville", "mobius", "totient".
    static MultiplicativeFunction parse(const std::string& spec);
    static MultiplicativeFunction power(long k);

    Rational operator()(std::uint64_t n) const;
    bool completely_multiplicative() const { return kind_ == Kind::power || kind_ == Kind::liouville; }
    bool nonvanishing_on_primes() const;
    std::string name() const;

private:
    Kind kind_ = Kind::power;
    long exponent_ = 1;
};

enum class TotientMethod { product, divisor_sum, subset_sum };

// φ_h(n) = h(n) ∏_{p|n} (1 - 1/h(p)).
Rational totient_h(std::uint64_t n, const MultiplicativeFunction& h, TotientMethod method, Exec exec = Exec::parallel);
// ∏_{p|n} (1 - h(p)).
Rational dirichlet_inverse_totient(std::uint64_t n, const MultiplicativeFunction& h, TotientMethod method,
                                   Exec exec = Exec::parallel);

// ∏_{p|n}(1 - 1/h(p)) == Σ_{d|n} μ(d)/h(d).
bool totient_product_identity(std::uint64_t n, const MultiplicativeFunction& h);

// Subset sums with the restrictions allowed for non-squarefree n.
Rational totient_subset_sum_gcd_gt1(std::uint64_t n, const MultiplicativeFunction& h);
Rational dirichlet_subset_sum_lcm_lt_n(std::uint64_t n, const MultiplicativeFunction& h);

struct ChainIdentities {
    Rational totient_chain;    // Σ over nonempty chains of L_n\{n}: (-1)^{|A|-1} h(gcd A)
    Rational dirichlet_chain;  // Σ over chains of L_n\{1}: (-1)^|A| h(lcm A)
    // Inner coefficients by direct chain enumeration, aligned with `divisors`
    // (ascending); the entries for d = n and d = 1 respectively are 0.
    std::vector<std::uint64_t> divisors;
    std::vector<BigInt> totient_inner;    // expected -μ(n/d), d < n
    std::vector<BigInt> dirichlet_inner;  // expected μ(d), d > 1
};

ChainIdentities chain_identities(std::uint64_t n, const MultiplicativeFunction& h, Exec exec = Exec::parallel);

struct ZetaReport {
    double value = 0;        // ∏_{p ≤ bound} (1 - p^{-s})
    double reference = 0;    // 6/π² when s = 2, else 0
    double error = 0;        // value - reference when s = 2
    std::vector<std::uint64_t> primes;
};

ZetaReport zeta_reciprocal(double s, std::uint64_t prime_bound);

struct ZetaSurrogate {
    std::uint64_t primorial = 1;
    Rational subset_form;  // 1 + m^{-s} Σ_{A ⊆ L_m\{1,m}} (-1)^|A| gcd(A)^s
    Rational product;      // ∏_{p | m} (1 - p^{-s})
};

// Exact check of the zeta subset-sum form on m = bound#, integer s >= 1.
ZetaSurrogate zeta_subset_surrogate(std::uint64_t prime_bound, long s, Exec exec = Exec::parallel);

BigInt primorial(std::uint64_t n);

// Downward-closed family of non-empty faces over labelled vertices.
struct AbstractComplex {
    std::vector<std::uint64_t> vertices;  // divisor labels
    std::vector<Mask> faces;              // sorted

    bool downward_closed() const;
    BigInt euler_characteristic() const;
    int dimension() const;  // max |A| - 1, or -1 if empty
};

enum class ComplexKind { S, T };

AbstractComplex build_complex(std::uint64_t n, ComplexKind kind);
// A ↦ A* = {n/a} carries S_n onto T_n.
bool complexes_isomorphic_by_star(std::uint64_t n);
// (-1)^r Σ_{|A| ≤ r} (-1)^{|A|-1} ≤ (-1)^r for r = 1..dim+1.
bool bonferroni_check(const AbstractComplex& c);
bool bonferroni_check(const AbstractComplex& c, int r);

}  // namespace bc
