#pragma once

#include "skolem/poly.hpp"

#include <utility>
#include <vector>

namespace skolem {

// Dense polynomials over F_p, lowest coefficient first, normalized to [0, p).
// p must be prime and fit comfortably below 2^31.
namespace modp {

using PolF = std::vector<unsigned long>;

void norm(PolF& a, unsigned long p);
int deg(const PolF& a);
bool is_zero(const PolF& a);
bool is_one(const PolF& a);
unsigned long inv_mod(unsigned long a, unsigned long p);

PolF add(const PolF& a, const PolF& b, unsigned long p);
PolF sub(const PolF& a, const PolF& b, unsigned long p);
PolF mul(const PolF& a, const PolF& b, unsigned long p);
PolF scalar_mul(const PolF& a, unsigned long c, unsigned long p);
// Remainder/quotient of a by b (b nonzero, any leading coefficient).
std::pair<PolF, PolF> divrem(const PolF& a, const PolF& b, unsigned long p);
PolF rem(const PolF& a, const PolF& b, unsigned long p);
PolF gcd(PolF a, PolF b, unsigned long p);  // monic gcd
PolF make_monic(const PolF& a, unsigned long p);
PolF derivative(const PolF& a, unsigned long p);
// base^e mod f, with e an arbitrary-precision exponent.
PolF pow_mod(const PolF& base, const Int& e, const PolF& f, unsigned long p);

// Extended Euclid: returns (s, t) with s*a + t*b = 1; requires gcd(a,b) = 1.
std::pair<PolF, PolF> bezout(const PolF& a, const PolF& b, unsigned long p);

// Reduce an integer polynomial mod p.
PolF reduce(const std::vector<Int>& a, unsigned long p);

// Full factorization over F_p: monic irreducible factors with multiplicity.
// Input need not be monic or squarefree; the leading unit is dropped.
std::vector<std::pair<PolF, int>> factor(const PolF& f, unsigned long p);

}  // namespace modp

// Factorization over Q: f = unit * prod(factors[i].first ^ factors[i].second)
// with each factor monic irreducible over Q.
struct QFactorization {
    Rat unit;
    std::vector<std::pair<QPoly, int>> factors;
};

QFactorization factor_over_Q(const QPoly& f);

// Convenience: the distinct monic irreducible factors of a nonzero f.
std::vector<QPoly> irreducible_factors(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

}  // namespace skolem
