#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skolem {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant failure (would indicate a bug, not bad input).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}

inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

// Exact p-adic valuation of a nonzero integer.
inline long padic_valuation(Int n, const Int& p) {
    require(n != 0, "padic_valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

inline long padic_valuation(const Rat& x, const Int& p) {
    require(x != 0, "padic_valuation of zero");
    return padic_valuation(num(x), p) - padic_valuation(den(x), p);
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Prime factorization of |n| (n != 0) as sorted (prime, exponent) pairs;
// trial division plus Pollard rho for the large cofactor.
std::vector<std::pair<Int, int>> factor_int(Int n);

// Deterministic 64-bit mix, used to seed per-purpose RNGs reproducibly.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic parallel map: runs fn(i) for i in [0, n) on up to
// max_threads workers; results land in index order, so output is
// independent of scheduling. max_threads <= 1 runs inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned max_threads);

// Worker cap from SKOLEM4_THREADS (default: min(4, hardware)).
unsigned worker_count();

}  // namespace skolem
