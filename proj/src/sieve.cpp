#include "skolem/sieve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace skolem {
namespace {

unsigned long rat_mod(const Rat& q, unsigned long m) {
    require(den(q) == 1, "sieve needs an integer sequence");
    Int r = num(q) % Int(m);
    if (r < 0) r += Int(m);
    return r.get_ui();
}

double zero_density(const std::vector<uint8_t>& z) {
    long c = 0;
    for (uint8_t b : z) c += b;
    return double(c) / double(z.size());
}

}  // namespace

std::optional<SievePart> sieve_modulus(const LRS& u, unsigned long m,
                                       long step_cap) {
    require(m >= 2, "modulus too small");
    const int k = u.order();
    std::vector<unsigned long> rec(k), state(k);
    for (int i = 0; i < k; ++i) rec[i] = rat_mod(u.rec()[i], m);
    for (int i = 0; i < k; ++i) state[i] = rat_mod(u.init()[i], m);

    std::map<std::vector<unsigned long>, long> seen;
    std::vector<uint8_t> iszero;
    long s = -1, t = -1;
    for (long step = 0; step <= step_cap; ++step) {
        auto [it, fresh] = seen.emplace(state, step);
        if (!fresh) {
            s = it->second;
            t = step;
            break;
        }
        iszero.push_back(state[0] == 0);
        unsigned long next = 0;
        for (int i = 0; i < k; ++i)
            next = (next + rec[i] * state[i]) % m;
        for (int i = 0; i + 1 < k; ++i) state[i] = state[i + 1];
        state[k - 1] = next;
    }
    if (s < 0) return std::nullopt;

    SievePart part;
    part.m = m;
    part.preperiod = s;
    part.period = (unsigned long)(t - s);
    part.zero.assign(part.period, 0);
    for (long j = s; j < t; ++j) part.zero[j % part.period] = iszero[j];
    part.density = zero_density(part.zero);
    return part;
}

bool Sieve::admits(const Int& n) const {
    if (n < Int(preperiod)) return true;
    return allowed[Int(n % Int(period)).get_ui()] != 0;
}

Sieve build_sieve(const LRS& u, unsigned long budget) {
    static const unsigned long candidates[] = {
        64, 81, 25, 49, 121, 169, 8,  16, 32, 27, 9,  5,  7,  11, 13,
        17, 19, 23, 29, 31,  37,  41, 43, 47, 53, 59, 61, 67, 71, 73};
    std::vector<SievePart> parts;
    for (unsigned long m : candidates) {
        auto p = sieve_modulus(u, m, 1 << 18);
        if (p && p->density < 1.0) parts.push_back(std::move(*p));
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const SievePart& a, const SievePart& b) {
                         if (a.density != b.density) return a.density < b.density;
                         if (a.period != b.period) return a.period < b.period;
                         return a.m < b.m;
                     });

    Sieve sv;
    for (const SievePart& p : parts) {
        unsigned long g = std::gcd(sv.period, p.period);
        // lcm, guarded against overflow past the budget
        unsigned long q = p.period / g;
        if (sv.period > budget / std::max<unsigned long>(q, 1)) continue;
        unsigned long np = sv.period * q;
        if (np > budget) continue;
        std::vector<uint8_t> na(np);
        for (unsigned long r = 0; r < np; ++r)
            na[r] = sv.allowed[r % sv.period] && p.zero[r % p.period];
        double nd = zero_density(na);
        if (nd < sv.density) {
            sv.period = np;
            sv.allowed = std::move(na);
            sv.density = nd;
            sv.preperiod = std::max(sv.preperiod, p.preperiod);
            sv.moduli.push_back(p.m);
        }
    }
    return sv;
}

}  // namespace skolem
