#include "skolem/factor.hpp"

#include <algorithm>
#include <cstdint>

namespace skolem {
namespace modp {

namespace {
using u64 = unsigned long;
using u128 = unsigned __int128;
}  // namespace

void norm(PolF& a, u64 p) {
    for (auto& c : a) c %= p;
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolF& a) { return static_cast<int>(a.size()) - 1; }
bool is_zero(const PolF& a) { return a.empty(); }
bool is_one(const PolF& a) { return a.size() == 1 && a[0] == 1; }

u64 inv_mod(u64 a, u64 p) {
    // extended Euclid on integers
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    require(r == 1, "inverse of non-unit mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

PolF add(const PolF& a, const PolF& b, u64 p) {
    PolF r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    norm(r, p);
    return r;
}

PolF sub(const PolF& a, const PolF& b, u64 p) {
    PolF r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i] % p) % p;
    norm(r, p);
    return r;
}

PolF mul(const PolF& a, const PolF& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolF r(a.size() + b.size() - 1, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
        u128 acc = 0;
        std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
        std::size_t hi = std::min(k, a.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i)
            acc += static_cast<u128>(a[i]) * b[k - i];
        r[k] = static_cast<u64>(acc % p);
    }
    norm(r, p);
    return r;
}

PolF scalar_mul(const PolF& a, u64 c, u64 p) {
    c %= p;
    PolF r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<u64>(static_cast<u128>(a[i]) * c % p);
    norm(r, p);
    return r;
}

std::pair<PolF, PolF> divrem(const PolF& a, const PolF& b, u64 p) {
    require(!b.empty(), "division by zero poly mod p");
    PolF r = a, q;
    int db = deg(b);
    if (deg(a) < db) return {q, r};
    q.assign(a.size() - b.size() + 1, 0);
    u64 linv = inv_mod(b.back(), p);
    for (int i = deg(r); i >= db; --i) {
        if (r[i] == 0) continue;
        u64 c = static_cast<u64>(static_cast<u128>(r[i]) * linv % p);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) {
            u128 t = static_cast<u128>(c) * b[j] % p;
            r[i - db + j] = (r[i - db + j] + p - static_cast<u64>(t)) % p;
        }
    }
    norm(r, p);
    norm(q, p);
    return {q, r};
}

PolF rem(const PolF& a, const PolF& b, u64 p) { return divrem(a, b, p).second; }

PolF make_monic(const PolF& a, u64 p) {
    if (a.empty() || a.back() == 1) return a;
    return scalar_mul(a, inv_mod(a.back(), p), p);
}

PolF gcd(PolF a, PolF b, u64 p) {
    norm(a, p);
    norm(b, p);
    while (!b.empty()) {
        PolF r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

PolF derivative(const PolF& a, u64 p) {
    if (a.size() <= 1) return {};
    PolF r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<u64>(static_cast<u128>(a[i]) * (i % p) % p);
    norm(r, p);
    return r;
}

PolF pow_mod(const PolF& base, const Int& e, const PolF& f, u64 p) {
    require(e >= 0, "negative exponent");
    PolF result{1};
    PolF b = rem(base, f, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, b, p), f, p);
    }
    return result;
}

std::pair<PolF, PolF> bezout(const PolF& a, const PolF& b, u64 p) {
    // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    PolF r0 = a, r1 = b;
    PolF s0{1}, s1{}, t0{}, t1{1};
    norm(r0, p);
    norm(r1, p);
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        PolF ns = sub(s0, mul(q, s1, p), p);
        PolF nt = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    require(deg(r0) == 0, "bezout: inputs not coprime");
    u64 c = inv_mod(r0[0], p);
    return {scalar_mul(s0, c, p), scalar_mul(t0, c, p)};
}

PolF reduce(const std::vector<Int>& a, u64 p) {
    PolF r(a.size());
    Int pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        Int m = a[i] % pz;
        if (m < 0) m += pz;
        r[i] = m.get_ui();
    }
    norm(r, p);
    return r;
}

namespace {

// Distinct-degree factorization of a squarefree monic f.
// Returns pairs (product of irreducibles of degree d, d).
std::vector<std::pair<PolF, int>> ddf(PolF f, u64 p) {
    std::vector<std::pair<PolF, int>> out;
    PolF x{0, 1};
    PolF h = rem(x, f, p);
    int d = 0;
    while (deg(f) > 2 * (d + 1) - 1 && deg(f) > 0) {
        ++d;
        h = pow_mod(h, Int(static_cast<unsigned long>(p)), f, p);
        PolF g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

// Equal-degree factorization (Cantor-Zassenhaus): f squarefree monic,
// all irreducible factors of degree d.
void edf(const PolF& f, int d, u64 p, std::uint64_t& seed,
         std::vector<PolF>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    int n = deg(f);
    PolF g;
    for (;;) {
        PolF r(static_cast<std::size_t>(n));
        for (auto& c : r) c = splitmix64(seed) % p;
        norm(r, p);
        if (deg(r) < 1) continue;
        if (p == 2) {
            // trace map sum r^(2^i), i < d
            PolF t = rem(r, f, p);
            PolF acc = t;
            for (int i = 1; i < d; ++i) {
                t = rem(mul(t, t, p), f, p);
                acc = add(acc, t, p);
            }
            g = gcd(acc, f, p);
        } else {
            Int e = pow(Int(static_cast<unsigned long>(p)),
                        static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            PolF s = pow_mod(r, e, f, p);
            g = gcd(sub(s, PolF{1}, p), f, p);
        }
        if (deg(g) > 0 && deg(g) < n) break;
    }
    edf(g, d, p, seed, out);
    edf(divrem(f, g, p).first, d, p, seed, out);
}

// Squarefree decomposition in characteristic p (monic input).
void sqf_p(const PolF& f, u64 p, int mult,
           std::vector<std::pair<PolF, int>>& out) {
    if (deg(f) <= 0) return;
    PolF df = derivative(f, p);
    if (is_zero(df)) {
        // f = h(x^p); p-th root over the prime field is coefficient thinning
        PolF h((deg(f) / static_cast<int>(p)) + 1);
        for (std::size_t j = 0; j < h.size(); ++j) h[j] = f[j * p];
        sqf_p(h, p, mult * static_cast<int>(p), out);
        return;
    }
    PolF g = gcd(f, df, p);
    PolF w = divrem(f, g, p).first;
    int i = 1;
    while (deg(w) > 0) {
        PolF y = gcd(w, g, p);
        PolF z = divrem(w, y, p).first;
        if (deg(z) > 0) out.emplace_back(make_monic(z, p), mult * i);
        w = std::move(y);
        g = divrem(g, w, p).first;
        ++i;
    }
    if (deg(g) > 0) sqf_p(g, p, mult, out);
}

}  // namespace

std::vector<std::pair<PolF, int>> factor(const PolF& fin, u64 p) {
    PolF f = fin;
    norm(f, p);
    check_input(!f.empty(), "factor of zero poly mod p");
    f = make_monic(f, p);
    std::vector<std::pair<PolF, int>> sq;
    sqf_p(f, p, 1, sq);
    std::vector<std::pair<PolF, int>> out;
    std::uint64_t seed = 0x7c0ffee5ull ^ (p * 0x9e3779b97f4a7c15ull);
    for (auto& [part, mult] : sq) {
        for (auto& [prod, d] : ddf(part, p)) {
            std::vector<PolF> irr;
            edf(prod, d, p, seed, irr);
            std::sort(irr.begin(), irr.end());
            for (auto& g : irr) out.emplace_back(g, mult);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Factorization over Q via Zassenhaus.

namespace {

using ZPol = std::vector<Int>;

int zdeg2(const ZPol& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPol& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPol zmul(const ZPol& a, const ZPol& b) {
    if (a.empty() || b.empty()) return {};
    ZPol r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPol zadd(const ZPol& a, const ZPol& b) {
    ZPol r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPol zsub(const ZPol& a, const ZPol& b) {
    ZPol r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

// Balanced residue in (-m/2, m/2].
Int balanced(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPol zmods(ZPol a, const Int& m) {
    for (auto& c : a) c = balanced(c, m);
    ztrim(a);
    return a;
}

// Division by a monic b, coefficients reduced mod m along the way.
std::pair<ZPol, ZPol> zdivrem_monic_mod(const ZPol& a, const ZPol& b,
                                        const Int& m) {
    require(!b.empty() && b.back() == 1, "monic divisor expected");
    ZPol r = a, q;
    int db = zdeg2(b);
    if (zdeg2(a) < db) return {q, zmods(r, m)};
    q.assign(a.size() - b.size() + 1, Int(0));
    for (int i = zdeg2(r); i >= db; --i) {
        Int c = balanced(r[i], m);
        if (c == 0) {
            r[i] = 0;
            continue;
        }
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = balanced(r[i - db + j] - c * b[j], m);
    }
    ztrim(q);
    ZPol rr(r.begin(), r.begin() + std::min<std::size_t>(r.size(), db));
    ztrim(rr);
    return {q, zmods(rr, m)};
}

ZPol from_modp(const modp::PolF& a) {
    ZPol r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
    return r;
}

struct HenselNode {
    int lo = 0, hi = 0;  // leaf index range [lo, hi)
    ZPol g, h, s, t;     // children products and Bezout cofactors (mod m)
    int left = -1, right = -1;
};

struct HenselTree {
    std::vector<HenselNode> nodes;
    std::vector<ZPol> leaves;  // lifted leaf polynomials (mod m)
    unsigned long p = 0;

    int build(int lo, int hi, const std::vector<modp::PolF>& fac,
              const modp::PolF& lc_adjust) {
        if (hi - lo == 1) {
            HenselNode n;
            n.lo = lo;
            n.hi = hi;
            nodes.push_back(n);
            return static_cast<int>(nodes.size()) - 1;
        }
        int mid = (lo + hi) / 2;
        HenselNode n;
        n.lo = lo;
        n.hi = hi;
        int self = static_cast<int>(nodes.size());
        nodes.push_back(n);
        int l = build(lo, mid, fac, lc_adjust);
        int r = build(mid, hi, fac, lc_adjust);
        // products mod p
        modp::PolF gp = lo == 0 ? lc_adjust : modp::PolF{1};
        for (int i = lo; i < mid; ++i) gp = modp::mul(gp, fac[i], p);
        modp::PolF hp{1};
        for (int i = mid; i < hi; ++i) hp = modp::mul(hp, fac[i], p);
        auto [s, t] = modp::bezout(gp, hp, p);
        nodes[self].left = l;
        nodes[self].right = r;
        nodes[self].g = from_modp(gp);
        nodes[self].h = from_modp(hp);
        nodes[self].s = from_modp(s);
        nodes[self].t = from_modp(t);
        return self;
    }

    // One quadratic lifting step at `idx` against target F (valid mod m2),
    // where the node data is valid mod m; afterwards valid mod m2.
    void lift_node(int idx, const ZPol& F, const Int& m2) {
        HenselNode& n = nodes[idx];
        if (n.left < 0) {
            leaves[n.lo] = zmods(F, m2);
            return;
        }
        ZPol e = zmods(zsub(F, zmul(n.g, n.h)), m2);
        auto [q, r] = zdivrem_monic_mod(zmul(n.s, e), n.h, m2);
        ZPol g2 = zmods(zadd(n.g, zadd(zmul(n.t, e), zmul(q, n.g))), m2);
        ZPol h2 = zmods(zadd(n.h, r), m2);
        ZPol b = zmods(zsub(zadd(zmul(n.s, g2), zmul(n.t, h2)), ZPol{Int(1)}),
                       m2);
        auto [c, d] = zdivrem_monic_mod(zmul(n.s, b), h2, m2);
        n.s = zmods(zsub(n.s, d), m2);
        n.t = zmods(zsub(n.t, zadd(zmul(n.t, b), zmul(c, g2))), m2);
        n.g = g2;
        n.h = h2;
        lift_node(n.left, n.g, m2);
        lift_node(n.right, n.h, m2);
    }
};

// Lift the mod-p factorization f = lc * prod(fac_i) to modulus >= target.
// Returns monic leaves mod m and the final modulus m.
std::pair<std::vector<ZPol>, Int> hensel_lift(const ZPol& f,
                                              const std::vector<modp::PolF>& fac,
                                              unsigned long p,
                                              const Int& target) {
    Int lc = f.back();
    Int m(static_cast<unsigned long>(p));
    HenselTree tree;
    tree.p = p;
    tree.leaves.assign(fac.size(), {});
    modp::PolF lc_adjust{modp::reduce({lc}, p).empty()
                             ? 0ul
                             : modp::reduce({lc}, p)[0]};
    require(lc_adjust[0] != 0, "p divides leading coefficient");
    int root = tree.build(0, static_cast<int>(fac.size()), fac, lc_adjust);
    if (fac.size() == 1) {
        // nothing to lift; the factor is f itself (up to content)
        std::vector<ZPol> single{f};
        return {single, target};
    }
    while (m < target) {
        Int m2 = m * m;
        tree.lift_node(root, zmods(f, m2), m2);
        m = m2;
    }
    // Re-monicize the leftmost leaf (it carries lc).
    Int lcinv;
    {
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   lc.get_mpz_t(), m.get_mpz_t());
        require(g == 1 || g == -1, "lc not invertible mod m");
        lcinv = g == 1 ? s : -s;
    }
    std::vector<ZPol> leaves = tree.leaves;
    for (auto& c : leaves[0]) c = balanced(c * lcinv, m);
    ztrim(leaves[0]);
    require(!leaves[0].empty() && balanced(leaves[0].back() - 1, m) == 0,
            "leftmost leaf not monic after adjustment");
    leaves[0].back() = 1;
    return {leaves, m};
}

Int znorm2_sq(const ZPol& f) {
    Int s(0);
    for (const auto& c : f) s += c * c;
    return s;
}

// Exact division test of integer polys: does b divide a? If yes, quotient.
bool zdivides(const ZPol& a, const ZPol& b, ZPol& q) {
    if (b.empty()) return false;
    ZPol r = a;
    q.clear();
    int db = zdeg2(b);
    if (zdeg2(a) < db) return false;
    q.assign(a.size() - b.size() + 1, Int(0));
    for (int i = zdeg2(r); i >= db; --i) {
        if (r[i] == 0) continue;
        if (r[i] % b.back() != 0) return false;
        Int c = r[i] / b.back();
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i)
        if (r[i] != 0) return false;
    ztrim(q);
    return true;
}

QPoly zpol_to_qpoly(const ZPol& a) {
    std::vector<Rat> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
    return QPoly(std::move(c));
}

ZPol zprimitive2(ZPol a) {
    ztrim(a);
    if (a.empty()) return a;
    Int g(0);
    for (const auto& c : a) g = gcd(g, c);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Factor a primitive squarefree integer polynomial of degree >= 1 into
// irreducible primitive integer factors.
std::vector<ZPol> factor_squarefree_z(ZPol f) {
    std::vector<ZPol> out;
    if (zdeg2(f) == 1) {
        out.push_back(f);
        return out;
    }
    // Select a prime: f mod p squarefree, p not dividing lc. Among a few
    // candidates take the one with fewest modular factors.
    unsigned long best_p = 0;
    std::vector<modp::PolF> best_fac;
    int tried = 0;
    for (unsigned long p = 3; tried < 4;
         p = next_prime(Int(p)).get_ui()) {
        require(p < 1000000, "prime selection runaway");
        if (p > 10000 && best_p != 0) break;
        if (f.back() % Int(p) == 0) continue;
        modp::PolF fp = modp::reduce(f, p);
        if (modp::deg(fp) != zdeg2(f)) continue;
        modp::PolF d = modp::derivative(fp, p);
        if (modp::is_zero(d)) continue;
        if (modp::deg(modp::gcd(fp, d, p)) != 0) continue;
        auto fac = modp::factor(fp, p);
        std::vector<modp::PolF> irr;
        for (auto& [g, e] : fac) {
            require(e == 1, "squarefree reduction with multiplicity");
            irr.push_back(g);
        }
        ++tried;
        if (best_p == 0 || irr.size() < best_fac.size()) {
            best_p = p;
            best_fac = std::move(irr);
        }
        if (best_fac.size() == 1) break;
    }
    require(best_p != 0, "no usable prime found");
    if (best_fac.size() == 1) {
        out.push_back(zprimitive2(f));
        return out;
    }
    // classical factor-coefficient bound: coefficients of l*g for any factor
    // g of f are bounded by |l| * 2^n * ||f||_2.
    Int l = f.back();
    Int norm2sq = znorm2_sq(f);
    Int bound = abs(l);
    {
        Int s = sqrt(norm2sq) + 1;
        bound *= s;
        bound <<= static_cast<unsigned>(zdeg2(f) + 1);  // extra slack bit
    }
    Int target = 2 * bound + 1;
    auto [leaves, m] = hensel_lift(f, best_fac, best_p, target);

    // Zassenhaus recombination by increasing subset size.
    std::vector<int> alive(leaves.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    ZPol rem_f = f;
    int max_s = static_cast<int>(alive.size());
    for (int s = 1; 2 * s <= max_s;) {
        bool found = false;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            // candidate from subset idx (indices into alive)
            ZPol prod{rem_f.back()};
            for (int i = 0; i < s; ++i)
                prod = zmods(zmul(prod, leaves[alive[idx[i]]]), m);
            ZPol cand = zprimitive2(prod);
            ZPol q;
            if (!cand.empty() && zdivides(rem_f, cand, q)) {
                out.push_back(cand);
                rem_f = zprimitive2(q);
                std::vector<int> nalive;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) ==
                        idx.end())
                        nalive.push_back(alive[i]);
                alive = std::move(nalive);
                max_s = static_cast<int>(alive.size());
                found = true;
                break;
            }
            // next combination
            int i = s - 1;
            while (i >= 0 && idx[i] == max_s - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zdeg2(rem_f) >= 1) out.push_back(zprimitive2(rem_f));
    return out;
}

}  // namespace

QFactorization factor_over_Q(const QPoly& f) {
    check_input(!f.is_zero(), "factor of zero polynomial");
    QFactorization result;
    result.unit = f[f.degree()];
    if (f.degree() == 0) return result;
    auto sq = squarefree_decomposition(f);
    for (auto& [part, mult] : sq) {
        if (part.degree() < 1) continue;
        ZPrimPart pp = primitive_part(part);
        std::vector<ZPol> zf = factor_squarefree_z(pp.prim);
        for (auto& g : zf) {
            QPoly gq = zpol_to_qpoly(g).monic();
            result.factors.emplace_back(std::move(gq), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  for (int i = a.first.degree(); i >= 0; --i) {
                      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
                  }
                  return a.second < b.second;
              });
    return result;
}

std::vector<QPoly> irreducible_factors(const QPoly& f) {
    std::vector<QPoly> out;
    for (auto& [g, e] : factor_over_Q(f).factors) out.push_back(g);
    return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace skolem
