#include "skolem/places.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace skolem {

std::vector<ArchPlace> archimedean_places(const NumberField& L) {
    std::vector<ArchPlace> out;
    if (L.degree() == 1) {
        out.push_back(ArchPlace{0, true});
        return out;
    }
    const auto& sys = L.embeddings();
    for (int i = 0; i < sys->real_count(); ++i)
        out.push_back(ArchPlace{i, true});
    for (int i = sys->real_count(); i < sys->count(); i += 2)
        out.push_back(ArchPlace{i, false});
    return out;
}

namespace {

// ---- linear algebra over F_p (mpz entries, p arbitrary) ----

using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

Int mod_red(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    require(ok != 0, "non-invertible residue");
    return r;
}

void reduce_vec(ZVec& v, const Int& p) {
    for (auto& x : v) x = mod_red(x, p);
}

// Gauss-Jordan to reduced row echelon form mod p; returns pivot columns.
std::vector<int> rref_mod(ZMat& m, const Int& p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && mod_red(m[piv][c], p) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Int inv = inv_mod(mod_red(m[r][c], p), p);
        for (auto& x : m[r]) x = mod_red(x * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Int f = mod_red(m[i][c], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = mod_red(m[i][j] - f * m[r][j], p);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Kernel basis (rows) of the map v -> M v over F_p.
ZMat kernel_mod(ZMat m, const Int& p) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<int> pivots = rref_mod(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    ZMat ker;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        ZVec v(cols, Int(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] =
                mod_red(-m[r][fc], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

int rank_mod(ZMat m, const Int& p) {
    return static_cast<int>(rref_mod(m, p).size());
}

// Row-style Hermite form of an integer row lattice; requires full column
// rank and returns a square upper-triangular basis with positive diagonal.
ZMat hnf_rows(ZMat rows, int cols) {
    std::size_t n = rows.size();
    std::size_t r = 0;
    for (int c = 0; c < cols; ++c) {
        for (;;) {
            std::size_t nz = n;
            for (std::size_t i = r + 1; i < n; ++i)
                if (rows[i][static_cast<std::size_t>(c)] != 0) {
                    nz = i;
                    break;
                }
            if (nz == n) break;
            if (rows[r][static_cast<std::size_t>(c)] == 0) {
                std::swap(rows[r], rows[nz]);
                continue;
            }
            Int q = rows[nz][static_cast<std::size_t>(c)] /
                    rows[r][static_cast<std::size_t>(c)];
            for (int j = 0; j < cols; ++j)
                rows[nz][static_cast<std::size_t>(j)] -=
                    q * rows[r][static_cast<std::size_t>(j)];
            if (rows[nz][static_cast<std::size_t>(c)] != 0)
                std::swap(rows[r], rows[nz]);
        }
        if (rows[r][static_cast<std::size_t>(c)] == 0) continue;
        if (rows[r][static_cast<std::size_t>(c)] < 0)
            for (int j = 0; j < cols; ++j)
                rows[r][static_cast<std::size_t>(j)] =
                    -rows[r][static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(),
                       rows[i][static_cast<std::size_t>(c)].get_mpz_t(),
                       rows[r][static_cast<std::size_t>(c)].get_mpz_t());
            if (q == 0) continue;
            for (int j = 0; j < cols; ++j)
                rows[i][static_cast<std::size_t>(j)] -=
                    q * rows[r][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    require(r == static_cast<std::size_t>(cols), "lattice not full rank");
    rows.resize(r);
    return rows;
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        require(piv < n, "singular matrix");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rat d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// ---- orders ----

// An order in L with Z-basis b_i = (1/den) sum_j W[i][j] theta^j and
// integer structure constants b_i b_j = sum_k T[i][j][k] b_k.
struct Order {
    int D = 0;
    Int den;
    ZMat W;
    std::vector<std::vector<Rat>> WTi;  // inverse of W^T
    std::vector<ZMat> T;                // T[i][j][k]
};

// Order coordinates of an element given in power-basis coordinates.
std::vector<Rat> order_coords(const Order& O, const std::vector<Rat>& v) {
    std::vector<Rat> u(static_cast<std::size_t>(O.D), Rat(0));
    for (int i = 0; i < O.D; ++i) {
        for (int j = 0; j < O.D; ++j)
            u[static_cast<std::size_t>(i)] +=
                O.WTi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                v[static_cast<std::size_t>(j)];
        u[static_cast<std::size_t>(i)] *= Rat(O.den);
    }
    return u;
}

Order make_order(const NumberField& L, Int dn, ZMat W) {
    Order O;
    O.D = L.degree();
    // Normalize the common content.
    Int g = dn;
    for (const auto& row : W)
        for (const auto& x : row) g = gcd(g, x);
    if (g > 1) {
        dn /= g;
        for (auto& row : W)
            for (auto& x : row) x /= g;
    }
    O.den = dn;
    O.W = std::move(W);
    std::vector<std::vector<Rat>> WT(
        static_cast<std::size_t>(O.D),
        std::vector<Rat>(static_cast<std::size_t>(O.D)));
    for (int i = 0; i < O.D; ++i)
        for (int j = 0; j < O.D; ++j)
            WT[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                Rat(O.W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    O.WTi = rat_inverse(std::move(WT));
    // Structure constants via polynomial products of the basis elements.
    O.T.assign(static_cast<std::size_t>(O.D),
               ZMat(static_cast<std::size_t>(O.D),
                    ZVec(static_cast<std::size_t>(O.D), Int(0))));
    Rat den2 = Rat(O.den) * Rat(O.den);
    for (int i = 0; i < O.D; ++i) {
        std::vector<Rat> bi(static_cast<std::size_t>(O.D));
        for (int j = 0; j < O.D; ++j)
            bi[static_cast<std::size_t>(j)] =
                Rat(O.W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        QPoly pi(std::move(bi));
        for (int j = i; j < O.D; ++j) {
            std::vector<Rat> bj(static_cast<std::size_t>(O.D));
            for (int k = 0; k < O.D; ++k)
                bj[static_cast<std::size_t>(k)] = Rat(
                    O.W[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
            QPoly prod = pi * QPoly(std::move(bj));
            std::vector<Rat> pw = L.from_poly(prod);
            for (auto& x : pw) x /= den2;
            std::vector<Rat> u = order_coords(O, pw);
            for (int k = 0; k < O.D; ++k) {
                const Rat& c = u[static_cast<std::size_t>(k)];
                require(den(c) == 1, "order not multiplicatively closed");
                O.T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(k)] = num(c);
                O.T[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                   [static_cast<std::size_t>(k)] = num(c);
            }
        }
    }
    return O;
}

ZVec mul_exact(const Order& O, const ZVec& a, const ZVec& b) {
    ZVec out(static_cast<std::size_t>(O.D), Int(0));
    for (int i = 0; i < O.D; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < O.D; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            Int c = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            const ZVec& row =
                O.T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < O.D; ++k)
                out[static_cast<std::size_t>(k)] +=
                    c * row[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

ZVec mul_mod(const Order& O, const ZVec& a, const ZVec& b, const Int& m) {
    ZVec out(static_cast<std::size_t>(O.D), Int(0));
    for (int i = 0; i < O.D; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < O.D; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            Int c = mod_red(a[static_cast<std::size_t>(i)] *
                                b[static_cast<std::size_t>(j)],
                            m);
            if (c == 0) continue;
            const ZVec& row =
                O.T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < O.D; ++k)
                out[static_cast<std::size_t>(k)] +=
                    c * row[static_cast<std::size_t>(k)];
        }
    }
    reduce_vec(out, m);
    return out;
}

ZVec one_coords(const Order& O) {
    std::vector<Rat> v(static_cast<std::size_t>(O.D), Rat(0));
    v[0] = 1;
    std::vector<Rat> u = order_coords(O, v);
    ZVec out(static_cast<std::size_t>(O.D));
    for (int i = 0; i < O.D; ++i) {
        require(den(u[static_cast<std::size_t>(i)]) == 1, "unit not in order");
        out[static_cast<std::size_t>(i)] = num(u[static_cast<std::size_t>(i)]);
    }
    return out;
}

ZVec elt_pow_mod(const Order& O, ZVec x, Int e, const Int& p) {
    ZVec r = one_coords(O);
    reduce_vec(r, p);
    reduce_vec(x, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul_mod(O, r, x, p);
        x = mul_mod(O, x, x, p);
        e /= 2;
    }
    return r;
}

// Basis (rows, order coordinates mod p) of the radical of O/pO.
ZMat radical_basis(const Order& O, const Int& p) {
    Int pm = p;
    while (pm < O.D) pm *= p;
    ZMat F(static_cast<std::size_t>(O.D),
           ZVec(static_cast<std::size_t>(O.D), Int(0)));
    for (int i = 0; i < O.D; ++i) {
        ZVec e(static_cast<std::size_t>(O.D), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        ZVec img = elt_pow_mod(O, std::move(e), pm, p);
        for (int k = 0; k < O.D; ++k)
            F[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                img[static_cast<std::size_t>(k)];
    }
    return kernel_mod(std::move(F), p);
}

// Lattice basis (HNF rows, order coordinates) of the radical ideal
// I = preimage of rad(O/pO).
ZMat radical_ideal(const Order& O, const Int& p, const ZMat& rad) {
    ZMat rows;
    for (int i = 0; i < O.D; ++i) {
        ZVec r(static_cast<std::size_t>(O.D), Int(0));
        r[static_cast<std::size_t>(i)] = p;
        rows.push_back(std::move(r));
    }
    for (const auto& v : rad) rows.push_back(v);
    return hnf_rows(std::move(rows), O.D);
}

// Coordinates of an element of I (given in order coordinates) with respect
// to the HNF basis G; exact back-substitution.
ZVec ideal_coords(const ZMat& G, const ZVec& v) {
    int D = static_cast<int>(G.size());
    std::vector<Rat> rem(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i) rem[static_cast<std::size_t>(i)] = Rat(v[static_cast<std::size_t>(i)]);
    ZVec y(static_cast<std::size_t>(D), Int(0));
    for (int c = 0; c < D; ++c) {
        // G is upper triangular: only row c has a nonzero entry in column c
        // once the earlier rows are peeled off.
        Rat q = rem[static_cast<std::size_t>(c)] /
                Rat(G[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]);
        require(den(q) == 1, "element not in ideal lattice");
        y[static_cast<std::size_t>(c)] = num(q);
        for (int j = c; j < D; ++j)
            rem[static_cast<std::size_t>(j)] -=
                q * Rat(G[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)]);
    }
    for (const auto& r : rem) require(r == 0, "ideal coordinate residue");
    return y;
}

// One enlargement step: the multiplier ring of the radical ideal.
// Returns false if O was already maximal at p.
bool enlarge(const NumberField& L, Order& O, const Int& p) {
    ZMat rad = radical_basis(O, p);
    ZMat G = radical_ideal(O, p, rad);
    int D = O.D;
    // Rows of the stacked matrix: for each ideal generator g_k and each
    // coordinate t, the map x -> (x * g_k in ideal coordinates)_t mod p.
    ZMat Phi(static_cast<std::size_t>(D) * static_cast<std::size_t>(D),
             ZVec(static_cast<std::size_t>(D), Int(0)));
    for (int i = 0; i < D; ++i) {
        ZVec bi(static_cast<std::size_t>(D), Int(0));
        bi[static_cast<std::size_t>(i)] = 1;
        for (int k = 0; k < D; ++k) {
            ZVec prod = mul_exact(O, bi, G[static_cast<std::size_t>(k)]);
            ZVec y = ideal_coords(G, prod);
            for (int t = 0; t < D; ++t)
                Phi[static_cast<std::size_t>(k * D + t)]
                   [static_cast<std::size_t>(i)] =
                       mod_red(y[static_cast<std::size_t>(t)], p);
        }
    }
    ZMat U = kernel_mod(std::move(Phi), p);
    if (U.empty()) return false;
    ZMat rows;
    for (int i = 0; i < D; ++i) {
        ZVec r(static_cast<std::size_t>(D));
        for (int j = 0; j < D; ++j)
            r[static_cast<std::size_t>(j)] =
                p * O.W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        rows.push_back(std::move(r));
    }
    for (const auto& u : U) {
        ZVec r(static_cast<std::size_t>(D), Int(0));
        for (int i = 0; i < D; ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < D; ++j)
                r[static_cast<std::size_t>(j)] +=
                    u[static_cast<std::size_t>(i)] *
                    O.W[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        rows.push_back(std::move(r));
    }
    ZMat Wn = hnf_rows(std::move(rows), D);
    O = make_order(L, O.den * p, std::move(Wn));
    return true;
}

// ---- polynomial root finding over F_p (split squarefree input) ----

using PPol = std::vector<Int>;  // little-endian, reduced mod p

void ptrim(PPol& f, const Int& p) {
    for (auto& c : f) c = mod_red(c, p);
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPol pmul(const PPol& a, const PPol& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PPol r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    ptrim(r, p);
    return r;
}

PPol prem(PPol a, const PPol& b, const Int& p) {
    Int linv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        Int q = mod_red(a.back() * linv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = mod_red(a[off + i] - q * b[i], p);
        ptrim(a, p);
        if (a.size() < b.size()) break;
    }
    return a;
}

PPol pgcd(PPol a, PPol b, const Int& p) {
    ptrim(a, p);
    ptrim(b, p);
    while (!b.empty()) {
        PPol r = prem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int linv = inv_mod(a.back(), p);
        for (auto& c : a) c = mod_red(c * linv, p);
    }
    return a;
}

PPol ppow_mod(PPol base, Int e, const PPol& f, const Int& p) {
    PPol r{Int(1)};
    base = prem(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = prem(pmul(r, base, p), f, p);
        base = prem(pmul(base, base, p), f, p);
        e /= 2;
    }
    return r;
}

PPol pdiv_exact(PPol a, const PPol& b, const Int& p) {
    PPol q(a.size() - b.size() + 1, Int(0));
    Int linv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        Int c = mod_red(a.back() * linv, p);
        std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = mod_red(a[off + i] - c * b[i], p);
        ptrim(a, p);
        if (a.empty()) break;
    }
    require(a.empty(), "inexact division");
    ptrim(q, p);
    return q;
}

// All roots of a squarefree polynomial that splits into linear factors.
void split_roots(PPol g, const Int& p, std::vector<Int>& out) {
    ptrim(g, p);
    require(!g.empty(), "zero polynomial in root finding");
    if (g.size() == 1) return;
    if (g.size() == 2) {
        out.push_back(mod_red(-g[0] * inv_mod(g[1], p), p));
        return;
    }
    if (p == 2) {
        // Evaluate at 0 and 1; a split squarefree poly over F_2 has deg <= 2.
        for (long v = 0; v <= 1; ++v) {
            Int acc(0);
            for (std::size_t i = g.size(); i-- > 0;)
                acc = mod_red(acc * v + g[i], p);
            if (acc == 0) out.push_back(Int(v));
        }
        return;
    }
    Int half = (p - 1) / 2;
    for (Int a(0); a < p; ++a) {
        // Factor out the root -a directly if present.
        PPol lin{a, Int(1)};
        PPol g1 = pgcd(g, lin, p);
        if (g1.size() == 2) {
            out.push_back(mod_red(-a, p));
            g = pdiv_exact(std::move(g), g1, p);
            if (g.size() <= 2) {
                split_roots(std::move(g), p, out);
                return;
            }
        }
        PPol w = ppow_mod(lin, half, g, p);
        if (!w.empty()) w[0] = mod_red(w[0] - 1, p);
        ptrim(w, p);
        PPol h = pgcd(g, w, p);
        if (h.size() > 1 && h.size() < g.size()) {
            PPol rest = pdiv_exact(std::move(g), h, p);
            split_roots(std::move(h), p, out);
            split_roots(std::move(rest), p, out);
            return;
        }
    }
    require(false, "failed to split a totally split polynomial");
}

}  // namespace

// ---- finite places ----

struct FinitePlace::Data {
    NumberField L;
    Int p;
    int e = 0, f = 0;
    Order O;
    ZVec idem;  // idempotent of the component, order coords mod p

    std::mutex mu;
    Int lift_modulus;  // current Hensel modulus for idem_lift
    ZVec idem_lift;

    // Idempotent lift valid modulo at least the target modulus.
    ZVec idempotent_mod(const Int& target) {
        std::lock_guard<std::mutex> lock(mu);
        while (lift_modulus < target) {
            Int m2 = lift_modulus * lift_modulus;
            ZVec e2 = mul_mod(O, idem_lift, idem_lift, m2);
            ZVec e3 = mul_mod(O, e2, idem_lift, m2);
            ZVec nxt(e2.size());
            for (std::size_t i = 0; i < e2.size(); ++i)
                nxt[i] = mod_red(3 * e2[i] - 2 * e3[i], m2);
            idem_lift = std::move(nxt);
            lift_modulus = m2;
        }
        return idem_lift;
    }
};

const Int& FinitePlace::p() const { return d_->p; }
int FinitePlace::e() const { return d_->e; }
int FinitePlace::f() const { return d_->f; }

Rat FinitePlace::log_abs_coeff(const FVec& x) const {
    return Rat(-valuation(x)) / Rat(d_->e);
}

long FinitePlace::valuation(const FVec& x) const {
    Data& D = *d_;
    check_input(!D.L.is_zero(x), "valuation of zero");
    if (D.L.degree() == 1) return padic_valuation(x[0], D.p);
    std::vector<Rat> u = order_coords(D.O, x);
    Int m(1);
    for (const auto& c : u) m = lcm(m, den(c));
    long t = m == 1 ? 0 : padic_valuation(m, D.p);
    Int pt = pow(D.p, static_cast<unsigned long>(t));
    Int mprime = m / pt;
    ZVec U(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Rat scaled = u[i] * Rat(m);
        U[i] = num(scaled);
    }
    int n = D.O.D;
    for (long M = std::max<long>(16, 2 * t + 4); M <= (1L << 20); M *= 2) {
        Int pM = pow(D.p, static_cast<unsigned long>(M));
        ZVec eh = D.idempotent_mod(pM);
        ZVec ehat(eh.size());
        for (std::size_t i = 0; i < eh.size(); ++i)
            ehat[i] = mod_red(eh[i], pM);
        Int minv = inv_mod(mod_red(mprime, pM), pM);
        ZVec xhat(U.size());
        for (std::size_t i = 0; i < U.size(); ++i)
            xhat[i] = mod_red(U[i] * minv, pM);
        ZVec one = one_coords(D.O);
        ZVec y = mul_mod(D.O, xhat, ehat, pM);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = mod_red(y[i] + one[i] - ehat[i], pM);
        // Multiplication matrix of y and its determinant; the determinant
        // agrees with the norm of the representative modulo p^M.
        std::vector<std::vector<Int>> My(
            static_cast<std::size_t>(n),
            std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i) {
            ZVec bi(static_cast<std::size_t>(n), Int(0));
            bi[static_cast<std::size_t>(i)] = 1;
            ZVec col = mul_mod(D.O, y, bi, pM);
            for (int k = 0; k < n; ++k)
                My[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    col[static_cast<std::size_t>(k)];
        }
        Int det = bareiss_det(My);
        if (det == 0) continue;
        long k = padic_valuation(det, D.p);
        if (k >= M) continue;
        require(k % D.f == 0, "norm valuation not divisible by f");
        return k / D.f - static_cast<long>(D.e) * t;
    }
    throw internal_error("valuation lifting exhausted");
}

std::vector<FinitePlace> finite_places_above(const NumberField& L,
                                             const Int& p) {
    check_input(is_probable_prime(p) && p >= 2, "not a prime");
    if (L.degree() == 1) {
        FinitePlace pl;
        pl.d_ = std::make_shared<FinitePlace::Data>();
        pl.d_->L = L;
        pl.d_->p = p;
        pl.d_->e = pl.d_->f = 1;
        pl.d_->lift_modulus = 1;
        return {pl};
    }
    int D = L.degree();
    ZMat W(static_cast<std::size_t>(D), ZVec(static_cast<std::size_t>(D), Int(0)));
    for (int i = 0; i < D; ++i) W[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    Order O = make_order(L, Int(1), std::move(W));
    for (int guard = 0; enlarge(L, O, p); ++guard)
        require(guard < 256, "maximal order iteration runaway");

    // Split A = O/pO. Quotient S = A/rad with a chosen complement basis.
    ZMat rad = radical_basis(O, p);
    int nr = static_cast<int>(rad.size());
    int ns = D - nr;
    // Row space basis of [rad; complement unit vectors] with rad first.
    ZMat Bq = rad;
    {
        ZMat probe = rad;
        for (int i = 0; i < D && static_cast<int>(Bq.size()) < D; ++i) {
            ZVec e(static_cast<std::size_t>(D), Int(0));
            e[static_cast<std::size_t>(i)] = 1;
            probe.push_back(e);
            if (rank_mod(probe, p) == static_cast<int>(probe.size())) {
                Bq.push_back(std::move(e));
            } else {
                probe.pop_back();
            }
        }
    }
    require(static_cast<int>(Bq.size()) == D, "quotient basis incomplete");
    // Inverse of Bq^T mod p for coordinate conversion.
    ZMat BqT(static_cast<std::size_t>(D), ZVec(static_cast<std::size_t>(D)));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            BqT[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                Bq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    ZMat BqTi;
    {
        // Invert mod p by RREF on [BqT | I].
        ZMat aug(static_cast<std::size_t>(D),
                 ZVec(2 * static_cast<std::size_t>(D), Int(0)));
        for (int i = 0; i < D; ++i) {
            for (int j = 0; j < D; ++j)
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    BqT[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(D + i)] = 1;
        }
        rref_mod(aug, p);
        require(static_cast<int>(aug.size()) == D, "quotient basis singular");
        BqTi.assign(static_cast<std::size_t>(D),
                    ZVec(static_cast<std::size_t>(D)));
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                BqTi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(D + j)];
    }
    // A-coords -> S-coords: last ns entries of BqTi * v.
    auto to_S = [&](const ZVec& v) {
        ZVec s(static_cast<std::size_t>(ns), Int(0));
        for (int i = 0; i < ns; ++i) {
            Int acc(0);
            for (int j = 0; j < D; ++j)
                acc += BqTi[static_cast<std::size_t>(nr + i)]
                           [static_cast<std::size_t>(j)] *
                       v[static_cast<std::size_t>(j)];
            s[static_cast<std::size_t>(i)] = mod_red(acc, p);
        }
        return s;
    };
    auto from_S = [&](const ZVec& s) {
        ZVec v(static_cast<std::size_t>(D), Int(0));
        for (int i = 0; i < ns; ++i) {
            if (s[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < D; ++j)
                v[static_cast<std::size_t>(j)] = mod_red(
                    v[static_cast<std::size_t>(j)] +
                        s[static_cast<std::size_t>(i)] *
                            Bq[static_cast<std::size_t>(nr + i)]
                              [static_cast<std::size_t>(j)],
                    p);
        }
        return v;
    };
    auto S_mul = [&](const ZVec& a, const ZVec& b) {
        return to_S(mul_mod(O, from_S(a), from_S(b), p));
    };
    ZVec oneS = to_S(one_coords(O));

    // Berlekamp subalgebra of S: fixed points of Frobenius.
    ZMat Fm(static_cast<std::size_t>(ns), ZVec(static_cast<std::size_t>(ns), Int(0)));
    for (int i = 0; i < ns; ++i) {
        ZVec e(static_cast<std::size_t>(ns), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        ZVec img = to_S(elt_pow_mod(O, from_S(e), p, p));
        for (int k = 0; k < ns; ++k)
            Fm[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                mod_red(img[static_cast<std::size_t>(k)] -
                            (k == i ? Int(1) : Int(0)),
                        p);
    }
    ZMat berl = kernel_mod(std::move(Fm), p);
    std::size_t r = berl.size();
    require(r >= 1, "no components found");

    // Split the unit idempotent by each Berlekamp basis vector.
    std::vector<ZVec> idems{oneS};
    for (const auto& b : berl) {
        std::vector<ZVec> next;
        for (const auto& e : idems) {
            ZVec c = S_mul(e, b);
            // Minimal polynomial of c in the component with unit e: first
            // linear dependence among e, c, c^2, ...
            std::vector<ZVec> pows{e};
            PPol mp;
            for (;;) {
                ZVec nxt = S_mul(pows.back(), c);
                ZMat dep = pows;
                dep.push_back(nxt);
                ZMat ker = kernel_mod([&] {
                    // Kernel of v -> rows^T v: transpose so rows are columns.
                    ZMat mt(static_cast<std::size_t>(ns),
                            ZVec(dep.size(), Int(0)));
                    for (std::size_t a = 0; a < dep.size(); ++a)
                        for (int t = 0; t < ns; ++t)
                            mt[static_cast<std::size_t>(t)][a] =
                                dep[a][static_cast<std::size_t>(t)];
                    return mt;
                }(), p);
                if (!ker.empty()) {
                    // A dependence exists; normalize so the top power has
                    // coefficient 1.
                    ZVec rel = ker[0];
                    require(rel.back() != 0, "dependence misses top power");
                    Int inv = inv_mod(rel.back(), p);
                    mp.resize(rel.size());
                    for (std::size_t i2 = 0; i2 < rel.size(); ++i2)
                        mp[i2] = mod_red(rel[i2] * inv, p);
                    break;
                }
                pows.push_back(std::move(nxt));
                require(pows.size() <= static_cast<std::size_t>(ns) + 1,
                        "minimal polynomial search overflow");
            }
            if (mp.size() <= 2) {
                next.push_back(e);
                continue;
            }
            std::vector<Int> roots;
            split_roots(mp, p, roots);
            require(roots.size() + 1 == mp.size(), "component poly not split");
            std::sort(roots.begin(), roots.end());
            for (const Int& v : roots) {
                ZVec ev = e;
                for (const Int& w : roots) {
                    if (w == v) continue;
                    // ev *= (c - w e) / (v - w)
                    ZVec lin(static_cast<std::size_t>(ns));
                    for (int i2 = 0; i2 < ns; ++i2)
                        lin[static_cast<std::size_t>(i2)] = mod_red(
                            c[static_cast<std::size_t>(i2)] -
                                w * e[static_cast<std::size_t>(i2)],
                            p);
                    ev = S_mul(ev, lin);
                    Int sc = inv_mod(mod_red(v - w, p), p);
                    for (auto& x2 : ev) x2 = mod_red(x2 * sc, p);
                }
                next.push_back(std::move(ev));
            }
        }
        idems = std::move(next);
    }
    require(idems.size() == r, "component count mismatch");

    // Residue degrees, idempotent lifts, ramification indices.
    std::vector<FinitePlace> places;
    int efsum = 0;
    for (const auto& eS : idems) {
        // f = dim of the field component e*S.
        ZMat img;
        for (int i = 0; i < ns; ++i) {
            ZVec e2(static_cast<std::size_t>(ns), Int(0));
            e2[static_cast<std::size_t>(i)] = 1;
            img.push_back(S_mul(eS, e2));
        }
        int f = rank_mod(img, p);
        // Lift to an idempotent of A.
        ZVec eA = from_S(eS);
        for (int iter = 0;; ++iter) {
            ZVec sq = mul_mod(O, eA, eA, p);
            if (sq == eA) break;
            ZVec cube = mul_mod(O, sq, eA, p);
            for (int i = 0; i < D; ++i)
                eA[static_cast<std::size_t>(i)] =
                    mod_red(3 * sq[static_cast<std::size_t>(i)] -
                                2 * cube[static_cast<std::size_t>(i)],
                            p);
            require(iter < 64, "idempotent lift in A did not converge");
        }
        // dim of e*A = e*f.
        ZMat imgA;
        for (int i = 0; i < D; ++i) {
            ZVec e2(static_cast<std::size_t>(D), Int(0));
            e2[static_cast<std::size_t>(i)] = 1;
            imgA.push_back(mul_mod(O, eA, e2, p));
        }
        int ef = rank_mod(imgA, p);
        require(ef % f == 0, "component dimension not divisible by f");
        FinitePlace pl;
        pl.d_ = std::make_shared<FinitePlace::Data>();
        pl.d_->L = L;
        pl.d_->p = p;
        pl.d_->e = ef / f;
        pl.d_->f = f;
        pl.d_->O = O;
        pl.d_->idem = eA;
        pl.d_->lift_modulus = p;
        pl.d_->idem_lift = eA;
        places.push_back(std::move(pl));
        efsum += ef;
    }
    require(efsum == D, "sum of e*f does not match the degree");
    return places;
}

std::vector<Int> relevant_primes(const NumberField& L,
                                 const std::vector<FVec>& xs) {
    std::set<Int> ps;
    for (const auto& x : xs) {
        if (L.is_zero(x)) continue;
        QPoly mp = L.minpoly_of(x);
        ZPrimPart pp = primitive_part(mp);
        Int lc = pp.prim.back();
        Int c0 = pp.prim.front();
        require(c0 != 0, "nonzero element with zero constant term");
        Int n = lc * c0;
        if (n < 0) n = -n;
        if (n == 1) continue;
        for (const auto& [p, e] : factor_int(n)) ps.insert(p);
    }
    return std::vector<Int>(ps.begin(), ps.end());
}

}  // namespace skolem
