#include "skolem/cutoff.hpp"

#include "skolem/factor.hpp"

#include <algorithm>
#include <set>

namespace skolem {
namespace {

// h(f(n)) <= c0 + c1 log n for n >= 1, by Horner through the coefficients:
// each of the deg(f) steps costs one multiplication by n and one addition.
AffineLog coeff_poly_height(const NumberField& K, const BinetRoot& r,
                            mpfr_prec_t prec) {
    RI c0(0, prec);
    for (const FVec& c : r.coeffs) c0 = c0 + K.height_of(c);
    long D = (long)r.coeffs.size() - 1;
    RI Dr = RI::of(Int(D), prec);
    c0 = c0 + Dr * ri_log(RI(2, prec));
    return {c0, Dr};
}

AffineLog al_max(const AffineLog& a, const AffineLog& b) {
    return {ri_max(a.c0, b.c0), ri_max(a.c1, b.c1)};
}

// |x|_v, tight enough on both ends for logarithms of sums.
RI abs_at(const NumberField& K, const FVec& x, const PlaceRef& v,
          mpfr_prec_t prec) {
    if (K.is_zero(x)) return RI(0, prec);
    if (v.arch) return K.embed(x, v.inf.emb, Rat(1, Int(1) << 80)).abs();
    RI lp = ri_log(RI::of(v.fin.p(), prec));
    return ri_exp(RI::of(v.fin.log_abs_coeff(x), prec) * lp);
}

// |B(n)|_v <= C4 * n^D * |lambda_next|_v^n with C4 the sum of all coefficient
// magnitudes in the subleading part and D its largest polynomial degree.
struct RestBound {
    bool empty = true;
    RI log_c4;
    long D = 0;
};

RestBound rest_bound(const BinetForm& bf, const UsablePlace& up,
                     mpfr_prec_t prec) {
    RestBound rb;
    rb.log_c4 = RI(0, prec);
    std::vector<int> tail = up.layers.tail();
    if (tail.empty()) return rb;
    rb.empty = false;
    RI c4(0, prec);
    for (int j : tail) {
        const BinetRoot& r = bf.roots[j];
        rb.D = std::max(rb.D, (long)r.coeffs.size() - 1);
        for (const FVec& c : r.coeffs)
            c4 = c4 + abs_at(bf.field, c, up.place, prec);
    }
    // The true sum is positive (the subleading coefficients are not all
    // zero); floor the interval to keep the logarithm defined.
    c4 = ri_max(c4, RI::of(Rat(Int(1), Int(Int(1) << 200)), prec));
    rb.log_c4 = ri_log(c4);
    return rb;
}

// Certified two-sided enclosure of h(num/den) together with the Kronecker
// floor; rejects root-of-unity quotients (degenerate input).
RI quotient_height(const NumberField& K, const FVec& num, const FVec& den,
                   mpfr_prec_t prec) {
    FVec q = K.div(num, den);
    require(!K.to_algebraic(q).root_of_unity().has_value(),
            "cutoff: root quotient is a root of unity");
    return ri_max(K.height_of(q), kappa_floor(K.degree(), prec));
}

PlaceCutoff place_cutoff(const BinetForm& bf, const UsablePlace& up,
                 const std::vector<FVec>& xs, mpfr_prec_t prec) {
    const NumberField& K = bf.field;
    long d = K.degree();
    long dv = up.place.arch ? up.place.inf.dv() : up.place.fin.dv();
    RI d_over_dv = RI::of(Rat(d, dv), prec);
    RI log2 = ri_log(RI(2, prec)), log3 = ri_log(RI(3, prec));

    const std::vector<int>& g0 = up.layers.groups[0];
    int lead = up.layers.lead_count();
    int j1 = g0[0];
    AffineLog h1 = coeff_poly_height(K, bf.roots[j1], prec);

    // |f_1(n)|_v >= exp(-(d/dv) h(f_1(n))) whenever f_1(n) != 0.
    LogDecay decay = LogDecay::affine(h1.scaled(d_over_dv));
    Int cap(0);

    if (lead >= 2) {
        int j2 = g0[1];
        AffineLog h2 = coeff_poly_height(K, bf.roots[j2], prec);
        FVec chi = K.div(xs[j2], xs[j1]);  // unit-modulus ratio at this place
        RI h_chi = quotient_height(K, xs[j2], xs[j1], prec);

        if (lead == 2) {
            // V = -f_1 l_1^n (a chi^n - 1) + B with a = -f_2/f_1.
            AffineLog h_a = h1 + h2;
            LogDecay bak =
                up.place.arch
                    ? baker_arch(d, h_a, h_chi, prec)
                    : baker_finite(d, up.place.fin.p(), up.place.fin.e(),
                                   up.place.fin.f(), 0, h_a, h_chi, prec);
            decay = decay + bak;
            cap = power_identity_cap(h_chi, h_a);
        } else {
            // Three-way archimedean tie: V = f_1 l_1^n (z_1 - z_0) + B with
            // z_0 = -(f_2/f_1) chi^n on the circle |z| = rho_0 = |f_2/f_1|
            // and z_1 = 1 + (f_3/f_1)(l_3/l_1)^n on |z - 1| = rho_1.
            require(up.place.arch,
                    "cutoff: three-way tie at a finite place is unusable");
            int j3 = g0[2];
            AffineLog h3 = coeff_poly_height(K, bf.roots[j3], prec);
            AffineLog hb = al_max(h1, al_max(h2, h3));  // bounds each h(f_j(n))

            RI two(2, prec), four(4, prec), twelve(12, prec);
            RI d2 = RI::of(Int(2 * d), prec), d4 = RI::of(Int(4 * d), prec);
            // h(beta_j) <= 2 hb; h(rho_j) <= 2 hb (sqrt of beta * conj beta);
            // 1 + rho_0 + rho_1 <= exp(4 d hb + log 3).
            AffineLog h_rho = hb.scaled(two);
            AffineLog den_log = hb.scaled(d4) + AffineLog::constant(log3);

            // Circles apart: |z_1 - z_0| >= 1 - rho_0 - rho_1 > 0, a nonzero
            // real of degree <= 4d and height <= 4 hb + 2 log 2.
            LogDecay sep = LogDecay::affine(
                (hb.scaled(four) + AffineLog::constant(two * log2))
                    .scaled(d4));

            // One circle strictly inside the other: |rho_0 - rho_1| - 1 =
            // y / (|rho_0-rho_1| + 1) with y = (rho_0-rho_1)^2 - 1 of degree
            // <= 2d and height <= 12 hb + 4 log 2.
            LogDecay nest = LogDecay::affine(
                (hb.scaled(twelve) + AffineLog::constant(four * log2))
                    .scaled(d2) +
                den_log);

            // Tangent circles: |z_1 - z_0| >= rho_0 |La|^2 / (1+rho_0+rho_1)
            // with La = atil chi^n - 1, atil = -beta_2 / (+-rho_0) of degree
            // <= 2d and height <= 4 hb.
            LogDecay bak_t = baker_arch(2 * d, hb.scaled(four), h_chi, prec);
            LogDecay tang = bak_t.scaled(two) +
                            LogDecay::affine(h_rho.scaled(d2) + den_log);

            // Crossing circles: with sig the upper intersection point,
            //   |z_1 - z_0| >= 2 rho_0 |La| / (W (1+rho_0+rho_1)),
            // La = ahat chi^n - 1, ahat = -beta_2/sig (or the conjugate).
            // Mahler through z^2 - (1+rho_0^2-rho_1^2) z + rho_0^2 gives
            // h(sig) <= 12 hb + 4 log 2, so h(ahat) <= 14 hb + 4 log 2, and
            // W^2 = 1 + 16 rho_0^2 / Delta lies in K itself with
            // h(W^2) <= 28 hb + 12 log 2.
            AffineLog h_ahat =
                hb.scaled(RI(14, prec)) + AffineLog::constant(four * log2);
            LogDecay bak_c = baker_arch(2 * d, h_ahat, h_chi, prec);
            AffineLog h_w2 = hb.scaled(RI(28, prec)) +
                             AffineLog::constant(twelve * log2);
            LogDecay cross =
                bak_c + LogDecay::affine(h_w2.scaled(RI::of(Rat(d, 2), prec)) +
                                         h_rho.scaled(d2) + den_log);

            decay = decay + ld_max(sep, ld_max(nest, ld_max(tang, cross)));
            // All hit-the-special-point identities have the shape
            // a chi^n = 1 with h(a) <= h_ahat (the largest of the bounds).
            cap = power_identity_cap(h_chi, h_ahat);
        }
    }

    RestBound rb = rest_bound(bf, up, prec);
    PlaceCutoff pc;
    pc.place = up.place;
    pc.lead = lead;
    pc.cap = cap;
    pc.has_tail = !rb.empty;
    pc.gap = RI(0, prec);
    pc.decay = decay;
    Int n0(0);
    if (!rb.empty) {
        pc.gap = place_gap(K, xs, up, prec);
        pc.decay =
            decay + LogDecay{rb.log_c4, RI::of(Int(rb.D), prec), RI(0, prec)};
        n0 = decay_crossover(pc.gap, pc.decay);
    } else if (lead >= 2) {
        n0 = 3;
    }
    if (cap > n0) n0 = cap;
    pc.n0 = n0;
    return pc;
}

// Integer n >= 0 with f_j(n) = 0: candidates are the integer roots of the
// first nonzero coordinate polynomial, verified against all coordinates.
void coeff_zeros_of(const NumberField& K, const BinetRoot& r,
                    std::set<Int>& out) {
    long dim = K.degree();
    QPoly probe;
    for (long k = 0; k < dim && probe.is_zero(); ++k) {
        std::vector<Rat> cs;
        for (const FVec& c : r.coeffs) cs.push_back(c[k]);
        probe = QPoly(std::move(cs));
    }
    require(!probe.is_zero(), "coefficient polynomial vanishes identically");
    if (probe.degree() == 0) return;
    for (const QPoly& g : irreducible_factors(probe)) {
        if (g.degree() != 1) continue;
        Rat root = -g[0];  // g = x + g[0]
        if (den(root) != 1 || num(root) < 0) continue;
        Int n = num(root);
        // Exact check of the full vector f_j(n).
        FVec acc = K.zero();
        Rat pw(1);
        for (const FVec& c : r.coeffs) {
            acc = K.add(acc, K.mul_rat(c, pw));
            pw *= Rat(n);
        }
        if (K.is_zero(acc)) out.insert(n);
    }
}

}  // namespace

Cutoff compute_cutoff(const BinetForm& bf, mpfr_prec_t prec) {
    require(!bf.zero_tail && !bf.roots.empty(),
            "cutoff: sequence has no nonzero Binet part");
    std::vector<UsablePlace> ups = usable_places(bf);
    require(!ups.empty(), "cutoff: no usable place (degenerate input?)");

    std::vector<FVec> xs;
    xs.reserve(bf.roots.size());
    for (const auto& r : bf.roots) xs.push_back(r.coords);

    Cutoff out;
    out.degree = bf.field.degree();
    for (const auto& up : ups) {
        PlaceCutoff pc = place_cutoff(bf, up, xs, prec);
        if (out.places.empty() || pc.n0 < out.n0) {
            out.n0 = pc.n0;
            out.chosen = out.places.size();
        }
        out.places.push_back(std::move(pc));
    }

    std::set<Int> zs;
    for (const auto& r : bf.roots) coeff_zeros_of(bf.field, r, zs);
    out.coeff_zeros.assign(zs.begin(), zs.end());
    for (const Int& z : out.coeff_zeros)
        if (z >= out.n0) out.n0 = z + 1;
    return out;
}

}  // namespace skolem
