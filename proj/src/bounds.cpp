#include "skolem/bounds.hpp"

namespace skolem {

namespace {

RI ri_long(long v, mpfr_prec_t prec) { return RI(v, prec); }

// lower endpoint of a - b strictly positive?
bool surely_gt(const RI& a, const RI& b) { return (a - b).is_positive(); }

}  // namespace

RI kappa_floor(long deg, mpfr_prec_t prec) {
    require(deg >= 1, "kappa_floor: degree < 1");
    if (deg == 1) return ri_log(ri_long(2, prec));
    RI d = ri_long(deg, prec);
    RI l = ri_log(ri_long(3 * deg, prec));
    return ri_long(1, prec) / (ri_long(2, prec) * d * l * l * l);
}

RI theta_gap(long deg, mpfr_prec_t prec) {
    RI l2d = ri_log(ri_long(2, prec)) / ri_long(deg, prec);
    return ri_min(l2d, kappa_floor(deg, prec));
}

RI matveev_premult(long s, long deg, mpfr_prec_t prec) {
    require(s >= 1 && deg >= 1, "matveev_premult: bad parameters");
    RI p2 = RI::of(Int(Int(1) << (6 * s + 20)), prec);
    RI d = ri_long(deg, prec);
    return p2 * d * d * (ri_long(1, prec) + ri_log(d));
}

RI yu_c0(long s, long deg, const Int& p, mpfr_prec_t prec) {
    require(s >= 1 && deg >= 1 && p >= 2, "yu_c0: bad parameters");
    RI base = ri_long(6 * (s + 1) * deg, prec) /
              ri_sqrt(ri_log(RI::of(p, prec)));
    RI pw = ri_pow_ui(base, (unsigned long)(2 * (s + 1)));
    RI pd = RI::of(pow(p, (unsigned long)deg), prec);
    RI tail = ri_long(5, prec) + ri_log(ri_long(s * deg, prec));
    return ri_long(12, prec) * pw * pd * tail;
}

LogDecay baker_arch(long deg, const AffineLog& h_alpha, const RI& h_lambda,
                    mpfr_prec_t prec) {
    RI pi = RI::pi(prec);
    RI d = ri_long(deg, prec);
    // M(L) = premult * (d h_a(L) + pi) * (d h_l + pi) * pi, affine in L.
    RI fixed = matveev_premult(3, deg, prec) * (d * h_lambda + pi) * pi;
    RI M0 = fixed * (d * h_alpha.c0 + pi);
    RI M1 = fixed * d * h_alpha.c1;
    // |a l^n - 1| >= exp(-2log2) * exp(-M(L) (1 + log(n+2))) and, for n >= 3,
    // log(n+2) <= L + log(5/3).
    RI q = ri_long(1, prec) + ri_log(RI::of(Rat(5, 3), prec));
    RI two_log2 = ri_long(2, prec) * ri_log(ri_long(2, prec));
    LogDecay main{two_log2 + M0 * q, M0 + M1 * q, M1};
    // the branch |a l^n - 1| > 1/2 needs exp(-decay) <= 1/2
    return ld_max(main, LogDecay{ri_log(ri_long(2, prec)), RI(0, prec),
                                 RI(0, prec)});
}

LogDecay baker_finite(long deg, const Int& p, long e_ram, long f_res,
                      long v_lambda, const AffineLog& h_alpha,
                      const RI& h_lambda, mpfr_prec_t prec) {
    require(e_ram >= 1 && f_res >= 1, "baker_finite: bad place data");
    RI d = ri_long(deg, prec);
    RI dv = ri_long(e_ram * f_res, prec);
    RI logp = ri_log(RI::of(p, prec));
    RI log2 = ri_log(ri_long(2, prec));
    LogDecay out = LogDecay::zero(prec);
    if (v_lambda == 0) {
        // v_P(a) = 0 too: s = 2 p-adic linear forms, B = n, log B = L.
        RI G = logp / ri_long(e_ram, prec) * yu_c0(2, deg, p, prec);
        RI h1c0 = ri_max(h_alpha.c0, logp);
        RI h2 = ri_max(h_lambda, logp);
        out = ld_max(out, LogDecay{RI(0, prec), G * h1c0 * h2,
                                   G * h_alpha.c1 * h2});
        // v_P(a) != 0: |a l^n - 1|_v >= min(1, |a|_v) >= exp(-(d/dv) h(a))
        out = ld_max(out, LogDecay::affine(h_alpha.scaled(d / dv)));
    } else {
        // |a l^n - 1|_v < 1 forces v_P(a l^n) = 0, pinning n = -v(a)/v(l),
        // which is at most (d/dv) h(a) * e/(|v(l)| log p) <= (d/log 2) h(a);
        // for that single n the Liouville bound
        //   |a l^n - 1|_v >= exp(-(d/dv)(h(a) + n h(l) + log 2))
        // applies; every other n gets |a l^n - 1|_v >= 1.
        RI nmax0 = d / log2 * h_alpha.c0;
        RI nmax1 = d / log2 * h_alpha.c1;
        AffineLog inner{h_alpha.c0 + h_lambda * nmax0 + log2,
                        h_alpha.c1 + h_lambda * nmax1};
        out = ld_max(out, LogDecay::affine(inner.scaled(d / dv)));
    }
    return out;
}

Int decay_crossover(const RI& gap, const LogDecay& dec) {
    require(gap.is_positive(), "decay_crossover: gap not positive");
    mpfr_prec_t prec = std::max<mpfr_prec_t>(gap.prec(), 128);
    auto ok = [&](const Int& n) {
        RI rn = RI::of(n, prec);
        RI L = ri_log(rn);
        if (!surely_gt(gap * rn, dec.eval(L))) return false;
        // increasing margin beyond n (needs log n >= 1, true for n >= 3)
        return surely_gt(gap * rn, dec.a1 + ri_long(2, prec) * dec.a2 * L);
    };
    Int hi = 3;
    int guard = 0;
    while (!ok(hi)) {
        hi *= 2;
        require(++guard < 512, "decay_crossover: no crossover found");
    }
    if (hi == 3) return hi;
    Int lo = hi / 2;
    if (lo < 3) lo = 3;
    while (hi - lo > 1) {
        Int mid = (hi + lo) / 2;
        if (ok(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Int power_identity_cap(const RI& h_lambda, const AffineLog& h_target) {
    return decay_crossover(h_lambda, LogDecay::affine(h_target));
}

}  // namespace skolem
