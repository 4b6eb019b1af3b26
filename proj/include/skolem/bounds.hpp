#pragma once

#include "skolem/common.hpp"
#include "skolem/interval.hpp"

namespace skolem {

// Kronecker-type height floor: a nonzero algebraic number of degree <= d that
// is not a root of unity has height >= kappa(d).  kappa(1) = log 2, and for
// d >= 2 we use the Voutier-style floor 1/(2d (log 3d)^3), which is monotone
// decreasing, so it is safe to plug in any upper bound for the degree.
RI kappa_floor(long deg, mpfr_prec_t prec);

// min{(log 2)/d, kappa(d)}: for gamma of degree <= d, not a root of unity,
// some place v has |gamma|_v <= exp(-theta_gap(d)).
RI theta_gap(long deg, mpfr_prec_t prec);

// 2^(6s+20) d^2 (1 + log d): the premultiplier of the linear-forms bound
//   |b_1 log t_1 + ... + b_s log t_s| >= exp(-premult * A_1...A_s * (1+log B))
// with A_k >= max{d h(t_k), |log t_k|, 0.16} and B >= max|b_k|.
RI matveev_premult(long s, long deg, mpfr_prec_t prec);

// 12 (6(s+1)d / sqrt(log p))^(2(s+1)) p^d (5 + log(sd)): the p-adic analogue;
//   v_P(t_1^b1 ... t_s^bs - 1) <= yu_c0 * h_1...h_s * log B
// for t_k of P-adic valuation 0, h_k >= max{h(t_k), log p}, B >= max{|b_k|,3}.
RI yu_c0(long s, long deg, const Int& p, mpfr_prec_t prec);

// An upper bound c0 + c1 * log n, valid for all n >= 3, for some quantity that
// grows at most logarithmically in n (typically the height of a coefficient
// value f(n)).  Coefficients are nonnegative.
struct AffineLog {
    RI c0, c1;
    AffineLog() = default;
    AffineLog(RI a, RI b) : c0(std::move(a)), c1(std::move(b)) {}
    static AffineLog constant(const RI& c) { return {c, RI(0, c.prec())}; }
    RI at(const RI& logn) const { return c0 + c1 * logn; }
    friend AffineLog operator+(const AffineLog& a, const AffineLog& b) {
        return {a.c0 + b.c0, a.c1 + b.c1};
    }
    AffineLog scaled(const RI& k) const { return {k * c0, k * c1}; }
};

// Decay exponent a0 + a1*L + a2*L^2 in L = log n: the guarded quantity is
// >= exp(-eval(log n)) for every n >= 3 in scope.  Branch combination takes
// coefficientwise max (sound for L >= 0, at worst slack).
struct LogDecay {
    RI a0, a1, a2;
    LogDecay() = default;
    LogDecay(RI x, RI y, RI z)
        : a0(std::move(x)), a1(std::move(y)), a2(std::move(z)) {}
    static LogDecay zero(mpfr_prec_t prec) {
        return {RI(0, prec), RI(0, prec), RI(0, prec)};
    }
    static LogDecay affine(const AffineLog& f) {
        return {f.c0, f.c1, RI(0, f.c0.prec())};
    }
    RI eval(const RI& logn) const { return a0 + (a1 + a2 * logn) * logn; }
    friend LogDecay operator+(const LogDecay& a, const LogDecay& b) {
        return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2};
    }
    friend LogDecay ld_max(const LogDecay& a, const LogDecay& b) {
        return {ri_max(a.a0, b.a0), ri_max(a.a1, b.a1), ri_max(a.a2, b.a2)};
    }
    LogDecay scaled(const RI& k) const {
        return {k * a0, k * a1, k * a2};
    }
};

// Archimedean two-term bound.  K of degree <= deg contains a and l (viewed in
// C through some embedding), a*l^n != 1, h(a) <= h_alpha(log n), n >= 3.  Then
//   |a l^n - 1| >= exp(-result(log n)).
// Assembly: either |a l^n - 1| > 1/2, or the principal linear form
// Lam = log a + n log l - 2m pi i is nonzero with |2m| <= n+2, and the s = 3
// linear-forms bound applies with A1 = d h(a)+pi, A2 = d h(l)+pi, A3 = pi,
// B = n+2; finally |a l^n - 1| >= |Lam|/1.39 on |a l^n - 1| <= 1/2.
LogDecay baker_arch(long deg, const AffineLog& h_alpha, const RI& h_lambda,
                    mpfr_prec_t prec);

// Finite-place counterpart, uniform over the valuation pattern of a: at a
// place over p with ramification e, residue degree f (local degree e*f), for
// any a with h(a) <= h_alpha(log n) and any n >= 3 with a*l^n != 1,
//   |a l^n - 1|_v >= exp(-result(log n)),
// where |x|_v = p^(-v_P(x)/e).  v_lambda is the exact valuation v_P(l).
// Branches: v_P(l) != 0 pins n at a single exceptional index that is itself
// <= (d/log 2) h(a), where the Liouville bound suffices; v_P(a) != 0 makes
// |a l^n - 1|_v >= min(1, |a|_v); otherwise the p-adic linear-forms bound
// applies with s = 2, B = n.
LogDecay baker_finite(long deg, const Int& p, long e_ram, long f_res,
                      long v_lambda, const AffineLog& h_alpha,
                      const RI& h_lambda, mpfr_prec_t prec);

// Least N >= 3 (found by doubling + bisection) such that gap * n > dec(log n)
// for ALL n >= N.  gap.lo must be > 0.  The returned point also certifies
// gap*N > a1 + 2 a2 log N, which makes the margin increasing beyond it.
Int decay_crossover(const RI& gap, const LogDecay& dec);

// Least N >= 3 with n * h_lambda > h_target(log n) for all n >= N: resolves
// "n is bounded whenever a relation forces n h(l) <= h(a(n))" branches
// (a*l^n = 1 and friends).  h_lambda.lo must be > 0.
Int power_identity_cap(const RI& h_lambda, const AffineLog& h_target);

}  // namespace skolem
