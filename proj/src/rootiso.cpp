#include "skolem/rootiso.hpp"

#include <algorithm>
#include <cmath>

namespace skolem {

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> s;
    s.push_back(f);
    QPoly d = f.derivative();
    if (d.is_zero()) return s;
    s.push_back(d);
    while (s.back().degree() > 0) {
        QPoly r = s[s.size() - 2].divrem(s.back()).second;
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int count_real_roots(const QPoly& f, const Rat& a, const Rat& b) {
    check_input(f.degree() >= 1, "constant polynomial");
    check_input(a <= b, "bad interval");
    auto chain = sturm_chain(f);
    return variations_at(chain, a) - variations_at(chain, b);
}

Rat cauchy_root_bound(const QPoly& f) {
    check_input(f.degree() >= 1, "constant polynomial");
    Rat lc = abs(f[f.degree()]);
    Rat m(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rat av = abs(f[i]);
        if (av > m) m = av;
    }
    return Rat(1) + m / lc;
}

namespace {

struct RealIsolator {
    const QPoly& f;
    std::vector<QPoly> chain;
    std::vector<std::pair<Rat, Rat>> out;

    int vars(const Rat& x) { return variations_at(chain, x); }

    // roots of f in (a, b), given f(a) != 0 and f(b) != 0
    void split(const Rat& a, const Rat& b, int va, int vb) {
        int c = va - vb;
        if (c == 0) return;
        if (c == 1) {
            out.emplace_back(a, b);
            return;
        }
        Rat m = (a + b) / 2;
        if (f.eval(m) == 0) {
            out.emplace_back(m, m);
            Rat d = (b - a) / 4;
            for (;;) {
                if (f.eval(m - d) != 0 && f.eval(m + d) != 0 &&
                    vars(m - d) - vars(m + d) == 1)
                    break;
                d /= 2;
            }
            split(a, m - d, va, vars(m - d));
            split(m + d, b, vars(m + d), vb);
        } else {
            int vm = vars(m);
            split(a, m, va, vm);
            split(m, b, vm, vb);
        }
    }
};

}  // namespace

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& f) {
    check_input(f.degree() >= 1, "constant polynomial");
    RealIsolator iso{f, sturm_chain(f), {}};
    Rat bound = cauchy_root_bound(f);
    iso.split(-bound, bound, iso.vars(-bound), iso.vars(bound));
    std::sort(iso.out.begin(), iso.out.end());
    return iso.out;
}

CI eval_zpoly(const std::vector<Int>& f, const CI& x) {
    mpfr_prec_t p = x.re().prec();
    CI acc(RI(0L, p), RI(0L, p));
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * x;
        acc = acc + CI(RI::of(f[i], p), RI(0L, p));
    }
    return acc;
}

RI eval_zpoly(const std::vector<Int>& f, const RI& x) {
    mpfr_prec_t p = x.prec();
    RI acc(0L, p);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + RI::of(f[i], p);
    return acc;
}

Rat root_separation_bound(const std::vector<Int>& f) {
    // Mahler: sep(f) > sqrt(3 |disc f|) * d^{-(d+2)/2} * ||f||_2^{-(d-1)}
    int d = static_cast<int>(f.size()) - 1;
    check_input(d >= 2, "separation bound needs degree >= 2");
    std::vector<Rat> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
    QPoly qf{std::vector<Rat>(c)};
    Rat res = resultant(qf, qf.derivative());
    // disc = res / lc (up to sign)
    Rat disc = abs(res / Rat(f.back()));
    require(disc != 0, "separation bound of non-squarefree polynomial");
    Int norm2sq(0);
    for (const auto& a : f) norm2sq += a * a;
    for (mpfr_prec_t p = 128;; p *= 2) {
        RI num = ri_sqrt(RI::of(disc, p) * RI::of(Rat(3), p));
        RI dd = RI::of(Int(d), p);
        RI den = ri_sqrt(ri_pow_ui(dd, static_cast<unsigned long>(d) + 2));
        den = den * ri_sqrt(ri_pow_ui(RI::of(norm2sq, p),
                                      static_cast<unsigned long>(d) - 1));
        RI sep = num / den;
        Rat out = sep.lo_rat();
        if (out > 0) return out;
        require(p < (1 << 16), "separation bound underflow");
    }
}

// ---------------------------------------------------------------------------
// Complex machinery

namespace {

// approximate complex number at fixed precision, round-to-nearest
struct CApp {
    MF re, im;
    explicit CApp(mpfr_prec_t p) : re(p), im(p) {
        mpfr_set_zero(re.get(), 1);
        mpfr_set_zero(im.get(), 1);
    }
};

void capp_add(CApp& r, const CApp& a, const CApp& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void capp_sub(CApp& r, const CApp& a, const CApp& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void capp_mul(CApp& r, const CApp& a, const CApp& b, MF& t1, MF& t2) {
    // r may not alias a or b
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_fma(r.im.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), t1.get(), MPFR_RNDN);
}

void capp_div(CApp& r, const CApp& a, const CApp& b, MF& t1, MF& t2, MF& t3) {
    // denom = |b|^2
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(t1.get(), b.im.get(), b.im.get(), t1.get(), MPFR_RNDN);
    // re = (a.re*b.re + a.im*b.im)/denom
    mpfr_mul(t2.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_fma(t2.get(), a.im.get(), b.im.get(), t2.get(), MPFR_RNDN);
    // im = (a.im*b.re - a.re*b.im)/denom
    mpfr_mul(t3.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_fms(t3.get(), a.im.get(), b.re.get(), t3.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), t2.get(), t1.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t3.get(), t1.get(), MPFR_RNDN);
}

void capp_abs(MF& out, const CApp& a) {
    mpfr_hypot(out.get(), a.re.get(), a.im.get(), MPFR_RNDN);
}

// Horner evaluation of f and f' at z.
void capp_eval(const std::vector<Int>& f, const CApp& z, CApp& fv, CApp& dv,
               mpfr_prec_t p) {
    MF t1(p), t2(p);
    CApp acc(p), dacc(p), tmp(p);
    for (std::size_t i = f.size(); i-- > 0;) {
        // dacc = dacc*z + acc
        capp_mul(tmp, dacc, z, t1, t2);
        capp_add(dacc, tmp, acc);
        // acc = acc*z + f[i]
        capp_mul(tmp, acc, z, t1, t2);
        MF ci(p);
        mpfr_set_z(ci.get(), f[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(tmp.re.get(), tmp.re.get(), ci.get(), MPFR_RNDN);
        acc.re = tmp.re;
        acc.im = tmp.im;
    }
    fv.re = acc.re;
    fv.im = acc.im;
    dv.re = dacc.re;
    dv.im = dacc.im;
}

// Aberth-Ehrlich: approximate all roots simultaneously.
std::vector<CApp> aberth(const std::vector<Int>& f, mpfr_prec_t p,
                         double radius) {
    int n = static_cast<int>(f.size()) - 1;
    std::vector<CApp> z;
    z.reserve(n);
    for (int k = 0; k < n; ++k) {
        CApp c(p);
        double th = (2.0 * 3.14159265358979 * k + 0.7) / n + 0.3;
        double r = radius * (0.55 + 0.4 * (k + 1.0) / n);
        mpfr_set_d(c.re.get(), r * std::cos(th), MPFR_RNDN);
        mpfr_set_d(c.im.get(), r * std::sin(th), MPFR_RNDN);
        z.push_back(c);
    }
    MF t1(p), t2(p), t3(p), wa(p), za(p);
    CApp fv(p), dv(p), nrec(p), ssum(p), w(p), tmp(p), one(p);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    MF tol(p);
    mpfr_set_ui_2exp(tol.get(), 1, -(p - 8), MPFR_RNDN);
    int iters = 60 + 12 * static_cast<int>(p) / n;
    if (iters > 800) iters = 800;
    for (int it = 0; it < iters; ++it) {
        bool done = true;
        for (int i = 0; i < n; ++i) {
            capp_eval(f, z[i], fv, dv, p);
            if (mpfr_zero_p(fv.re.get()) && mpfr_zero_p(fv.im.get())) continue;
            if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) {
                // nudge off a critical point
                mpfr_mul_d(z[i].re.get(), z[i].re.get(), 1.0000001,
                           MPFR_RNDN);
                mpfr_add_d(z[i].im.get(), z[i].im.get(), 1e-7, MPFR_RNDN);
                done = false;
                continue;
            }
            capp_div(nrec, fv, dv, t1, t2, t3);  // Newton correction
            // sum over j != i of 1/(z_i - z_j)
            mpfr_set_zero(ssum.re.get(), 1);
            mpfr_set_zero(ssum.im.get(), 1);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                capp_sub(tmp, z[i], z[j]);
                if (mpfr_zero_p(tmp.re.get()) && mpfr_zero_p(tmp.im.get())) {
                    mpfr_set_d(tmp.re.get(), 1e-20, MPFR_RNDN);
                }
                capp_div(w, one, tmp, t1, t2, t3);
                capp_add(ssum, ssum, w);
            }
            capp_mul(tmp, nrec, ssum, t1, t2);
            capp_sub(tmp, one, tmp);
            capp_div(w, nrec, tmp, t1, t2, t3);
            capp_sub(z[i], z[i], w);
            capp_abs(wa, w);
            capp_abs(za, z[i]);
            mpfr_add_ui(za.get(), za.get(), 1, MPFR_RNDN);
            mpfr_mul(za.get(), za.get(), tol.get(), MPFR_RNDN);
            if (mpfr_cmp(wa.get(), za.get()) > 0) done = false;
        }
        if (done) break;
    }
    return z;
}

Rat mf_to_rat(mpfr_srcptr x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

struct Certified {
    bool ok = false;
    CI box;
};

// Krawczyk test on box X: certifies exactly one root of f inside X and
// returns a (possibly smaller) enclosure.
Certified krawczyk(const std::vector<Int>& f, const std::vector<Int>& df,
                   const CI& X, mpfr_prec_t p) {
    Certified res;
    Rat mre = X.re().mid_rat(), mim = X.im().mid_rat();
    CI mid = CI::of(mre, mim, p);
    CApp mapp(p);
    mpfr_set_q(mapp.re.get(), mre.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(mapp.im.get(), mim.get_mpq_t(), MPFR_RNDN);
    CApp fv(p), dv(p);
    capp_eval(f, mapp, fv, dv, p);
    if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) return res;
    Rat cre = mf_to_rat(dv.re.get()), cim = mf_to_rat(dv.im.get());
    if (cre == 0 && cim == 0) return res;
    CI c = CI::of(cre, cim, p);
    CI Fm = eval_zpoly(f, mid);
    CI Fp = eval_zpoly(df, X);
    CI onei = CI::of(Rat(1), Rat(0), p);
    CI T = onei - Fp / c;
    if (!(T.abs().hi_rat() < 1)) return res;
    CI K = mid - Fm / c + T * (X - mid);
    // K strictly inside X?
    bool inside =
        X.re().lo_rat() < K.re().lo_rat() && K.re().hi_rat() < X.re().hi_rat() &&
        X.im().lo_rat() < K.im().lo_rat() && K.im().hi_rat() < X.im().hi_rat();
    if (!inside) return res;
    auto shr = ci_intersect(K, X);
    require(shr.has_value(), "krawczyk intersection empty");
    res.ok = true;
    res.box = *shr;
    return res;
}

bool boxes_disjoint(const CI& a, const CI& b) {
    bool re_dis = a.re().hi_rat() < b.re().lo_rat() ||
                  b.re().hi_rat() < a.re().lo_rat();
    bool im_dis = a.im().hi_rat() < b.im().lo_rat() ||
                  b.im().hi_rat() < a.im().lo_rat();
    return re_dis || im_dis;
}

}  // namespace

int RootSystem::conj_index(int i) const {
    at(i);
    if (i < real_count_) return i;
    return ((i - real_count_) % 2 == 0) ? i + 1 : i - 1;
}

CI RootSystem::box(int i) const {
    std::lock_guard<std::mutex> lk(mu_);
    return roots_[at(i)].cbox;
}

std::pair<Rat, Rat> RootSystem::real_bounds(int i) const {
    std::lock_guard<std::mutex> lk(mu_);
    const RootBox& rb = roots_[at(i)];
    check_input(rb.real, "not a real root");
    return {rb.lo, rb.hi};
}

Rat RootSystem::separation_bound() {
    std::lock_guard<std::mutex> lk(mu_);
    if (sep_ == 0) {
        if (count() < 2)
            sep_ = Rat(1);
        else
            sep_ = root_separation_bound(zf_);
    }
    return sep_;
}

void RootSystem::refine_real(RootBox& rb, const Rat& eps) {
    if (rb.lo == rb.hi) return;
    int slo = sgn(qf_.eval(rb.lo));
    require(slo != 0 && sgn(qf_.eval(rb.hi)) == -slo,
            "isolating interval lost sign change");
    while (rb.hi - rb.lo > eps) {
        Rat m = (rb.lo + rb.hi) / 2;
        int sm = sgn(qf_.eval(m));
        if (sm == 0) {
            rb.lo = m;
            rb.hi = m;
            break;
        }
        if (sm == slo)
            rb.lo = m;
        else
            rb.hi = m;
    }
    rb.cbox = CI(RI::of_endpoints(rb.lo, rb.hi, rb.prec), RI(0L, rb.prec));
}

void RootSystem::refine_complex(RootBox& rb, const Rat& eps) {
    std::vector<Int> df(zf_.size() > 1 ? zf_.size() - 1 : 0);
    for (std::size_t i = 1; i < zf_.size(); ++i)
        df[i - 1] = zf_[i] * static_cast<long>(i);
    auto width_ok = [&](const CI& b) {
        return b.re().width().hi_rat() <= eps &&
               b.im().width().hi_rat() <= eps;
    };
    int stall = 0;
    while (!width_ok(rb.cbox)) {
        mpfr_prec_t p = rb.prec;
        // interval Newton step: X' = (m - f(m)/f'(X)) ∩ X
        Rat mre = rb.cbox.re().mid_rat(), mim = rb.cbox.im().mid_rat();
        CI mid = CI::of(mre, mim, p);
        CI Fp = eval_zpoly(df, rb.cbox);
        Rat wbefore = rb.cbox.re().width().hi_rat() +
                      rb.cbox.im().width().hi_rat();
        bool progressed = false;
        if (!Fp.contains_zero()) {
            CI Fm = eval_zpoly(zf_, mid);
            CI N = mid - Fm / Fp;
            auto nx = ci_intersect(N, rb.cbox);
            require(nx.has_value(), "newton step lost the root");
            Rat wafter =
                nx->re().width().hi_rat() + nx->im().width().hi_rat();
            rb.cbox = *nx;
            progressed = wafter <= wbefore * Rat(3, 4);
        }
        if (!progressed) {
            if (++stall >= 2) {
                rb.prec = rb.prec * 2;
                stall = 0;
                require(rb.prec <= 1 << 20, "refinement precision runaway");
                // re-husk the box at higher precision
                CI wide(RI::of_endpoints(rb.cbox.re().lo_rat(),
                                         rb.cbox.re().hi_rat(), rb.prec),
                        RI::of_endpoints(rb.cbox.im().lo_rat(),
                                         rb.cbox.im().hi_rat(), rb.prec));
                rb.cbox = wide;
            }
        } else {
            stall = 0;
        }
    }
}

void RootSystem::refine(int i, const Rat& eps) {
    std::lock_guard<std::mutex> lk(mu_);
    RootBox& rb = roots_[at(i)];
    if (rb.real) {
        refine_real(rb, eps);
        return;
    }
    // operate on the upper root of the pair, mirror afterwards
    int up = ((i - real_count_) % 2 == 0) ? i : i - 1;
    RootBox& urb = roots_[static_cast<std::size_t>(up)];
    refine_complex(urb, eps);
    roots_[static_cast<std::size_t>(up) + 1].cbox = urb.cbox.conj();
    roots_[static_cast<std::size_t>(up) + 1].prec = urb.prec;
}

std::shared_ptr<RootSystem> RootSystem::isolate(const QPoly& fin) {
    check_input(fin.degree() >= 1, "cannot isolate roots of a constant");
    auto rs = std::make_shared<RootSystem>();
    ZPrimPart pp = primitive_part(fin);
    rs->zf_ = pp.prim;
    {
        std::vector<Rat> c(rs->zf_.size());
        for (std::size_t i = 0; i < rs->zf_.size(); ++i) c[i] = Rat(rs->zf_[i]);
        rs->qf_ = QPoly(std::move(c));
    }
    require(squarefree_part(rs->qf_).degree() == rs->qf_.degree(),
            "root isolation requires squarefree input");

    int n = rs->qf_.degree();
    auto real_iv = isolate_real_roots(rs->qf_);
    int r = static_cast<int>(real_iv.size());
    rs->real_count_ = r;
    int u = (n - r) / 2;
    require(r + 2 * u == n, "real/complex root count mismatch");

    for (auto& [lo, hi] : real_iv) {
        RootBox rb;
        rb.real = true;
        rb.lo = lo;
        rb.hi = hi;
        rb.prec = 128;
        rb.cbox = CI(RI::of_endpoints(lo, hi, rb.prec), RI(0L, rb.prec));
        rs->roots_.push_back(std::move(rb));
    }

    if (u > 0) {
        std::vector<Int> df(rs->zf_.size() - 1);
        for (std::size_t i = 1; i < rs->zf_.size(); ++i)
            df[i - 1] = rs->zf_[i] * static_cast<long>(i);
        double radius = cauchy_root_bound(rs->qf_).get_d();
        mpfr_prec_t p = 192;
        std::vector<RootBox> upper;
        for (; p <= (1 << 20); p *= 2) {
            upper.clear();
            auto zs = aberth(rs->zf_, p, radius);
            // order by decreasing imaginary part, take the top u
            std::vector<int> idx(zs.size());
            for (std::size_t i = 0; i < zs.size(); ++i)
                idx[i] = static_cast<int>(i);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                return mpfr_cmp(zs[a].im.get(), zs[b].im.get()) > 0;
            });
            bool all_ok = true;
            for (int k = 0; k < u && all_ok; ++k) {
                const CApp& z = zs[idx[k]];
                Rat zre = mf_to_rat(z.re.get()), zim = mf_to_rat(z.im.get());
                if (zim <= 0) {
                    all_ok = false;
                    break;
                }
                bool cert = false;
                Rat h = Rat(1, 4) * zim;
                Rat hmin = zim / Rat(Int(1) << 64);
                for (int attempt = 0; attempt < 40 && !cert; ++attempt) {
                    CI X(RI::of_endpoints(zre - h, zre + h, p),
                         RI::of_endpoints(zim - h, zim + h, p));
                    auto c = krawczyk(rs->zf_, df, X, p);
                    if (c.ok && c.box.im().lo_rat() > 0) {
                        RootBox rb;
                        rb.real = false;
                        rb.prec = p;
                        rb.cbox = c.box;
                        upper.push_back(std::move(rb));
                        cert = true;
                    } else {
                        h /= 8;
                        if (h < hmin) break;
                    }
                }
                if (!cert) all_ok = false;
            }
            if (!all_ok || static_cast<int>(upper.size()) != u) continue;
            // enforce pairwise disjointness
            bool disjoint = true;
            for (int a = 0; a < u && disjoint; ++a)
                for (int b = a + 1; b < u && disjoint; ++b)
                    if (!boxes_disjoint(upper[a].cbox, upper[b].cbox))
                        disjoint = false;
            if (!disjoint) {
                // refine every box and retry the check once
                for (auto& rb : upper) {
                    Rat w = rb.cbox.re().width().hi_rat() / 16;
                    if (w == 0) w = Rat(1, 1000000);
                    rs->refine_complex(rb, w);
                }
                disjoint = true;
                for (int a = 0; a < u && disjoint; ++a)
                    for (int b = a + 1; b < u && disjoint; ++b)
                        if (!boxes_disjoint(upper[a].cbox, upper[b].cbox))
                            disjoint = false;
            }
            if (disjoint) break;
        }
        require(static_cast<int>(upper.size()) == u,
                "complex root certification failed");
        // deterministic order among certified disjoint boxes
        std::sort(upper.begin(), upper.end(),
                  [](const RootBox& a, const RootBox& b) {
                      Rat ar = a.cbox.re().mid_rat(), br = b.cbox.re().mid_rat();
                      if (ar != br) return ar < br;
                      return a.cbox.im().mid_rat() < b.cbox.im().mid_rat();
                  });
        for (auto& rb : upper) {
            RootBox mirror;
            mirror.real = false;
            mirror.prec = rb.prec;
            mirror.cbox = rb.cbox.conj();
            rs->roots_.push_back(rb);
            rs->roots_.push_back(std::move(mirror));
        }
    }
    require(rs->count() == n, "lost roots during isolation");
    return rs;
}

}  // namespace skolem
