#include "skolem/numberfield.hpp"

#include <algorithm>

namespace skolem {

namespace {

bool is_monic_integral(const QPoly& m) {
    if (m.degree() < 1 || m.lead() != 1) return false;
    for (int i = 0; i <= m.degree(); ++i)
        if (den(m[i]) != 1) return false;
    return true;
}

mpfr_prec_t prec_for(const Rat& eps) {
    std::size_t nb = mpz_sizeinbase(num(eps).get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(den(eps).get_mpz_t(), 2);
    std::size_t extra = db > nb ? db - nb : 0;
    return static_cast<mpfr_prec_t>(std::min<std::size_t>(96 + extra, 1 << 22));
}

}  // namespace

NumberField::NumberField() : NumberField(AlgebraicNumber(Rat(0))) {}

NumberField::NumberField(const AlgebraicNumber& theta)
    : D_(std::max(theta.degree(), 1)),
      theta_(theta),
      sys_(theta.system()),
      tidx_(theta.root_index()) {
    if (theta.is_rational()) {
        check_input(den(theta.rational_value()) == 1,
                    "field generator must be an algebraic integer");
        m_ = QPoly::x() - QPoly::constant(theta.rational_value());
    } else {
        m_ = theta.minpoly();
        check_input(is_monic_integral(m_),
                    "field generator must be an algebraic integer");
    }
}

FVec NumberField::one() const { return from_rat(Rat(1)); }

FVec NumberField::from_rat(const Rat& q) const {
    FVec v(D_, Rat(0));
    v[0] = q;
    return v;
}

FVec NumberField::gen() const {
    check_input(D_ >= 2, "prime field has no generator");
    FVec v(D_, Rat(0));
    v[1] = 1;
    return v;
}

bool NumberField::is_zero(const FVec& x) const {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

bool NumberField::is_rational(const FVec& x) const {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] != 0) return false;
    return true;
}

Rat NumberField::rational_value(const FVec& x) const {
    check_input(is_rational(x), "element not rational");
    return x[0];
}

FVec NumberField::add(const FVec& a, const FVec& b) const {
    FVec r(D_);
    for (int i = 0; i < D_; ++i) r[i] = a[i] + b[i];
    return r;
}

FVec NumberField::sub(const FVec& a, const FVec& b) const {
    FVec r(D_);
    for (int i = 0; i < D_; ++i) r[i] = a[i] - b[i];
    return r;
}

FVec NumberField::neg(const FVec& a) const {
    FVec r(D_);
    for (int i = 0; i < D_; ++i) r[i] = -a[i];
    return r;
}

FVec NumberField::mul_rat(const FVec& a, const Rat& q) const {
    FVec r(D_);
    for (int i = 0; i < D_; ++i) r[i] = a[i] * q;
    return r;
}

QPoly NumberField::to_poly(const FVec& a) const {
    check_input(static_cast<int>(a.size()) == D_, "bad coordinate length");
    return QPoly(std::vector<Rat>(a.begin(), a.end()));
}

FVec NumberField::from_poly(const QPoly& p) const {
    QPoly r = p.divrem(m_).second;
    FVec v(D_, Rat(0));
    for (int i = 0; i <= r.degree(); ++i) v[i] = r[i];
    return v;
}

FVec NumberField::mul(const FVec& a, const FVec& b) const {
    return from_poly(to_poly(a) * to_poly(b));
}

FVec NumberField::inverse(const FVec& a) const {
    check_input(!is_zero(a), "division by zero field element");
    QPoly s, t;
    QPoly g = poly_ext_gcd(to_poly(a), m_, &s, &t);
    require(g.degree() == 0, "minimal polynomial not irreducible");
    return from_poly(s);
}

FVec NumberField::div(const FVec& a, const FVec& b) const {
    return mul(a, inverse(b));
}

FVec NumberField::pow_ui(const FVec& a, unsigned long n) const {
    FVec r = one(), base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

QPoly NumberField::charpoly(const FVec& a) const {
    // Multiplication matrix in the power basis, scaled to integers.
    std::vector<FVec> cols(D_);
    FVec cur = from_rat(Rat(1));
    FVec av = a;
    for (int j = 0; j < D_; ++j) {
        cols[j] = mul(av, cur);
        if (j + 1 < D_) cur = from_poly(to_poly(cur) * QPoly::x());
    }
    Int ell(1);
    for (int j = 0; j < D_; ++j)
        for (int i = 0; i < D_; ++i) ell = lcm(ell, den(cols[j][i]));
    std::vector<std::vector<Int>> N(D_, std::vector<Int>(D_));
    for (int i = 0; i < D_; ++i)
        for (int j = 0; j < D_; ++j) {
            Rat scaled = cols[j][i] * Rat(ell);
            N[i][j] = num(scaled);
        }
    // det(xI - M) = det(ell*x*I - N) / ell^D at x = 0..D, then interpolate.
    Rat ellD(1);
    for (int i = 0; i < D_; ++i) ellD *= Rat(ell);
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= D_; ++k) {
        std::vector<std::vector<Int>> mtx = N;
        for (int i = 0; i < D_; ++i) {
            mtx[i][i] = Int(ell * k) - mtx[i][i];
            for (int j = 0; j < D_; ++j)
                if (j != i) mtx[i][j] = -mtx[i][j];
        }
        Int d = bareiss_det(mtx);
        xs.push_back(Rat(k));
        ys.push_back(Rat(d) / ellD);
    }
    QPoly cp = interpolate(xs, ys);
    require(cp.degree() == D_ && cp.lead() == 1, "charpoly shape");
    return cp;
}

QPoly NumberField::minpoly_of(const FVec& a) const {
    if (is_rational(a)) return QPoly::x() - QPoly::constant(a[0]);
    return squarefree_part(charpoly(a));
}

Rat NumberField::norm(const FVec& a) const {
    QPoly cp = charpoly(a);
    Rat c0 = cp[0];
    return D_ % 2 == 0 ? c0 : -c0;
}

AlgebraicNumber NumberField::to_algebraic(const FVec& a) const {
    if (is_rational(a)) return AlgebraicNumber(a[0]);
    QPoly mp = minpoly_of(a);
    FVec ac = a;
    return AlgebraicNumber::locate(
        mp, [this, ac](const Rat& eps) { return embed(ac, tidx_, eps); });
}

CI NumberField::embed(const FVec& a, int emb, const Rat& eps) const {
    mpfr_prec_t prec = prec_for(eps);
    if (D_ == 1) return CI::of(a[0], Rat(0), prec);
    check_input(emb >= 0 && emb < sys_->count(), "embedding index");
    sys_->refine(emb, eps);
    CI x = sys_->box(emb);
    CI acc = CI::of(a[D_ - 1], Rat(0), prec);
    for (int i = D_ - 2; i >= 0; --i)
        acc = acc * x + CI::of(a[i], Rat(0), prec);
    return acc;
}

RI NumberField::height_of(const FVec& a) const {
    if (is_rational(a)) return AlgebraicNumber(a[0]).height();
    QPoly mp = minpoly_of(a);
    return AlgebraicNumber::roots_of(mp)[0].height();
}

namespace {

// Dense polynomials over a number field K, for the relative gcd used in the
// primitive-element certification.
using XPoly = std::vector<FVec>;

void xtrim(const NumberField& K, XPoly& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

XPoly xmonic(const NumberField& K, XPoly f) {
    xtrim(K, f);
    if (f.empty()) return f;
    FVec inv = K.inverse(f.back());
    for (auto& c : f) c = K.mul(c, inv);
    return f;
}

// Remainder of a by monic b.
XPoly xrem_monic(const NumberField& K, XPoly a, const XPoly& b) {
    xtrim(K, a);
    while (a.size() >= b.size()) {
        FVec q = a.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = K.sub(a[off + i], K.mul(q, b[i]));
        a.pop_back();
        xtrim(K, a);
    }
    return a;
}

XPoly xgcd(const NumberField& K, XPoly a, XPoly b) {
    a = xmonic(K, std::move(a));
    b = xmonic(K, std::move(b));
    while (!b.empty()) {
        XPoly r = xmonic(K, xrem_monic(K, a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

XPoly xfrom_qpoly(const NumberField& K, const QPoly& p) {
    XPoly f(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) f[i] = K.from_rat(p[i]);
    return f;
}

// m evaluated at (gen - c*z), as a polynomial in z over K.
XPoly xcompose_shift(const NumberField& K, const QPoly& m, const Rat& c) {
    XPoly y(2);
    y[0] = K.gen();
    y[1] = K.from_rat(-c);
    XPoly acc(1, K.from_rat(m.lead()));
    for (int k = m.degree() - 1; k >= 0; --k) {
        XPoly next(acc.size() + 1, K.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] = K.add(next[i], K.mul(acc[i], y[0]));
            next[i + 1] = K.add(next[i + 1], K.mul(acc[i], y[1]));
        }
        next[0] = K.add(next[0], K.from_rat(m[k]));
        acc = std::move(next);
    }
    xtrim(K, acc);
    return acc;
}

// Monic integral minimal polynomial scaling: mu = lead * lambda is an
// algebraic integer whenever lambda has primitive minpoly with that lead.
AlgebraicNumber integralize(const AlgebraicNumber& x, Int* scale) {
    if (x.is_rational()) {
        *scale = den(x.rational_value());
        return AlgebraicNumber(x.rational_value() * Rat(*scale));
    }
    ZPrimPart pp = primitive_part(x.minpoly());
    Int lead = pp.prim.back();
    *scale = lead;
    return x * AlgebraicNumber(Rat(lead));
}

}  // namespace

FieldBuild build_field(const std::vector<AlgebraicNumber>& nums) {
    NumberField F;  // current field, starts at Q
    // Coordinates of already-processed numbers in the current field.
    std::vector<FVec> coords;
    bool have_field = false;

    for (const AlgebraicNumber& lam : nums) {
        if (lam.is_rational()) {
            coords.push_back(F.from_rat(lam.rational_value()));
            continue;
        }
        Int scale(1);
        AlgebraicNumber mu = integralize(lam, &scale);
        if (!have_field) {
            F = NumberField(mu);
            for (auto& w : coords) w = F.from_rat(w[0]);
            coords.push_back(F.mul_rat(F.gen(), Rat(1) / Rat(scale)));
            have_field = true;
            continue;
        }
        // theta' = theta + c*mu for small c; certified primitive when the
        // relative gcd below is linear, which also yields mu's coordinates.
        bool done = false;
        for (int attempt = 0; attempt < 40 && !done; ++attempt) {
            long c = (attempt / 2 + 1) * (attempt % 2 == 0 ? 1 : -1);
            AlgebraicNumber theta2 =
                F.theta() + AlgebraicNumber(Rat(c)) * mu;
            if (theta2.is_rational()) continue;
            NumberField K(theta2);
            XPoly A = xfrom_qpoly(K, mu.minpoly());
            XPoly B = xcompose_shift(K, F.minpoly(), Rat(c));
            XPoly h = xgcd(K, std::move(A), std::move(B));
            require(h.size() >= 2, "relative gcd lost the common root");
            if (h.size() != 2) continue;  // not primitive for this c
            FVec mu_in_K = K.neg(h[0]);  // h is monic: root is -h[0]
            FVec theta_in_K =
                K.sub(K.gen(), K.mul_rat(mu_in_K, Rat(c)));
            // Rebase old coordinates through theta = theta' - c*mu.
            std::vector<FVec> rebased;
            rebased.reserve(coords.size() + 1);
            for (const auto& w : coords) {
                FVec acc = K.zero();
                for (int i = F.degree() - 1; i >= 0; --i) {
                    acc = K.mul(acc, theta_in_K);
                    acc = K.add(acc, K.from_rat(w[i]));
                }
                rebased.push_back(std::move(acc));
            }
            rebased.push_back(K.mul_rat(mu_in_K, Rat(1) / Rat(scale)));
            F = K;
            coords = std::move(rebased);
            done = true;
        }
        require(done, "primitive element search exhausted");
    }
    return FieldBuild{std::move(F), std::move(coords)};
}

}  // namespace skolem
