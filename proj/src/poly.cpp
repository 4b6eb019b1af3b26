#include "skolem/poly.hpp"

#include <sstream>

namespace skolem {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::of(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long a : coeffs) v.emplace_back(a);
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& a : r) a = -a;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& a) const {
    if (a == 0) return {};
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= a;
    return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
    Rat r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    require(!is_zero(), "monic of zero polynomial");
    return *this * (Rat(1) / lead());
}

QPoly QPoly::shift_var(const Rat& a) const {
    // Horner: p(x + a) built from the top coefficient down.
    QPoly r;
    QPoly xa{{a, Rat(1)}};
    for (std::size_t i = c_.size(); i-- > 0;) r = r * xa + QPoly::constant(c_[i]);
    return r;
}

QPoly QPoly::scale_var(const Rat& a) const {
    std::vector<Rat> r(c_);
    Rat f(1);
    for (std::size_t i = 1; i < r.size(); ++i) {
        f *= a;
        r[i] *= f;
    }
    return QPoly(std::move(r));
}

QPoly QPoly::negate_var() const {
    std::vector<Rat> r(c_);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
}

QPoly QPoly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return QPoly(std::move(r));
}

QPoly QPoly::compose_square() const {
    if (is_zero()) return {};
    std::vector<Rat> r(2 * c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::pow_times(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rat> r(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    require(!d.is_zero(), "division by zero polynomial");
    QPoly q;
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    std::vector<Rat> qc;
    if (static_cast<int>(rem.size()) - 1 >= dd) qc.assign(rem.size() - dd, Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < dd) break;
        std::size_t k = rem.size() - 1 - dd;
        Rat f = rem.back() / d.lead();
        qc[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d[i];
        rem.pop_back();
    }
    return {QPoly(std::move(qc)), QPoly(std::move(rem))};
}

QPoly QPoly::div_exact(const QPoly& d) const {
    auto [q, r] = divrem(d);
    require(r.is_zero(), "inexact polynomial division");
    return q;
}

std::string QPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rat mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

ZPrimPart primitive_part(const QPoly& p) {
    if (p.is_zero()) return {Rat(0), {}};
    Int l(1);
    for (const auto& a : p.coeffs()) l = lcm(l, den(a));
    Int g(0);
    std::vector<Int> z(p.coeffs().size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = num(p[i]) * (l / den(p[i]));
        g = gcd(g, z[i]);
    }
    Int sign = z.back() > 0 ? 1 : -1;
    g *= sign;
    for (auto& a : z) a /= g;
    Rat content(g, l);
    content.canonicalize();
    return {content, std::move(z)};
}

QPoly from_z(const std::vector<Int>& z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& a : z) c.emplace_back(a);
    return QPoly(std::move(c));
}

namespace {

// In-place pseudo-remainder sequence helpers over Z.
int zdeg(const std::vector<Int>& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(std::vector<Int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// prem(a, b): pseudo-remainder of a by b, with deg b <= deg a.
std::vector<Int> zprem(std::vector<Int> a, const std::vector<Int>& b) {
    int db = zdeg(b);
    const Int& lb = b.back();
    while (zdeg(a) >= db) {
        Int la = a.back();
        std::size_t k = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        a.pop_back();
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<Int> zprimitive(std::vector<Int> a) {
    if (a.empty()) return a;
    Int g(0);
    for (const auto& x : a) g = gcd(g, x);
    if (a.back() < 0) g = -g;
    for (auto& x : a) x /= g;
    return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.is_zero() ? QPoly{} : b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = primitive_part(a).prim;
    std::vector<Int> v = primitive_part(b).prim;
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Int> r = zprimitive(zprem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return from_z(u).monic();
}

// Fraction-free Bareiss determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                require(t % prev == 0, "bareiss divisibility");
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

QPoly poly_ext_gcd(const QPoly& a, const QPoly& b, QPoly* s, QPoly* t) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(Rat(1)), s1{};
    QPoly t0{}, t1 = QPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = r1;
        r1 = r;
        QPoly ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (r0.is_zero()) {
        *s = s0;
        *t = t0;
        return r0;
    }
    Rat lc = r0.lead();
    *s = s0 * (Rat(1) / lc);
    *t = t0 * (Rat(1) / lc);
    return r0.monic();
}

Rat resultant(const QPoly& a, const QPoly& b) {
    check_input(!a.is_zero() && !b.is_zero(), "zero polynomial");
    if (a.degree() == 0) {
        Rat r(1);
        for (int i = 0; i < b.degree(); ++i) r *= a[0];
        return r;
    }
    if (b.degree() == 0) {
        Rat r(1);
        for (int i = 0; i < a.degree(); ++i) r *= b[0];
        return r;
    }
    ZPrimPart pa = primitive_part(a), pb = primitive_part(b);
    // Res is homogeneous of degree deg(b) in a's coefficients and of
    // degree deg(a) in b's.
    Rat scale(1);
    for (int i = 0; i < b.degree(); ++i) scale *= pa.content;
    for (int i = 0; i < a.degree(); ++i) scale *= pb.content;
    int da = a.degree(), db = b.degree();
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Int>> syl(n, std::vector<Int>(n, Int(0)));
    // Rows 0..db-1: shifted copies of a (highest coefficient first).
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) syl[r][r + i] = pa.prim[da - i];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) syl[db + r][r + i] = pb.prim[db - i];
    Int det = bareiss_det(syl);
    return scale * Rat(det);
}

QPoly squarefree_part(const QPoly& a) {
    check_input(!a.is_zero(), "zero polynomial");
    if (a.degree() == 0) return QPoly::constant(Rat(1));
    QPoly g = poly_gcd(a, a.derivative());
    return a.div_exact(g).monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a) {
    check_input(!a.is_zero(), "zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    QPoly f = a.monic();
    if (f.degree() == 0) return out;
    // Yun's algorithm.
    QPoly fp = f.derivative();
    QPoly g = poly_gcd(f, fp);
    QPoly w = f.div_exact(g);
    QPoly y = fp.div_exact(g);
    int mult = 1;
    while (w.degree() > 0) {
        QPoly z = y - w.derivative();
        QPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h.monic(), mult);
        w = w.div_exact(h);
        y = z.div_exact(h);
        ++mult;
    }
    return out;
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    require(xs.size() == ys.size(), "interpolation size mismatch");
    // Newton form with divided differences.
    std::size_t n = xs.size();
    std::vector<Rat> dd(ys);
    QPoly result = QPoly::constant(dd.empty() ? Rat(0) : dd[0]);
    QPoly basis = QPoly::constant(Rat(1));
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
        }
        basis = basis * QPoly{{-xs[k - 1], Rat(1)}};
        result = result + basis * dd[k];
    }
    return result;
}

// Power sums p_1..p_n of the roots of a monic polynomial, via Newton's
// identities.
std::vector<Rat> power_sums(const QPoly& f, int n) {
    int d = f.degree();
    // a_i = coefficient of x^(d-i)
    auto a = [&](int i) -> Rat { return i <= d ? f[d - i] : Rat(0); };
    std::vector<Rat> p(n + 1);
    p[0] = Rat(d);
    for (int k = 1; k <= n; ++k) {
        Rat s = -Rat(k) * a(k);
        for (int i = 1; i < k; ++i) s -= a(i) * p[k - i];
        p[k] = s;
    }
    return p;
}

// Monic polynomial of degree n with prescribed power sums p_1..p_n.
QPoly poly_from_power_sums(const std::vector<Rat>& p, int n) {
    // k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<Rat> e(n + 1);
    e[0] = Rat(1);
    for (int k = 1; k <= n; ++k) {
        Rat s(0);
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            s += Rat(sign) * e[k - i] * p[i];
            sign = -sign;
        }
        e[k] = s / Rat(k);
    }
    std::vector<Rat> c(n + 1);
    int sign = 1;
    for (int k = 0; k <= n; ++k) {
        c[n - k] = Rat(sign) * e[k];
        sign = -sign;
    }
    return QPoly(std::move(c));
}

QPoly composed_sum(const QPoly& a, const QPoly& b) {
    check_input(a.degree() >= 1 && b.degree() >= 1, "constant operand");
    check_input(a.lead() == 1 && b.lead() == 1, "monic operands expected");
    int n = a.degree() * b.degree();
    std::vector<Rat> pa = power_sums(a, n), pb = power_sums(b, n);
    // EGF product: sum_k p_k(C) t^k / k! = (sum p_k(A) t^k/k!)(sum p_k(B) t^k/k!)
    std::vector<Rat> fact(n + 1);
    fact[0] = Rat(1);
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * Rat(k);
    std::vector<Rat> ea(n + 1), eb(n + 1), ec(n + 1);
    for (int k = 0; k <= n; ++k) {
        ea[k] = pa[k] / fact[k];
        eb[k] = pb[k] / fact[k];
    }
    for (int k = 0; k <= n; ++k) {
        Rat s(0);
        for (int i = 0; i <= k; ++i) s += ea[i] * eb[k - i];
        ec[k] = s;
    }
    std::vector<Rat> pc(n + 1);
    for (int k = 0; k <= n; ++k) pc[k] = ec[k] * fact[k];
    return poly_from_power_sums(pc, n);
}

QPoly composed_product(const QPoly& a, const QPoly& b) {
    check_input(a.degree() >= 1 && b.degree() >= 1, "constant operand");
    check_input(a.lead() == 1 && b.lead() == 1, "monic operands expected");
    int n = a.degree() * b.degree();
    std::vector<Rat> pa = power_sums(a, n), pb = power_sums(b, n);
    std::vector<Rat> pc(n + 1);
    for (int k = 0; k <= n; ++k) pc[k] = pa[k] * pb[k];
    return poly_from_power_sums(pc, n);
}

QPoly composed_power(const QPoly& a, unsigned long n) {
    check_input(a.degree() >= 1, "constant operand");
    check_input(a.lead() == 1, "monic operand expected");
    check_input(n >= 1, "power must be positive");
    int d = a.degree();
    std::vector<Rat> pa = power_sums(a, d * static_cast<int>(n));
    std::vector<Rat> pc(d + 1);
    for (int k = 0; k <= d; ++k) pc[k] = pa[static_cast<std::size_t>(k) * n];
    return poly_from_power_sums(pc, d);
}

QPoly resultant_y(const QPoly& A, const std::vector<QPoly>& B_y, int xdeg_bound) {
    int npts = xdeg_bound + 1;
    std::vector<Rat> xs(npts), ys(npts);
    for (int k = 0; k < npts; ++k) {
        Rat x0(k);
        std::vector<Rat> bc(B_y.size());
        for (std::size_t i = 0; i < B_y.size(); ++i) bc[i] = B_y[i].eval(x0);
        QPoly Bx(std::move(bc));
        // Evaluation can drop the degree in y; the resultant then picks up
        // a correction factor lc(A)^(degy(B) - deg(Bx)).
        int degy = static_cast<int>(B_y.size()) - 1;
        Rat corr(1);
        int drop = degy - Bx.degree();
        if (Bx.is_zero()) {
            // Res(A, 0) with positive y-degree: evaluation hit a common
            // vanishing; record 0 (still interpolates correctly only if the
            // true resultant vanishes at x0, which it does: B(x0, y) == 0
            // forces every y to be a "common root").
            xs[k] = x0;
            ys[k] = Rat(0);
            continue;
        }
        for (int i = 0; i < drop; ++i) corr *= A.lead();
        Rat r = Bx.degree() == 0 ? [&] {
            Rat v(1);
            for (int i = 0; i < A.degree(); ++i) v *= Bx[0];
            return v;
        }()
                                 : resultant(A, Bx);
        xs[k] = x0;
        ys[k] = corr * r;
    }
    return interpolate(xs, ys);
}

}  // namespace skolem
