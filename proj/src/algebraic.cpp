#include "skolem/algebraic.hpp"

#include "skolem/factor.hpp"

#include <algorithm>
#include <sstream>

namespace skolem {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

int mobius(unsigned long m) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

QPoly x_pow_minus_1(unsigned long d) {
    std::vector<Rat> c(d + 1);
    c[0] = Rat(-1);
    c[d] = Rat(1);
    return QPoly(std::move(c));
}

bool ci_overlap(const CI& a, const CI& b) {
    bool re = a.re().hi_rat() >= b.re().lo_rat() &&
              b.re().hi_rat() >= a.re().lo_rat();
    bool im = a.im().hi_rat() >= b.im().lo_rat() &&
              b.im().hi_rat() >= a.im().lo_rat();
    return re && im;
}

}  // namespace

QPoly cyclotomic(unsigned long m) {
    check_input(m >= 1, "cyclotomic index must be positive");
    QPoly num = QPoly::constant(Rat(1));
    QPoly den = QPoly::constant(Rat(1));
    for (unsigned long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        int mu = mobius(m / d);
        if (mu == 1) num = num * x_pow_minus_1(d);
        if (mu == -1) den = den * x_pow_minus_1(d);
    }
    return num.div_exact(den);
}

std::optional<unsigned long> root_of_unity_order(const QPoly& minpoly) {
    check_input(minpoly.degree() >= 1, "constant polynomial");
    unsigned long d = static_cast<unsigned long>(minpoly.degree());
    for (unsigned long m = 1; m <= 2 * d * d + 4; ++m) {
        if (euler_phi(m) != d) continue;
        if (cyclotomic(m) == minpoly) return m;
    }
    return std::nullopt;
}

AlgebraicNumber::AlgebraicNumber(const Rat& q) : rat_(q) {
    min_ = QPoly(std::vector<Rat>{-q, Rat(1)});
}

AlgebraicNumber::AlgebraicNumber(const QPoly& minpoly,
                                 std::shared_ptr<RootSystem> sys, int idx)
    : min_(minpoly), sys_(std::move(sys)), idx_(idx) {
    check_input(min_.degree() >= 1, "constant minimal polynomial");
    check_input(min_.lead() == 1, "minimal polynomial must be monic");
    if (min_.degree() == 1) {
        rat_ = -min_[0];
        sys_.reset();
        idx_ = -1;
    } else {
        check_input(sys_ && idx_ >= 0 && idx_ < sys_->count(),
                    "bad root reference");
    }
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const QPoly& f) {
    check_input(f.degree() >= 1, "constant polynomial has no roots");
    std::vector<AlgebraicNumber> out;
    for (const QPoly& g : irreducible_factors(f)) {
        if (g.degree() == 1) {
            out.emplace_back(Rat(-g[0]));
            continue;
        }
        auto sys = RootSystem::isolate(g);
        for (int i = 0; i < sys->count(); ++i) out.emplace_back(g, sys, i);
    }
    return out;
}

bool AlgebraicNumber::is_real() const {
    if (is_rational()) return true;
    return sys_->is_real_root(idx_);
}

CI AlgebraicNumber::enclosure() const {
    if (is_rational()) return CI::of(rat_, Rat(0), 128);
    return sys_->box(idx_);
}

void AlgebraicNumber::refine(const Rat& eps) const {
    if (!is_rational()) sys_->refine(idx_, eps);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
    if (min_ != o.min_) return false;
    if (is_rational()) return rat_ == o.rat_;
    if (sys_ == o.sys_) return idx_ == o.idx_;
    Rat sep = sys_->separation_bound() / 8;
    refine(sep);
    o.refine(sep);
    return ci_overlap(enclosure(), o.enclosure());
}

AlgebraicNumber AlgebraicNumber::locate(
    const QPoly& ann, const std::function<CI(const Rat&)>& box_of) {
    QPoly sf = squarefree_part(ann);
    std::vector<QPoly> factors = irreducible_factors(sf);
    std::vector<ZPrimPart> prim;
    prim.reserve(factors.size());
    for (const auto& g : factors) prim.push_back(primitive_part(g));
    Rat eps(1, 1 << 16);
    for (int round = 0; round < 400; ++round) {
        CI X = box_of(eps);
        std::vector<std::size_t> cands;
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (eval_zpoly(prim[i].prim, X).contains_zero()) cands.push_back(i);
        require(!cands.empty(), "annihilator does not vanish on enclosure");
        if (cands.size() == 1) {
            const QPoly& g = factors[cands[0]];
            if (g.degree() == 1) return AlgebraicNumber(Rat(-g[0]));
            auto sys = RootSystem::isolate(g);
            for (int round2 = 0; round2 < 400; ++round2) {
                std::vector<int> hits;
                for (int i = 0; i < sys->count(); ++i)
                    if (ci_overlap(sys->box(i), X)) hits.push_back(i);
                require(!hits.empty(), "enclosure missed every root");
                if (hits.size() == 1) return AlgebraicNumber(g, sys, hits[0]);
                for (int i : hits) sys->refine(i, eps);
                eps /= 16;
                X = box_of(eps);
            }
            require(false, "could not pin down root index");
        }
        eps /= 16;
    }
    require(false, "could not separate annihilator factors");
    return AlgebraicNumber();  // unreachable
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
    if (is_rational() && o.is_rational())
        return AlgebraicNumber(Rat(rat_ + o.rat_));
    if (is_rational() || o.is_rational()) {
        const AlgebraicNumber& a = is_rational() ? o : *this;
        const Rat& q = is_rational() ? rat_ : o.rat_;
        if (q == 0) return a;
        QPoly ann = a.min_.shift_var(-q);  // roots r + q
        return locate(ann, [&](const Rat& eps) {
            a.refine(eps);
            return a.enclosure() + CI::of(q, Rat(0), 128);
        });
    }
    QPoly ann = composed_sum(min_, o.min_);
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        o.refine(eps);
        return enclosure() + o.enclosure();
    });
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    if (is_rational()) return AlgebraicNumber(Rat(-rat_));
    QPoly ann = min_.negate_var().monic();
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        return -enclosure();
    });
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
    return *this + (-o);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
    if (is_rational() && o.is_rational())
        return AlgebraicNumber(Rat(rat_ * o.rat_));
    if (is_rational() || o.is_rational()) {
        const AlgebraicNumber& a = is_rational() ? o : *this;
        const Rat& q = is_rational() ? rat_ : o.rat_;
        if (q == 0) return AlgebraicNumber(Rat(0));
        if (q == 1) return a;
        QPoly ann = a.min_.scale_var(Rat(1) / q).monic();  // roots q * r
        return locate(ann, [&](const Rat& eps) {
            a.refine(eps);
            return a.enclosure() * CI::of(q, Rat(0), 128);
        });
    }
    QPoly ann = composed_product(min_, o.min_);
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        o.refine(eps);
        return enclosure() * o.enclosure();
    });
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    check_input(!is_zero(), "inverse of zero");
    if (is_rational()) return AlgebraicNumber(Rat(1 / rat_));
    QPoly ann = min_.reverse().monic();
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        CI one = CI::of(Rat(1), Rat(0), 128);
        return one / enclosure();
    });
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
    return *this * o.inverse();
}

AlgebraicNumber AlgebraicNumber::conj() const {
    if (is_rational() || is_real()) return *this;
    return AlgebraicNumber(min_, sys_, sys_->conj_index(idx_));
}

AlgebraicNumber AlgebraicNumber::sqrt_nonneg() const {
    check_input(is_real() && sign() >= 0, "sqrt of negative or non-real");
    if (is_rational()) {
        Int n = num(rat_), d = den(rat_);
        if (mpz_perfect_square_p(n.get_mpz_t()) &&
            mpz_perfect_square_p(d.get_mpz_t())) {
            return AlgebraicNumber(Rat(sqrt(n), sqrt(d)));
        }
    }
    QPoly ann = min_.compose_square();
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        RI re = ri_sqrt(enclosure().re());
        return CI(re, RI(0L, re.prec()));
    });
}

AlgebraicNumber AlgebraicNumber::abs_sq() const {
    if (is_real()) return *this * *this;
    return *this * conj();
}

AlgebraicNumber AlgebraicNumber::abs() const {
    if (is_real()) return sign() >= 0 ? *this : -*this;
    return abs_sq().sqrt_nonneg();
}

AlgebraicNumber AlgebraicNumber::pow(long n) const {
    if (n == 0) return AlgebraicNumber(Rat(1));
    if (n < 0) return inverse().pow(-n);
    if (n == 1) return *this;
    if (is_rational()) {
        Rat r(1);
        for (long i = 0; i < n; ++i) r *= rat_;
        return AlgebraicNumber(r);
    }
    QPoly ann = composed_power(min_, static_cast<unsigned long>(n));
    return locate(ann, [&](const Rat& eps) {
        refine(eps);
        CI b = enclosure();
        CI acc = CI::of(Rat(1), Rat(0), b.re().prec());
        for (long i = 0; i < n; ++i) acc = acc * b;
        return acc;
    });
}

int AlgebraicNumber::sign() const {
    check_input(is_real(), "sign of non-real number");
    if (is_rational()) return sgn(rat_);
    Rat eps(1, 1 << 8);
    for (int round = 0; round < 400; ++round) {
        auto s = enclosure().re().sign();
        if (s.has_value()) return *s;
        refine(eps);
        eps /= 256;
    }
    require(false, "sign refinement stalled");
    return 0;
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
    check_input(is_real() && o.is_real(), "comparing non-real numbers");
    if (*this == o) return 0;
    Rat eps(1, 1 << 8);
    for (int round = 0; round < 400; ++round) {
        RI a = enclosure().re(), b = o.enclosure().re();
        if (a.surely_lt(b)) return -1;
        if (b.surely_lt(a)) return 1;
        refine(eps);
        o.refine(eps);
        eps /= 256;
    }
    require(false, "comparison refinement stalled");
    return 0;
}

std::optional<unsigned long> AlgebraicNumber::root_of_unity() const {
    return root_of_unity_order(min_);
}

RI AlgebraicNumber::height() const {
    if (is_rational()) {
        Int n = num(rat_);
        if (n < 0) n = -n;
        Int dd = den(rat_);
        Int m = n > dd ? n : dd;
        if (m <= 1) return RI(0L, 64);
        return ri_log(RI::of(m, 192));
    }
    const std::vector<Int>& zf = sys_->poly();
    int d = min_.degree();
    Rat eps(1, Int(1) << 24);
    for (int round = 0; round < 60; ++round) {
        mpfr_prec_t prec = 192 + 64 * round;
        RI total = ri_log(RI::of(zf.back(), prec));
        for (int i = 0; i < sys_->count(); ++i) {
            RI a = sys_->box(i).abs();
            total = total + ri_log(ri_max(a, RI(1L, prec)));
        }
        RI h = total / RI::of(Rat(d), prec);
        if (h.width().hi_rat() <= Rat(1, Int(1) << 20)) return h;
        for (int i = 0; i < sys_->count(); ++i) sys_->refine(i, eps);
        eps /= Rat(Int(1) << 16);
    }
    require(false, "height refinement stalled");
    return RI(0L, 64);
}

std::string AlgebraicNumber::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << rat_.get_str();
        return os.str();
    }
    os << "root#" << idx_ << " of " << min_.str() << " near "
       << enclosure().str();
    return os.str();
}

}  // namespace skolem
