#include "skolem/exactreal.hpp"

namespace skolem {

namespace {
// rational upper bound on log 2
const Rat kLog2Ub(6932, 10000);
}  // namespace

ExactReal::ExactReal(std::function<RI(mpfr_prec_t)> approx, long degree_bound,
                     Rat height_ub)
    : fn_(std::move(approx)), deg_(degree_bound), h_(std::move(height_ub)) {
    check_input(deg_ >= 1, "degree bound must be positive");
    if (h_ < 0) h_ = 0;
}

ExactReal ExactReal::of_rat(const Rat& q) {
    Int n = abs(num(q)), d = den(q);
    Int m = n > d ? n : d;
    Rat h(0);
    if (m > 1) h = ri_log(RI::of(m, 128)).hi_rat();
    return ExactReal([q](mpfr_prec_t p) { return RI::of(q, p); }, 1, h);
}

ExactReal ExactReal::of(const AlgebraicNumber& a) {
    check_input(a.is_real(), "not a real number");
    return ExactReal(
        [a](mpfr_prec_t p) {
            a.refine(Rat(1, Int(1) << static_cast<unsigned long>(p)));
            RI r = a.enclosure().re();
            return r;
        },
        a.degree(), a.height().hi_rat());
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    auto f = fn_, g = o.fn_;
    long d = deg_ * o.deg_;
    require(d / o.deg_ == deg_ && d < (1L << 40), "degree bound overflow");
    return ExactReal([f, g](mpfr_prec_t p) { return f(p) + g(p); }, d,
                     h_ + o.h_ + kLog2Ub);
}

ExactReal ExactReal::operator-() const {
    auto f = fn_;
    return ExactReal([f](mpfr_prec_t p) { return -f(p); }, deg_, h_);
}

ExactReal ExactReal::operator-(const ExactReal& o) const {
    return *this + (-o);
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
    auto f = fn_, g = o.fn_;
    long d = deg_ * o.deg_;
    require(d / o.deg_ == deg_ && d < (1L << 40), "degree bound overflow");
    return ExactReal([f, g](mpfr_prec_t p) { return f(p) * g(p); }, d,
                     h_ + o.h_);
}

ExactReal ExactReal::sqrt_nonneg() const {
    auto f = fn_;
    long d = deg_ * 2;
    return ExactReal(
        [f](mpfr_prec_t p) {
            RI x = f(p);
            require(mpfr_sgn(x.hi()) >= 0, "sqrt of negative quantity");
            return ri_sqrt(x);
        },
        d, h_ / 2);
}

Rat ExactReal::liouville_gap() const {
    // gap = 2^-K with K > deg * height / log 2
    Rat dh = Rat(deg_) * h_;
    if (dh <= 0) return Rat(1, 2);
    RI k = RI::of(dh, 96) / ri_log(RI::of(Rat(2), 96));
    Int K = num(k.hi_rat()) / den(k.hi_rat()) + 2;
    require(K > 0 && K < 4000000, "liouville gap exponent out of range");
    return Rat(Int(1), Int(1) << K.get_ui());
}

int ExactReal::sign() const {
    Rat gap = liouville_gap();
    for (mpfr_prec_t p = 96; p <= (1 << 22); p *= 2) {
        RI x = fn_(p);
        if (x.is_positive()) return 1;
        if (x.is_negative()) return -1;
        if (x.hi_rat() < gap && x.lo_rat() > -gap) return 0;
    }
    require(false, "sign decision did not converge");
    return 0;
}

}  // namespace skolem
