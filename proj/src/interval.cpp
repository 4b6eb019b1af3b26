#include "skolem/interval.hpp"

namespace skolem {

RI RI::of(const Rat& q, mpfr_prec_t prec) {
    RI r = make(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RI RI::of(const Int& n, mpfr_prec_t prec) {
    RI r = make(prec);
    mpfr_set_z(r.lo_.get(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), n.get_mpz_t(), MPFR_RNDU);
    return r;
}

RI RI::of_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    check_input(lo <= hi, "interval endpoints out of order");
    RI r = make(prec);
    mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RI RI::pi(mpfr_prec_t prec) {
    RI r = make(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

bool RI::valid() const {
    return mpfr_number_p(lo_.get()) && mpfr_number_p(hi_.get()) &&
           mpfr_cmp(lo_.get(), hi_.get()) <= 0;
}

Rat RI::lo_rat() const {
    require(mpfr_number_p(lo_.get()), "non-finite endpoint");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_.get());
    return q;
}

Rat RI::hi_rat() const {
    require(mpfr_number_p(hi_.get()), "non-finite endpoint");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_.get());
    return q;
}

RI RI::width() const {
    RI r = make(prec());
    mpfr_sub(r.hi_.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_set(r.lo_.get(), r.hi_.get(), MPFR_RNDD);
    return r;
}

bool RI::contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RI::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RI::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool RI::surely_lt(const RI& o) const {
    return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
}

std::optional<int> RI::sign() const {
    if (is_positive()) return 1;
    if (is_negative()) return -1;
    if (mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get())) return 0;
    return std::nullopt;
}

bool RI::contains(const Rat& q) const {
    // exact comparisons of mpfr against mpq
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

RI RI::operator-() const {
    RI r = make(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

RI RI::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    RI r = make(prec());
    mpfr_set_zero(r.lo_.get(), 1);
    MF nl(prec());
    mpfr_neg(nl.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_cmp(nl.get(), hi_.get()) > 0)
        mpfr_set(r.hi_.get(), nl.get(), MPFR_RNDU);
    else
        mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

std::string RI::str() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "[%.8Rg, %.8Rg]", lo_.get(), hi_.get());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string CI::str() const { return re_.str() + " + i*" + im_.str(); }

namespace {
mpfr_prec_t pmax(const RI& a, const RI& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

RI operator+(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_add(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RI operator-(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_sub(r.lo_.get(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

RI operator*(const RI& a, const RI& b) {
    mpfr_prec_t p = pmax(a, b);
    RI r = RI::make(p);
    MF t(p);
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(t.get(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_.get(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_mul(t.get(), a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
}

RI operator/(const RI& a, const RI& b) {
    require(!b.contains_zero(), "interval division by zero");
    mpfr_prec_t p = pmax(a, b);
    RI r = RI::make(p);
    MF t(p);
    mpfr_div(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_div(t.get(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_div(r.hi_.get(), a.lo(), b.lo(), MPFR_RNDU);
    mpfr_div(t.get(), a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_div(t.get(), a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_div(t.get(), a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
}

RI ri_sqrt(const RI& a) {
    require(mpfr_sgn(a.hi()) >= 0, "sqrt of negative interval");
    RI r = RI::make(a.prec());
    if (mpfr_sgn(a.lo()) <= 0)
        mpfr_set_zero(r.lo_.get(), 1);
    else
        mpfr_sqrt(r.lo_.get(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), a.hi(), MPFR_RNDU);
    return r;
}

RI ri_log(const RI& a) {
    require(mpfr_sgn(a.lo()) > 0, "log of non-positive interval");
    RI r = RI::make(a.prec());
    mpfr_log(r.lo_.get(), a.lo(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), a.hi(), MPFR_RNDU);
    return r;
}

RI ri_exp(const RI& a) {
    RI r = RI::make(a.prec());
    mpfr_exp(r.lo_.get(), a.lo(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), a.hi(), MPFR_RNDU);
    return r;
}

RI ri_pow_ui(const RI& a, unsigned long n) {
    RI r(1L, a.prec());
    RI base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

RI ri_max(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_max(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RI ri_min(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_min(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RI ri_hull(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_min(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

std::optional<RI> ri_intersect(const RI& a, const RI& b) {
    RI r = RI::make(pmax(a, b));
    mpfr_max(r.lo_.get(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi_.get(), a.hi(), b.hi(), MPFR_RNDU);
    if (mpfr_cmp(r.lo_.get(), r.hi_.get()) > 0) return std::nullopt;
    return r;
}

std::optional<CI> ci_intersect(const CI& a, const CI& b) {
    auto re = ri_intersect(a.re(), b.re());
    if (!re) return std::nullopt;
    auto im = ri_intersect(a.im(), b.im());
    if (!im) return std::nullopt;
    return CI(*re, *im);
}

}  // namespace skolem
