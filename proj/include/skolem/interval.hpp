#pragma once

#include "skolem/common.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace skolem {

// RAII wrapper for a single mpfr number.
class MF {
public:
    explicit MF(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    MF(const MF& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MF(MF&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MF& operator=(const MF& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MF& operator=(MF&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MF() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Closed real interval [lo, hi] with dyadic endpoints. All operations round
// outward, so the result always encloses the exact value.
class RI {
public:
    RI() : RI(0L, 64) {}
    RI(long v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
        mpfr_set_si(lo_.get(), v, MPFR_RNDD);
        mpfr_set_si(hi_.get(), v, MPFR_RNDU);
    }
    static RI of(const Rat& q, mpfr_prec_t prec);
    static RI of(const Int& n, mpfr_prec_t prec);
    static RI of_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static RI pi(mpfr_prec_t prec);

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    mpfr_prec_t prec() const { return mpfr_get_prec(lo_.get()); }

    bool valid() const;  // endpoints finite and lo <= hi
    Rat lo_rat() const;
    Rat hi_rat() const;
    double lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    Rat mid_rat() const { return (lo_rat() + hi_rat()) / 2; }
    RI width() const;  // [0, hi-lo rounded up] collapsed to a point interval

    bool contains_zero() const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    bool surely_lt(const RI& o) const;  // hi < o.lo
    std::optional<int> sign() const;    // nullopt if straddles zero
    bool contains(const Rat& q) const;

    RI operator-() const;
    RI abs() const;
    std::string str() const;

    friend RI operator+(const RI& a, const RI& b);
    friend RI operator-(const RI& a, const RI& b);
    friend RI operator*(const RI& a, const RI& b);
    friend RI operator/(const RI& a, const RI& b);  // b must exclude 0
    friend RI ri_sqrt(const RI& a);   // a.hi >= 0; lo clamped to 0 if negative
    friend RI ri_log(const RI& a);    // requires a.lo > 0
    friend RI ri_exp(const RI& a);
    friend RI ri_pow_ui(const RI& a, unsigned long n);
    friend RI ri_max(const RI& a, const RI& b);
    friend RI ri_min(const RI& a, const RI& b);
    friend RI ri_hull(const RI& a, const RI& b);
    friend std::optional<RI> ri_intersect(const RI& a, const RI& b);

private:
    RI(MF lo, MF hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
    static RI make(mpfr_prec_t prec) { return RI(MF(prec), MF(prec)); }
    MF lo_, hi_;
};

RI ri_sqrt(const RI& a);
RI ri_log(const RI& a);
RI ri_exp(const RI& a);
RI ri_pow_ui(const RI& a, unsigned long n);
RI ri_max(const RI& a, const RI& b);
RI ri_min(const RI& a, const RI& b);
RI ri_hull(const RI& a, const RI& b);
std::optional<RI> ri_intersect(const RI& a, const RI& b);

// Rectangular complex interval.
class CI {
public:
    CI() = default;
    CI(RI re, RI im) : re_(std::move(re)), im_(std::move(im)) {}
    static CI of(const Rat& re, const Rat& im, mpfr_prec_t prec) {
        return CI(RI::of(re, prec), RI::of(im, prec));
    }
    const RI& re() const { return re_; }
    const RI& im() const { return im_; }
    CI conj() const { return CI(re_, -im_); }
    CI operator-() const { return CI(-re_, -im_); }
    RI abs_sq() const { return re_ * re_ + im_ * im_; }
    RI abs() const { return ri_sqrt(abs_sq()); }
    bool contains_zero() const {
        return re_.contains_zero() && im_.contains_zero();
    }
    std::string str() const;

    friend CI operator+(const CI& a, const CI& b) {
        return CI(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend CI operator-(const CI& a, const CI& b) {
        return CI(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend CI operator*(const CI& a, const CI& b) {
        return CI(a.re_ * b.re_ - a.im_ * b.im_,
                  a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend CI operator/(const CI& a, const CI& b) {
        RI d = b.abs_sq();
        return CI((a.re_ * b.re_ + a.im_ * b.im_) / d,
                  (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }

private:
    RI re_, im_;
};

std::optional<CI> ci_intersect(const CI& a, const CI& b);

}  // namespace skolem
