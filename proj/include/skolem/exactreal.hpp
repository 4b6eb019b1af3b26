#pragma once

#include "skolem/algebraic.hpp"

namespace skolem {

// A real algebraic quantity presented as on-demand interval enclosures plus
// certificates of algebraicity: a degree bound and an upper bound on the
// Weil height. Signs are decided rigorously: refine until the enclosure
// clears zero, or until it fits inside the Liouville gap exp(-deg * height),
// which forces the value to be exactly zero.
class ExactReal {
public:
    ExactReal(std::function<RI(mpfr_prec_t)> approx, long degree_bound,
              Rat height_ub);

    static ExactReal of_rat(const Rat& q);
    // A real algebraic number (uses its exact degree and height).
    static ExactReal of(const AlgebraicNumber& a);

    RI approx(mpfr_prec_t prec) const { return fn_(prec); }
    long degree_bound() const { return deg_; }
    const Rat& height_ub() const { return h_; }

    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator-() const;
    // Square root of a nonnegative quantity.
    ExactReal sqrt_nonneg() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    int compare(const ExactReal& o) const { return (*this - o).sign(); }

    // Positive rational below exp(-deg * height): anything smaller in
    // absolute value must vanish.
    Rat liouville_gap() const;

private:
    std::function<RI(mpfr_prec_t)> fn_;
    long deg_;
    Rat h_;
};

}  // namespace skolem
