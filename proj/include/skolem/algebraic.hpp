#pragma once

#include "skolem/poly.hpp"
#include "skolem/rootiso.hpp"

#include <optional>

namespace skolem {

// m-th cyclotomic polynomial.
QPoly cyclotomic(unsigned long m);
unsigned long euler_phi(unsigned long m);

// If the monic irreducible polynomial is the minimal polynomial of a root of
// unity, its order; otherwise nullopt.
std::optional<unsigned long> root_of_unity_order(const QPoly& minpoly);

// An algebraic number: monic irreducible minimal polynomial over Q plus a
// certified complex enclosure pinning down which root is meant. Exact,
// immutable value semantics; enclosures refine on demand through the shared
// root system.
class AlgebraicNumber {
public:
    AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}
    explicit AlgebraicNumber(const Rat& q);
    explicit AlgebraicNumber(long v) : AlgebraicNumber(Rat(v)) {}

    // The i-th root (in root-system order) of an irreducible monic poly.
    AlgebraicNumber(const QPoly& minpoly, std::shared_ptr<RootSystem> sys,
                    int idx);

    // All roots of an arbitrary nonzero polynomial, each with multiplicity 1,
    // in deterministic order (factors sorted, then root order).
    static std::vector<AlgebraicNumber> roots_of(const QPoly& f);

    const QPoly& minpoly() const { return min_; }
    int degree() const { return min_.degree(); }
    bool is_rational() const { return degree() == 1; }
    const Rat& rational_value() const {
        check_input(is_rational(), "not rational");
        return rat_;
    }
    bool is_zero() const { return is_rational() && rat_ == 0; }
    bool is_real() const;

    // Current certified enclosure; refine(eps) shrinks both box sides to
    // at most eps.
    CI enclosure() const;
    void refine(const Rat& eps) const;

    bool operator==(const AlgebraicNumber& o) const;
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

    AlgebraicNumber operator+(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-(const AlgebraicNumber& o) const;
    AlgebraicNumber operator*(const AlgebraicNumber& o) const;
    AlgebraicNumber operator/(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-() const;
    AlgebraicNumber inverse() const;
    AlgebraicNumber conj() const;
    AlgebraicNumber sqrt_nonneg() const;  // requires real and >= 0
    AlgebraicNumber abs() const;          // |z| as a real algebraic number
    AlgebraicNumber abs_sq() const;       // z * conj(z)
    AlgebraicNumber pow(long n) const;

    // Sign of a real algebraic number.
    int sign() const;
    // Order by value; both numbers must be real.
    int compare(const AlgebraicNumber& o) const;

    std::optional<unsigned long> root_of_unity() const;

    // Shared root system and root index (null / -1 for rationals).
    const std::shared_ptr<RootSystem>& system() const { return sys_; }
    int root_index() const { return idx_; }

    // Absolute logarithmic Weil height, enclosed to width <= 2^-20.
    RI height() const;
    Rat height_ub() const { return height().hi_rat(); }

    std::string str() const;

    // The unique root of annihilator lying in box_of(eps) for all small eps;
    // box_of must be a shrinking enclosure of one fixed complex value.
    static AlgebraicNumber locate(const QPoly& annihilator,
                                  const std::function<CI(const Rat&)>& box_of);

private:
    QPoly min_;
    Rat rat_;  // value when degree == 1
    std::shared_ptr<RootSystem> sys_;
    int idx_ = -1;
};

}  // namespace skolem
