#pragma once

#include "skolem/common.hpp"

#include <optional>
#include <utility>

namespace skolem {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& a) { return a == 0 ? QPoly{} : QPoly{{a}}; }
    static QPoly x() { return QPoly{{Rat(0), Rat(1)}}; }
    // c0 + c1*x + ... from an initializer of longs, handy in tests.
    static QPoly of(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const { require(!c_.empty(), "lead of zero polynomial"); return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const Rat& a) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    QPoly shift_var(const Rat& a) const;   // p(x + a)
    QPoly scale_var(const Rat& a) const;   // p(a * x)
    QPoly negate_var() const;              // p(-x)
    QPoly reverse() const;                 // x^deg * p(1/x)
    QPoly compose_square() const;          // p(x^2)
    QPoly pow_times(std::size_t k) const;  // x^k * p

    // Euclidean division; divisor must be nonzero.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    // Exact division; throws internal_error if the remainder is nonzero.
    QPoly div_exact(const QPoly& d) const;

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Primitive integer polynomial, positive leading coefficient: content
// and Z-coefficient vector such that poly == content * prim.
struct ZPrimPart {
    Rat content;            // may be negative
    std::vector<Int> prim;  // primitive, lc > 0; empty for the zero poly
};
ZPrimPart primitive_part(const QPoly& p);
QPoly from_z(const std::vector<Int>& z);

// Monic gcd over Q (subresultant PRS on the primitive integer parts).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// Extended Euclid over Q[x]: returns monic g = gcd(a, b) and sets
// s, t with s*a + t*b = g.
QPoly poly_ext_gcd(const QPoly& a, const QPoly& b, QPoly* s, QPoly* t);

// Res(a, b); errors on zero input.
Rat resultant(const QPoly& a, const QPoly& b);

// Fraction-free determinant of an integer matrix; destroys the argument.
Int bareiss_det(std::vector<std::vector<Int>>& m);

// Monic squarefree polynomial with the same root set.
QPoly squarefree_part(const QPoly& a);

// Yun squarefree decomposition: list of (factor, multiplicity) with
// factors monic, squarefree, pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a);

// Lagrange interpolation through (xs[i], ys[i]), distinct xs.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Resultant in y of A(y) and B(x, y), where B is given as a vector of
// Power sums p_0..p_n of the roots of a monic polynomial (Newton identities),
// and the inverse transform.
std::vector<Rat> power_sums(const QPoly& monic, int n);
QPoly poly_from_power_sums(const std::vector<Rat>& p, int n);

// Monic polynomial whose roots are all pairwise sums (resp. products) of
// roots of the monic inputs, with multiplicity.
QPoly composed_sum(const QPoly& a, const QPoly& b);
QPoly composed_product(const QPoly& a, const QPoly& b);
// Roots raised to the n-th power, n >= 1.
QPoly composed_power(const QPoly& a, unsigned long n);

// QPoly in x indexed by the power of y. Computed by evaluation at
// integer points and interpolation. Degree in x of the result is at
// most xdeg_bound.
QPoly resultant_y(const QPoly& A, const std::vector<QPoly>& B_y, int xdeg_bound);

}  // namespace skolem
