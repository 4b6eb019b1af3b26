#pragma once

#include "skolem/numberfield.hpp"

namespace skolem {

// A linear recurrence sequence over Q:
//   U(n+k) = rec[k-1] U(n+k-1) + ... + rec[0] U(n),  U(i) = init[i] for i < k.
// Order 0 is the zero sequence.
class LRS {
public:
    LRS() = default;
    LRS(std::vector<Rat> rec, std::vector<Rat> init);

    int order() const { return static_cast<int>(rec_.size()); }
    const std::vector<Rat>& rec() const { return rec_; }
    const std::vector<Rat>& init() const { return init_; }

    // x^k - rec[k-1] x^(k-1) - ... - rec[0].
    QPoly charpoly() const;

    // U(n); iterative for small n, companion-matrix power for large n.
    Rat term(unsigned long n) const;
    std::vector<Rat> terms(unsigned long count) const;

    // True iff the sequence is identically zero.
    bool is_zero_sequence() const;

    // Minimal-order presentation of the same sequence (Berlekamp-Massey).
    LRS minimized() const;

    // The subsequence V(j) = U(M j + t), as an LRS in its own right.
    LRS subsequence(unsigned long M, unsigned long t) const;

    // A companion sequence with integer recurrence coefficients and integer
    // terms whose zero set is identical: term'(n) = C * D0^n * term(n) with
    // C, D0 positive integers.
    LRS integer_form() const;

private:
    std::vector<Rat> rec_, init_;
};

// Binet decomposition of a sequence: after stripping the transient part
// (zero characteristic roots), V(n) = U(n + transient) is written as
//   V(n) = sum_j f_j(n) lambda_j^n
// with distinct nonzero roots lambda_j and coefficient polynomials f_j of
// degree exactly mult_j - 1 over the splitting field.
struct BinetRoot {
    AlgebraicNumber value;
    FVec coords;              // the root inside the field
    std::vector<FVec> coeffs; // f(n) = sum_t coeffs[t] n^t
    int mult = 1;
};

struct BinetForm {
    LRS minimal;      // minimized presentation of the input
    long transient = 0;
    LRS stripped;     // V(n) = U(n + transient)
    bool zero_tail = false;  // V identically zero (roots empty)
    NumberField field;
    std::vector<BinetRoot> roots;
};

BinetForm binet_form(const LRS& u);

// Smallest M >= 1 such that no two distinct roots of the M-th power
// subsequences have a root-of-unity ratio: the lcm of the orders of all
// root-of-unity ratios. 1 means the sequence is already non-degenerate.
unsigned long degeneracy_modulus(const BinetForm& bf);

}  // namespace skolem
