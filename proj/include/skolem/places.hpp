#pragma once

#include "skolem/numberfield.hpp"

namespace skolem {

// An archimedean place of L: an embedding index into the root system of the
// generator's minimal polynomial. Complex places are represented by the
// upper-half-plane embedding; dv is the local degree.
struct ArchPlace {
    int emb = 0;
    bool real = true;
    int dv() const { return real ? 1 : 2; }
};

std::vector<ArchPlace> archimedean_places(const NumberField& L);

// A finite place (prime ideal) of L above p, with ramification index e and
// residue degree f. Valuations are computed through a p-maximal order, an
// approximate idempotent for the chosen local component, and norms; the
// result is certified exact.
class FinitePlace {
public:
    const Int& p() const;
    int e() const;
    int f() const;
    int dv() const { return e() * f(); }

    // nu(x) in Z with nu(p) = e; x must be nonzero.
    long valuation(const FVec& x) const;
    // log|x|_v = q * log(p) with q = -nu(x)/e.
    Rat log_abs_coeff(const FVec& x) const;

private:
    friend std::vector<FinitePlace> finite_places_above(const NumberField&,
                                                        const Int&);
    struct Data;
    std::shared_ptr<Data> d_;
};

// All finite places of L above the rational prime p (sum of e*f equals the
// field degree).
std::vector<FinitePlace> finite_places_above(const NumberField& L,
                                             const Int& p);

// Primes p at which some of the given nonzero elements could have a nonzero
// valuation: every other prime is invisible to the absolute values of the
// xs. Derived from Newton polygons of the minimal polynomials.
std::vector<Int> relevant_primes(const NumberField& L,
                                 const std::vector<FVec>& xs);

}  // namespace skolem
