#pragma once

#include "skolem/bounds.hpp"
#include "skolem/dominance.hpp"

namespace skolem {

// Cutoff obtained at one place on its own; integer zeros of the coefficient
// polynomials are excluded separately.  The certificate fields make the bound
// replayable: for n >= n0 both gap*n > decay(log n) and n >= cap hold, which
// is all the zero-freeness argument needs at this place.
struct PlaceCutoff {
    PlaceRef place;
    int lead = 0;  // size of the leading layer
    Int n0;
    RI gap;         // per-step log-gap between leading and next layer
    LogDecay decay; // admissible loss: decay(log n) = a0 + a1 log n + a2 log^2 n
    Int cap;        // identities a chi^n = 1 are impossible from here on
    bool has_tail = true;  // false when the leading layer is the whole form
};

// Zero cutoff for the stripped sequence V(n): V(n) != 0 for every n >= n0.
struct Cutoff {
    Int n0;
    std::vector<Int> coeff_zeros;  // integer n >= 0 where some f_j(n) = 0
    std::vector<PlaceCutoff> places;
    size_t chosen = 0;   // index of the minimizing place
    long degree = 1;     // splitting-field degree (ledger constants refer to it)
};

// Rigorous cutoff for a non-degenerate Binet form with at most four distinct
// roots.  Every usable place is tried; the best bound wins.  The argument per
// place: writing V(n) = sum of the leading layer + B(n), the leading part is
// bounded below through Liouville bounds, two-term linear-forms bounds, or
// the two-circles separation (three-way archimedean ties), while |B(n)|_v
// decays by a definite exponential factor per step.  All special algebraic
// identities (a chi^n = 1) are pushed below an explicit index by comparing
// the height growth of both sides.
Cutoff compute_cutoff(const BinetForm& bf, mpfr_prec_t prec);

}  // namespace skolem
