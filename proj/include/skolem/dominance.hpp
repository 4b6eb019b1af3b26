#pragma once

#include "skolem/lrs.hpp"
#include "skolem/places.hpp"

#include <string>

namespace skolem {

// One place of the coefficient field: an archimedean embedding or a prime
// ideal.  fin is engaged exactly when arch is false.
struct PlaceRef {
    bool arch = true;
    ArchPlace inf;
    FinitePlace fin;
    int ordinal = 0;  // position within finite_places_above(p)
    std::string str() const;
};

// Exact magnitude layering of elements at one place: groups[0] lists the
// indices of maximal |.|_v, each later group is strictly smaller.
struct DominanceLayers {
    std::vector<std::vector<int>> groups;
    int lead_count() const { return (int)groups[0].size(); }
    std::vector<int> tail() const {  // everything below the leading layer
        std::vector<int> t;
        for (size_t g = 1; g < groups.size(); ++g)
            t.insert(t.end(), groups[g].begin(), groups[g].end());
        return t;
    }
};

// sigma_v(x) as an algebraic number: the root of the minimal polynomial of x
// selected by the embedding v of the ambient field.
AlgebraicNumber conjugate_at(const NumberField& K, const FVec& x,
                             const ArchPlace& v);

// Layering by |sigma_v(.)|, ties certified exactly.
DominanceLayers layers_at_arch(const NumberField& K,
                               const std::vector<FVec>& xs,
                               const ArchPlace& v);
// Layering by exact valuation (larger valuation = smaller magnitude).
DominanceLayers layers_at_finite(const std::vector<FVec>& xs,
                                 const FinitePlace& v);

// A place where the cutoff argument can run: at most two roots of maximal
// magnitude, or exactly three at an archimedean place.
struct UsablePlace {
    PlaceRef place;
    DominanceLayers layers;
};

// Deterministic enumeration of every usable place: all archimedean
// embeddings, then the finite places above each prime at which some root is
// a non-unit.  Nonempty for every non-degenerate system with at most four
// distinct roots.
std::vector<UsablePlace> usable_places(const BinetForm& bf);

// Certified positive lower bound on the log-gap between the leading and the
// subleading layer: log(|x_lead|_v / |x_next|_v) with the usual normalization
// (complex absolute value at archimedean places, p^{-nu/e} at finite ones).
// Requires a subleading layer to exist.
RI place_gap(const NumberField& K, const std::vector<FVec>& xs,
             const UsablePlace& up, mpfr_prec_t prec);

}  // namespace skolem
