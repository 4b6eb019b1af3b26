#pragma once

#include "skolem/cutoff.hpp"
#include "skolem/sieve.hpp"

#include <optional>
#include <string>

namespace skolem {

enum class Status { Decided, Bounded };

struct DecideOptions {
    Int cap = Int(1000000);  // exhaustive-search ceiling, original indexing
    unsigned long sieve_budget = 1u << 20;
    mpfr_prec_t precision = 192;
    int threads = 1;
};

// One residue class of the degeneracy decomposition (the whole sequence when
// the modulus is 1), with everything the search established about it.
struct BranchInfo {
    Int offset;
    Int modulus;
    bool all_zero = false;
    Status status = Status::Decided;
    Int cutoff;          // class is zero-free beyond this (original indexing)
    Int searched_below;  // exhaustively checked below this (original indexing)
    std::string place;   // winning place of the cutoff argument
    int lead = 0;        // leading-layer size there
    double sieve_density = 1.0;
    long exact_checks = 0;
    long field_degree = 0;                  // splitting field of the class
    std::optional<PlaceCutoff> certificate; // replayable bound at the place
};

struct EngineResult {
    Status status = Status::Decided;
    std::vector<Int> zeros;  // isolated zeros, sorted ascending
    std::vector<std::pair<Int, Int>> progressions;  // (offset o, modulus m):
                                                    // zeros at o, o+m, o+2m, ...
    Int searched_below;  // outside the progressions, the zero list is complete
                         // below this bound
    Int cutoff;          // ... and empty from this bound on
    std::vector<BranchInfo> branches;
};

// Full zero-set analysis of u: degeneracy decomposition into non-degenerate
// residue classes, rigorous cutoff per class, sieve-accelerated enumeration
// below it.  Status Bounded means some class has its cutoff beyond opt.cap,
// so the search stopped at the cap there.
EngineResult decide(const LRS& u, const DecideOptions& opt);

}  // namespace skolem
