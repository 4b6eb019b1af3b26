#pragma once

#include "skolem/lrs.hpp"

#include <optional>

namespace skolem {

// Zero residues of u modulo m: past the preperiod the state orbit is closed,
// so "u(n) == 0 mod m" depends on n mod period only.
struct SievePart {
    unsigned long m = 0;
    long preperiod = 0;
    unsigned long period = 1;
    std::vector<uint8_t> zero;  // indexed by n % period, valid for n >= preperiod
    double density = 1.0;       // fraction of residues that can carry zeros
};

// Orbit analysis of u modulo m; nullopt when the orbit does not close within
// step_cap steps.  Recurrence and initial values must be integers.
std::optional<SievePart> sieve_modulus(const LRS& u, unsigned long m,
                                       long step_cap);

// Residue filter assembled from several prime-power moduli, combined table
// size <= budget.  Sound as a superset: every exact zero with n >= preperiod
// has allowed[n % period] set.
struct Sieve {
    long preperiod = 0;
    unsigned long period = 1;
    std::vector<uint8_t> allowed = {1};
    double density = 1.0;
    std::vector<unsigned long> moduli;  // prime powers actually in use

    bool admits(const Int& n) const;
};

Sieve build_sieve(const LRS& u, unsigned long budget);

}  // namespace skolem
