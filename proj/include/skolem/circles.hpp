#pragma once

#include "skolem/common.hpp"
#include "skolem/interval.hpp"

namespace skolem {

// Relative position of the circles |z| = rho0 and |z - 1| = rho1.
enum class CircleConfig {
    Separated,        // rho0 + rho1 < 1
    ExternalTangent,  // rho0 + rho1 = 1, touch at rho0
    Crossing,         // |rho0 - rho1| < 1 < rho0 + rho1
    InternalTangent,  // |rho0 - rho1| = 1, touch at +-rho0
    Nested            // |rho0 - rho1| > 1
};

CircleConfig classify_circles(const Rat& rho0, const Rat& rho1);

// Upper intersection point (positive imaginary part) for the Crossing
// configuration:
//   (1 + rho0^2 - rho1^2 + i sqrt(4 rho0^2 rho1^2 - (1-rho0^2-rho1^2)^2)) / 2.
CI circle_meet(const Rat& rho0, const Rat& rho1, mpfr_prec_t prec);

// Certified lower bound for |z0 - z1| over all z1 with |z1 - 1| = rho1,
// given |z0| = rho0.  Piecewise by configuration:
//   Separated          1 - rho0 - rho1
//   Nested             |rho0 - rho1| - 1
//   ExternalTangent    |z0 - rho0|^2 / (rho0 (rho0 + rho1 + 1))
//   InternalTangent    |z0 -+ rho0|^2 / (rho0 (rho0 + rho1 + 1))
//   Crossing           2 (1 + 2 rho0 / Im m)^(-1/2) min(|z0-m|, |z0-conj m|)
//                        / (rho0 + rho1 + 1),   m = circle_meet
// The returned interval's lower end is the certified bound (clamped at 0).
RI circle_pair_gap(const Rat& rho0, const Rat& rho1, const CI& z0,
                   mpfr_prec_t prec);

}  // namespace skolem
