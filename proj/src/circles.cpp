#include "skolem/circles.hpp"

namespace skolem {

CircleConfig classify_circles(const Rat& rho0, const Rat& rho1) {
    require(rho0 > 0 && rho1 > 0, "circle radii must be positive");
    Rat s = rho0 + rho1;
    Rat d = rho0 > rho1 ? rho0 - rho1 : rho1 - rho0;
    if (s < 1) return CircleConfig::Separated;
    if (s == 1) return CircleConfig::ExternalTangent;
    if (d < 1) return CircleConfig::Crossing;
    if (d == 1) return CircleConfig::InternalTangent;
    return CircleConfig::Nested;
}

CI circle_meet(const Rat& rho0, const Rat& rho1, mpfr_prec_t prec) {
    require(classify_circles(rho0, rho1) == CircleConfig::Crossing,
            "circle_meet: circles do not cross");
    Rat a = rho0 * rho0, b = rho1 * rho1;
    Rat disc = 4 * a * b - (1 - a - b) * (1 - a - b);
    require(disc > 0, "circle_meet: degenerate discriminant");
    RI re = RI::of(Rat((1 + a - b) / 2), prec);
    RI im = ri_sqrt(RI::of(disc, prec)) / RI(2, prec);
    return CI(re, im);
}

RI circle_pair_gap(const Rat& rho0, const Rat& rho1, const CI& z0,
                   mpfr_prec_t prec) {
    RI r0 = RI::of(rho0, prec), r1 = RI::of(rho1, prec);
    RI one(1, prec);
    switch (classify_circles(rho0, rho1)) {
        case CircleConfig::Separated:
            return one - r0 - r1;
        case CircleConfig::Nested:
            return (r0 - r1).abs() - one;
        case CircleConfig::ExternalTangent:
        case CircleConfig::InternalTangent: {
            // the circles touch at t = rho0 (except when rho1 = rho0 + 1,
            // where they touch at -rho0), and
            // ||z0-1|^2 - rho1^2| = |z0 - t|^2 / rho0
            Rat t = rho1 - rho0 == 1 ? -rho0 : rho0;
            CI d = z0 - CI::of(t, Rat(0), prec);
            return d.abs_sq() / (r0 * (r0 + r1 + one));
        }
        case CircleConfig::Crossing: {
            CI m = circle_meet(rho0, rho1, prec);
            RI near_m = ri_min((z0 - m).abs(), (z0 - m.conj()).abs());
            RI w = ri_sqrt(one + RI(2, prec) * r0 / m.im());
            return RI(2, prec) * near_m / (w * (r0 + r1 + one));
        }
    }
    require(false, "circle_pair_gap: unreachable");
    return one;
}

}  // namespace skolem
