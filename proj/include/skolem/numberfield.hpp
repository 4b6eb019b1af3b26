#pragma once

#include "skolem/algebraic.hpp"

namespace skolem {

// Coordinates of a field element in the power basis 1, theta, ..., theta^(D-1).
using FVec = std::vector<Rat>;

// A number field L = Q(theta) presented by the monic integral minimal
// polynomial of theta, together with a distinguished complex root so that
// elements have definite values. Elements are coordinate vectors in the
// power basis.
class NumberField {
public:
    // The trivial field Q.
    NumberField();
    // Q(theta); theta must be an algebraic integer (monic integer minpoly).
    explicit NumberField(const AlgebraicNumber& theta);

    int degree() const { return D_; }
    const QPoly& minpoly() const { return m_; }
    const AlgebraicNumber& theta() const { return theta_; }
    // Root system of minpoly; the embeddings of L. Null when L = Q.
    const std::shared_ptr<RootSystem>& embeddings() const { return sys_; }
    int theta_index() const { return tidx_; }

    FVec zero() const { return FVec(D_, Rat(0)); }
    FVec one() const;
    FVec from_rat(const Rat& q) const;
    FVec gen() const;  // theta itself (requires D >= 2)
    bool is_zero(const FVec& x) const;
    bool is_rational(const FVec& x) const;
    Rat rational_value(const FVec& x) const;

    FVec add(const FVec& a, const FVec& b) const;
    FVec sub(const FVec& a, const FVec& b) const;
    FVec neg(const FVec& a) const;
    FVec mul(const FVec& a, const FVec& b) const;
    FVec mul_rat(const FVec& a, const Rat& q) const;
    FVec inverse(const FVec& a) const;
    FVec div(const FVec& a, const FVec& b) const;
    FVec pow_ui(const FVec& a, unsigned long n) const;

    QPoly to_poly(const FVec& a) const;
    FVec from_poly(const QPoly& p) const;  // reduced mod minpoly

    // Characteristic polynomial of multiplication by a (degree D), and the
    // exact minimal polynomial (charpoly is a power of it).
    QPoly charpoly(const FVec& a) const;
    QPoly minpoly_of(const FVec& a) const;
    Rat norm(const FVec& a) const;

    // The element as an exact algebraic number via the distinguished root.
    AlgebraicNumber to_algebraic(const FVec& a) const;

    // Enclosure of the image of a under the emb-th embedding (root order of
    // the root system), after refining theta's box to eps.
    CI embed(const FVec& a, int emb, const Rat& eps) const;

    // Absolute logarithmic Weil height of the element.
    RI height_of(const FVec& a) const;

private:
    int D_;
    QPoly m_;  // monic integral
    AlgebraicNumber theta_;
    std::shared_ptr<RootSystem> sys_;
    int tidx_ = -1;
};

// Smallest field containing all the given numbers, with their coordinates.
// Built incrementally through certified primitive elements.
struct FieldBuild {
    NumberField field;
    std::vector<FVec> coords;
};
FieldBuild build_field(const std::vector<AlgebraicNumber>& nums);

}  // namespace skolem
