#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/numberfield.hpp"
#include "skolem/places.hpp"

#include <random>

using namespace skolem;

static QPoly P(std::initializer_list<long> cs) { return QPoly::of(cs); }

static AlgebraicNumber sqrt_of(long n) {
    return AlgebraicNumber(Rat(n)).sqrt_nonneg();
}

static AlgebraicNumber root_with_positive_imag(const QPoly& f) {
    for (auto& r : AlgebraicNumber::roots_of(f))
        if (!r.is_real() && r.enclosure().im().is_positive()) return r;
    REQUIRE(false);
    return AlgebraicNumber(Rat(0));
}

// Total contribution of all places of x: must vanish for x != 0.
static double product_formula_defect(const NumberField& L, const FVec& x) {
    double total = 0;
    Rat eps(1, Int(1) << 80);
    for (const ArchPlace& v : archimedean_places(L)) {
        RI a = L.embed(x, v.emb, eps).abs();
        double lo = a.lo_d(), hi = a.hi_d();
        total += v.dv() * std::log((lo + hi) / 2);
    }
    for (const Int& p : relevant_primes(L, {x})) {
        double lp = std::log(mpz_get_d(p.get_mpz_t()));
        for (const FinitePlace& v : finite_places_above(L, p)) {
            Rat c = v.log_abs_coeff(x);
            total += v.dv() * mpq_get_d(c.get_mpq_t()) * lp;
        }
    }
    return std::abs(total);
}

// Height from the place decomposition, to compare with the minpoly route.
static double height_via_places(const NumberField& L, const FVec& x) {
    double total = 0;
    Rat eps(1, Int(1) << 80);
    for (const ArchPlace& v : archimedean_places(L)) {
        RI a = L.embed(x, v.emb, eps).abs();
        double m = (a.lo_d() + a.hi_d()) / 2;
        if (m > 1) total += v.dv() * std::log(m);
    }
    for (const Int& p : relevant_primes(L, {x})) {
        double lp = std::log(mpz_get_d(p.get_mpz_t()));
        for (const FinitePlace& v : finite_places_above(L, p)) {
            double c = mpq_get_d(v.log_abs_coeff(x).get_mpq_t());
            if (c > 0) total += v.dv() * c * lp;
        }
    }
    return total / L.degree();
}

TEST_CASE("field of sqrt2 and sqrt3") {
    AlgebraicNumber r2 = sqrt_of(2), r3 = sqrt_of(3);
    FieldBuild fb = build_field({r2, r3});
    const NumberField& L = fb.field;
    CHECK(L.degree() == 4);
    CHECK(L.minpoly() == P({1, 0, -10, 0, 1}));  // theta = sqrt2 + sqrt3
    CHECK(L.to_algebraic(fb.coords[0]) == r2);
    CHECK(L.to_algebraic(fb.coords[1]) == r3);
    // sqrt2 = (theta^3 - 9 theta) / 2 in the power basis.
    FVec expect = L.from_poly(QPoly({Rat(0), Rat(-9, 2), Rat(0), Rat(1, 2)}));
    CHECK(fb.coords[0] == expect);
    // Arithmetic: sqrt2 * sqrt3 = sqrt6, exactly.
    FVec prod = L.mul(fb.coords[0], fb.coords[1]);
    CHECK(L.to_algebraic(prod) == sqrt_of(6));
    CHECK(L.minpoly_of(prod) == P({-6, 0, 1}));
    // charpoly of sqrt2 in the quartic field is (x^2-2)^2.
    CHECK(L.charpoly(fb.coords[0]) == P({-2, 0, 1}) * P({-2, 0, 1}));
    CHECK(L.norm(fb.coords[0]) == Rat(4));
    CHECK(L.minpoly_of(fb.coords[0]) == P({-2, 0, 1}));
    // Inverse round-trip.
    FVec inv = L.inverse(prod);
    CHECK(L.mul(inv, prod) == L.one());
    CHECK(L.to_algebraic(inv) == sqrt_of(6).inverse());
    // Rational elements flow through unchanged.
    CHECK(L.is_rational(L.mul(prod, inv)));
    CHECK(L.rational_value(L.mul(prod, inv)) == Rat(1));
}

TEST_CASE("field construction handles dependent and rational inputs") {
    AlgebraicNumber r2 = sqrt_of(2), r3 = sqrt_of(3), r6 = sqrt_of(6);
    FieldBuild fb = build_field({AlgebraicNumber(Rat(1, 2)), r2, r3, r6});
    CHECK(fb.field.degree() == 4);
    CHECK(fb.field.rational_value(fb.coords[0]) == Rat(1, 2));
    CHECK(fb.field.to_algebraic(fb.coords[1]) == r2);
    CHECK(fb.field.to_algebraic(fb.coords[3]) == r6);
    FVec prod = fb.field.mul(fb.coords[1], fb.coords[2]);
    CHECK(prod == fb.coords[3]);

    // All-rational input stays in Q.
    FieldBuild fq = build_field({AlgebraicNumber(Rat(7)), AlgebraicNumber(Rat(-2, 3))});
    CHECK(fq.field.degree() == 1);
    CHECK(fq.field.rational_value(fq.coords[1]) == Rat(-2, 3));
}

TEST_CASE("field with a non-integral and complex generator") {
    // (1 + i sqrt3)/2: primitive 6th root of unity, non-integral scaling
    // handled by the builder.
    AlgebraicNumber z = root_with_positive_imag(P({1, -1, 1}));
    AlgebraicNumber i = root_with_positive_imag(P({1, 0, 1}));
    FieldBuild fb = build_field({z, i});
    CHECK(fb.field.degree() == 4);
    CHECK(fb.field.to_algebraic(fb.coords[0]) == z);
    CHECK(fb.field.to_algebraic(fb.coords[1]) == i);
    FVec z6 = fb.field.pow_ui(fb.coords[0], 6);
    CHECK(fb.field.is_rational(z6));
    CHECK(fb.field.rational_value(z6) == Rat(1));
}

TEST_CASE("archimedean places") {
    FieldBuild quartic = build_field({sqrt_of(2), sqrt_of(3)});
    auto arch = archimedean_places(quartic.field);
    CHECK(arch.size() == 4);
    int dv = 0;
    for (auto& v : arch) {
        CHECK(v.real);
        dv += v.dv();
    }
    CHECK(dv == 4);

    FieldBuild gauss = build_field({root_with_positive_imag(P({1, 0, 1}))});
    arch = archimedean_places(gauss.field);
    CHECK(arch.size() == 1);
    CHECK_FALSE(arch[0].real);
    CHECK(arch[0].dv() == 2);

    AlgebraicNumber cbrt2 = AlgebraicNumber::roots_of(P({-2, 0, 0, 1}))[0];
    REQUIRE(cbrt2.is_real());
    FieldBuild cubic = build_field({cbrt2});
    arch = archimedean_places(cubic.field);
    CHECK(arch.size() == 2);
    dv = 0;
    for (auto& v : arch) dv += v.dv();
    CHECK(dv == 3);
}

TEST_CASE("finite places of the gaussian field") {
    FieldBuild fb = build_field({root_with_positive_imag(P({1, 0, 1}))});
    const NumberField& L = fb.field;
    FVec i = fb.coords[0];

    auto above5 = finite_places_above(L, Int(5));
    REQUIRE(above5.size() == 2);
    CHECK(above5[0].e() == 1);
    CHECK(above5[0].f() == 1);
    CHECK(above5[1].e() == 1);
    CHECK(above5[1].f() == 1);
    // 2+i generates one of the two primes above 5.
    FVec x = L.add(L.from_rat(Rat(2)), i);
    long v0 = above5[0].valuation(x), v1 = above5[1].valuation(x);
    CHECK(((v0 == 1 && v1 == 0) || (v0 == 0 && v1 == 1)));
    CHECK(above5[0].valuation(L.from_rat(Rat(5))) == 1);
    CHECK(above5[1].valuation(L.from_rat(Rat(5))) == 1);

    auto above2 = finite_places_above(L, Int(2));
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].e() == 2);
    CHECK(above2[0].f() == 1);
    CHECK(above2[0].valuation(L.add(L.one(), i)) == 1);  // 1+i
    CHECK(above2[0].valuation(L.from_rat(Rat(2))) == 2);
    CHECK(above2[0].valuation(L.from_rat(Rat(1, 2))) == -2);

    auto above3 = finite_places_above(L, Int(3));
    REQUIRE(above3.size() == 1);
    CHECK(above3[0].e() == 1);
    CHECK(above3[0].f() == 2);
    CHECK(above3[0].valuation(L.from_rat(Rat(3))) == 1);
}

TEST_CASE("finite places of the golden ratio field") {
    AlgebraicNumber phi = AlgebraicNumber::roots_of(P({-1, -1, 1}))[1];
    REQUIRE(phi.sign() == 1);
    FieldBuild fb = build_field({phi});
    const NumberField& L = fb.field;
    auto above5 = finite_places_above(L, Int(5));
    REQUIRE(above5.size() == 1);
    CHECK(above5[0].e() == 2);
    CHECK(above5[0].f() == 1);
    // sqrt5 = 2 phi - 1 has valuation 1; phi is a unit.
    FVec s5 = L.sub(L.mul_rat(fb.coords[0], Rat(2)), L.one());
    CHECK(above5[0].valuation(s5) == 1);
    CHECK(above5[0].valuation(L.from_rat(Rat(5))) == 2);
    CHECK(above5[0].valuation(fb.coords[0]) == 0);
    // phi is a unit everywhere: no relevant primes at all.
    CHECK(relevant_primes(L, {fb.coords[0]}).empty());
}

TEST_CASE("round 2 fixes a non-maximal equation order") {
    // alpha = 3 sqrt5: Z[alpha] has index 6 in the maximal order.
    AlgebraicNumber a = sqrt_of(45);
    FieldBuild fb = build_field({a});
    const NumberField& L = fb.field;
    CHECK(L.degree() == 2);

    auto above2 = finite_places_above(L, Int(2));
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].e() == 1);
    CHECK(above2[0].f() == 2);
    CHECK(above2[0].valuation(L.from_rat(Rat(2))) == 1);

    auto above3 = finite_places_above(L, Int(3));
    REQUIRE(above3.size() == 1);
    CHECK(above3[0].e() == 1);
    CHECK(above3[0].f() == 2);
    CHECK(above3[0].valuation(fb.coords[0]) == 1);  // nu_3(3 sqrt5) = 1

    auto above5 = finite_places_above(L, Int(5));
    REQUIRE(above5.size() == 1);
    CHECK(above5[0].e() == 2);
    CHECK(above5[0].f() == 1);
    CHECK(above5[0].valuation(fb.coords[0]) == 1);  // nu_5(3 sqrt5) = 1
}

TEST_CASE("wild ramification in the pure cubic field") {
    AlgebraicNumber cbrt2 = AlgebraicNumber::roots_of(P({-2, 0, 0, 1}))[0];
    FieldBuild fb = build_field({cbrt2});
    const NumberField& L = fb.field;

    auto above2 = finite_places_above(L, Int(2));
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].e() == 3);
    CHECK(above2[0].f() == 1);
    CHECK(above2[0].valuation(fb.coords[0]) == 1);
    CHECK(above2[0].valuation(L.from_rat(Rat(2))) == 3);

    auto above3 = finite_places_above(L, Int(3));
    REQUIRE(above3.size() == 1);
    CHECK(above3[0].e() == 3);
    CHECK(above3[0].f() == 1);
    CHECK(above3[0].valuation(L.from_rat(Rat(3))) == 3);

    auto above31 = finite_places_above(L, Int(31));
    int efsum = 0;
    for (auto& v : above31) efsum += v.dv();
    CHECK(efsum == 3);
}

TEST_CASE("places of the biquadratic field at 2 and 5") {
    FieldBuild fb = build_field({sqrt_of(2), sqrt_of(3)});
    const NumberField& L = fb.field;
    // 2 is totally ramified (it ramifies in every quadratic subfield).
    auto above2 = finite_places_above(L, Int(2));
    REQUIRE(above2.size() == 1);
    CHECK(above2[0].e() == 4);
    CHECK(above2[0].f() == 1);
    CHECK(above2[0].valuation(fb.coords[0]) == 2);  // nu(sqrt2) = e/2
    // 5 is inert in Q(sqrt2) and splits in Q(sqrt6).
    auto above5 = finite_places_above(L, Int(5));
    REQUIRE(above5.size() == 2);
    for (auto& v : above5) {
        CHECK(v.e() == 1);
        CHECK(v.f() == 2);
        CHECK(v.valuation(L.from_rat(Rat(5))) == 1);
    }
}

TEST_CASE("product formula and height cross-check") {
    FieldBuild fb = build_field({sqrt_of(2), sqrt_of(3)});
    const NumberField& L = fb.field;
    std::mt19937_64 rng(0x5eedf00dULL);
    std::uniform_int_distribution<long> coef(-6, 6), dens(1, 4);
    int tried = 0;
    while (tried < 12) {
        FVec x(4, Rat(0));
        for (auto& c : x) c = Rat(coef(rng), dens(rng));
        if (L.is_zero(x)) continue;
        ++tried;
        CHECK(product_formula_defect(L, x) < 1e-6);
        RI h = L.height_of(x);
        double hv = height_via_places(L, x);
        CHECK(std::abs((h.lo_d() + h.hi_d()) / 2 - hv) < 1e-6);
    }

    // Same checks in a field with complex embeddings.
    AlgebraicNumber i = root_with_positive_imag(P({1, 0, 1}));
    FieldBuild fg = build_field({i});
    const NumberField& G = fg.field;
    for (long a = -3; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            FVec x = fg.field.add(G.from_rat(Rat(a, 2)),
                                  G.mul_rat(fg.coords[0], Rat(b, 3)));
            CHECK(product_formula_defect(G, x) < 1e-6);
            RI h = G.height_of(x);
            CHECK(std::abs((h.lo_d() + h.hi_d()) / 2 - height_via_places(G, x)) <
                  1e-6);
        }
}

TEST_CASE("relevant primes") {
    FieldBuild fb = build_field({sqrt_of(2)});
    const NumberField& L = fb.field;
    auto ps = relevant_primes(L, {fb.coords[0]});
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == 2);

    auto ps2 = relevant_primes(L, {L.from_rat(Rat(3, 2))});
    REQUIRE(ps2.size() == 2);
    CHECK(ps2[0] == 2);
    CHECK(ps2[1] == 3);

    // 2+i has norm 5.
    AlgebraicNumber i = root_with_positive_imag(P({1, 0, 1}));
    FieldBuild fg = build_field({i});
    FVec x = fg.field.add(fg.field.from_rat(Rat(2)), fg.coords[0]);
    auto ps3 = relevant_primes(fg.field, {x});
    REQUIRE(ps3.size() == 1);
    CHECK(ps3[0] == 5);

    CHECK(relevant_primes(L, {L.one()}).empty());
}

TEST_CASE("valuations against rational p-adic oracle") {
    // In the field, valuations of rationals must be e * nu_p.
    FieldBuild fb = build_field({sqrt_of(2), sqrt_of(3)});
    const NumberField& L = fb.field;
    for (long pl : {2L, 3L, 5L, 7L}) {
        Int p(pl);
        auto places = finite_places_above(L, p);
        int efsum = 0;
        for (auto& v : places) efsum += v.dv();
        CHECK(efsum == 4);
        std::vector<Rat> samples{Rat(pl), Rat(1, pl), Rat(pl * pl, 3),
                                 Rat(7, 4)};
        for (const Rat& q : samples) {
            long nu = padic_valuation(q, p);
            for (auto& v : places)
                CHECK(v.valuation(L.from_rat(q)) == v.e() * nu);
        }
    }
}
