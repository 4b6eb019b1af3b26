#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/lrs.hpp"

using namespace skolem;

static QPoly P(std::initializer_list<long> cs) { return QPoly::of(cs); }

static LRS fib() { return LRS({Rat(1), Rat(1)}, {Rat(0), Rat(1)}); }

TEST_CASE("terms and large-index evaluation") {
    LRS f = fib();
    CHECK(f.term(0) == Rat(0));
    CHECK(f.term(10) == Rat(55));
    CHECK(f.term(20) == Rat(6765));
    // Matrix power path against iteration.
    std::vector<Rat> w = f.terms(200);
    CHECK(f.term(199) == w[199]);
    CHECK(f.term(150) == w[150]);
    CHECK(f.charpoly() == P({-1, -1, 1}));

    LRS zero({}, {});
    CHECK(zero.order() == 0);
    CHECK(zero.term(5) == Rat(0));
    CHECK(zero.is_zero_sequence());
}

TEST_CASE("minimization finds the true order") {
    // Fibonacci presented through a larger annihilator
    // (x^2-x-1)(x^2-3x+1) = x^4 - 4x^3 + 3x^2 + x - 1... computed directly:
    QPoly big = P({-1, -1, 1}) * P({1, -3, 1});
    std::vector<Rat> rec(4);
    for (int i = 0; i < 4; ++i) rec[i] = -big[i];
    LRS f = fib();
    std::vector<Rat> init = f.terms(4);
    LRS padded(rec, init);
    // Must still be Fibonacci.
    CHECK(padded.term(10) == Rat(55));
    LRS min = padded.minimized();
    CHECK(min.order() == 2);
    CHECK(min.rec() == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(min.init() == std::vector<Rat>{Rat(0), Rat(1)});

    // A transient sequence: 7, 3, then zeros.
    LRS tr({Rat(0), Rat(0), Rat(1)}, {Rat(7), Rat(3), Rat(0)});
    LRS trm = tr.minimized();
    CHECK(trm.order() == 2);
    CHECK(trm.charpoly() == P({0, 0, 1}));
}

TEST_CASE("integer form preserves the zero structure") {
    LRS u({Rat(1, 2)}, {Rat(1)});  // 1, 1/2, 1/4, ...
    LRS w = u.integer_form();
    CHECK(w.rec() == std::vector<Rat>{Rat(1)});
    CHECK(w.term(5) == Rat(1));

    LRS v({Rat(1), Rat(1)}, {Rat(0), Rat(1, 3)});
    LRS vi = v.integer_form();
    for (unsigned long n = 0; n < 12; ++n) {
        CHECK((v.term(n) == 0) == (vi.term(n) == 0));
        CHECK(den(vi.term(n)) == 1);
    }

    LRS m({Rat(-1, 6), Rat(5, 6)}, {Rat(1), Rat(1, 2)});
    LRS mi = m.integer_form();
    for (unsigned long n = 0; n < 10; ++n) {
        CHECK(den(mi.term(n)) == 1);
        CHECK((m.term(n) == 0) == (mi.term(n) == 0));
    }
}

TEST_CASE("binet form of fibonacci") {
    BinetForm bf = binet_form(fib());
    CHECK(bf.transient == 0);
    CHECK_FALSE(bf.zero_tail);
    REQUIRE(bf.roots.size() == 2);
    CHECK(bf.field.degree() == 2);
    const NumberField& L = bf.field;
    // Coefficients are +-1/sqrt5: check a * (2 lambda - 1) = +-1 exactly,
    // using sqrt5 = 2 phi - 1 = -(2 psi - 1).
    for (const auto& br : bf.roots) {
        CHECK(br.mult == 1);
        FVec s5 = L.sub(L.mul_rat(br.coords, Rat(2)), L.one());
        FVec prod = L.mul(br.coeffs[0], s5);
        CHECK(L.is_rational(prod));
        Rat v = L.rational_value(prod);
        CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("binet form with a repeated root") {
    // U(n) = (n+1) 2^n: charpoly (x-2)^2.
    LRS u({Rat(-4), Rat(4)}, {Rat(1), Rat(4)});
    CHECK(u.term(3) == Rat(32));
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 1);
    CHECK(bf.roots[0].mult == 2);
    CHECK(bf.field.degree() == 1);
    CHECK(bf.roots[0].value == AlgebraicNumber(Rat(2)));
    // f(n) = 1 + n.
    CHECK(bf.field.rational_value(bf.roots[0].coeffs[0]) == Rat(1));
    CHECK(bf.field.rational_value(bf.roots[0].coeffs[1]) == Rat(1));
}

TEST_CASE("binet form strips transients") {
    // 7, 3, 0, 0, ... : minimal charpoly x^2, everything is transient.
    LRS tr({Rat(0), Rat(0), Rat(1)}, {Rat(7), Rat(3), Rat(0)});
    BinetForm bf = binet_form(tr);
    CHECK(bf.transient == 2);
    CHECK(bf.zero_tail);
    CHECK(bf.roots.empty());

    // n * 3^(n-1) for n >= 1 shifted: U(n) = n 3^(n-1) has U(0) = 0 but no
    // zero root; the transient must stay 0.
    LRS v({Rat(-9), Rat(6)}, {Rat(0), Rat(1)});
    BinetForm bv = binet_form(v);
    CHECK(bv.transient == 0);
    REQUIRE(bv.roots.size() == 1);
    CHECK(bv.roots[0].mult == 2);

    // Mixed: one zero root and one genuine root: U(n+2) = 2 U(n+1) with
    // U(0) = 5: sequence 5, 1, 2, 4, 8, ...
    LRS m({Rat(0), Rat(2)}, {Rat(5), Rat(1)});
    BinetForm bm = binet_form(m);
    CHECK(bm.transient == 1);
    CHECK_FALSE(bm.zero_tail);
    REQUIRE(bm.roots.size() == 1);
    CHECK(bm.roots[0].value == AlgebraicNumber(Rat(2)));
    CHECK(bm.stripped.term(0) == Rat(1));
    CHECK(bm.stripped.term(3) == Rat(8));
}

TEST_CASE("degeneracy detection and subsequences") {
    // 2^n + (-2)^n: ratio -1 has order 2.
    LRS d({Rat(4), Rat(0)}, {Rat(2), Rat(0)});
    CHECK(d.term(4) == Rat(32));
    BinetForm bf = binet_form(d);
    REQUIRE(bf.roots.size() == 2);
    CHECK(degeneracy_modulus(bf) == 2);

    LRS even = d.subsequence(2, 0);
    CHECK(even.order() == 1);
    CHECK(even.rec() == std::vector<Rat>{Rat(4)});
    CHECK(even.term(3) == Rat(128));

    LRS odd = d.subsequence(2, 1);
    CHECK(odd.is_zero_sequence());

    // Fibonacci is non-degenerate (phi/psi is not a root of unity).
    CHECK(degeneracy_modulus(binet_form(fib())) == 1);

    // Sixth-root degeneracy: roots 1+i*sqrt3 and 2 have ratio of order 6.
    // charpoly (x^2 - 2x + 4)(x - 2).
    QPoly cp = P({4, -2, 1}) * P({-2, 1});
    std::vector<Rat> rec(3);
    for (int i = 0; i < 3; ++i) rec[i] = -cp[i];
    LRS six(rec, {Rat(0), Rat(1), Rat(1)});
    BinetForm b6 = binet_form(six);
    REQUIRE(b6.roots.size() == 3);
    CHECK(degeneracy_modulus(b6) == 6);
}

TEST_CASE("subsequence of fibonacci") {
    LRS f3 = fib().subsequence(3, 1);  // 1, 3, 13, 55, ...
    CHECK(f3.order() == 2);
    // F(3k+1): charpoly x^2 - 4x - 1.
    CHECK(f3.rec() == std::vector<Rat>{Rat(1), Rat(4)});
    CHECK(f3.term(0) == Rat(1));
    CHECK(f3.term(1) == Rat(3));
    CHECK(f3.term(2) == Rat(13));
    CHECK(f3.term(3) == Rat(55));
}

TEST_CASE("binet reconstruction for a quartic-field instance") {
    // charpoly (x^2-2)(x^2-3): roots +-sqrt2, +-sqrt3, splitting field of
    // degree 4. Sequence with initials 1, 1, 1, 1.
    QPoly cp = P({-2, 0, 1}) * P({-3, 0, 1});
    std::vector<Rat> rec(4);
    for (int i = 0; i < 4; ++i) rec[i] = -cp[i];
    LRS u(rec, {Rat(1), Rat(1), Rat(1), Rat(1)});
    BinetForm bf = binet_form(u);
    CHECK(bf.field.degree() == 4);
    REQUIRE(bf.roots.size() == 4);
    // Degenerate: sqrt2/-sqrt2 = -1.
    CHECK(degeneracy_modulus(bf) == 2);
    // The Binet form itself was validated internally; spot-check one value.
    CHECK(u.term(6) == bf.stripped.term(6));
}
