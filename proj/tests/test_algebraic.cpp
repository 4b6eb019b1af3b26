#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/algebraic.hpp"
#include "skolem/exactreal.hpp"

#include <random>

using namespace skolem;

static QPoly P(std::initializer_list<long> cs) { return QPoly::of(cs); }

static AlgebraicNumber real_root_of(const QPoly& f, int which = 0) {
    auto roots = AlgebraicNumber::roots_of(f);
    std::vector<AlgebraicNumber> reals;
    for (auto& r : roots)
        if (r.is_real()) reals.push_back(r);
    REQUIRE(static_cast<int>(reals.size()) > which);
    // roots_of orders real roots ascending within each factor
    return reals[which];
}

static AlgebraicNumber sqrt_of(long n) {
    return AlgebraicNumber(Rat(n)).sqrt_nonneg();
}

TEST_CASE("cyclotomic and phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(4) == P({1, 0, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
    CHECK(root_of_unity_order(cyclotomic(12)) == 12);
    CHECK(root_of_unity_order(cyclotomic(7)) == 7);
    CHECK(root_of_unity_order(P({-2, 0, 1})) == std::nullopt);
    CHECK(root_of_unity_order(P({-1, 1})) == 1);
    CHECK(root_of_unity_order(P({1, 1})) == 2);
}

TEST_CASE("sqrt2 basics") {
    AlgebraicNumber r2 = sqrt_of(2);
    CHECK(r2.degree() == 2);
    CHECK(r2.minpoly() == P({-2, 0, 1}));
    CHECK(r2.sign() == 1);
    CHECK(r2.is_real());
    AlgebraicNumber four = r2 * r2;
    CHECK(four.is_rational());
    CHECK(four.rational_value() == Rat(2));
    CHECK((r2 + (-r2)).is_zero());
    CHECK(r2.inverse() * r2 == AlgebraicNumber(Rat(1)));
    CHECK(r2.pow(2) == AlgebraicNumber(Rat(2)));
    CHECK(r2.pow(4) == AlgebraicNumber(Rat(4)));
    CHECK(r2.pow(-2) == AlgebraicNumber(Rat(1, 2)));
}

TEST_CASE("sqrt2 plus sqrt3") {
    AlgebraicNumber s = sqrt_of(2) + sqrt_of(3);
    CHECK(s.degree() == 4);
    CHECK(s.minpoly() == P({1, 0, -10, 0, 1}));
    CHECK(s.sign() == 1);
    // s - sqrt2 - sqrt3 == 0
    CHECK((s - sqrt_of(2) - sqrt_of(3)).is_zero());
    // nested radical identity: sqrt(5 + 2 sqrt 6) = sqrt2 + sqrt3
    AlgebraicNumber inner = AlgebraicNumber(Rat(5)) + sqrt_of(6) * AlgebraicNumber(Rat(2));
    AlgebraicNumber nested = inner.sqrt_nonneg();
    CHECK(nested == s);
}

TEST_CASE("complex arithmetic") {
    // 1 + i as root of x^2 - 2x + 2
    auto roots = AlgebraicNumber::roots_of(P({2, -2, 1}));
    REQUIRE(roots.size() == 2);
    AlgebraicNumber z = roots[0].enclosure().im().lo_rat() > 0 ? roots[0] : roots[1];
    CHECK(!z.is_real());
    AlgebraicNumber zbar = z.conj();
    CHECK(z != zbar);
    AlgebraicNumber norm = z * zbar;
    CHECK(norm.is_rational());
    CHECK(norm.rational_value() == Rat(2));
    AlgebraicNumber re2 = z + zbar;
    CHECK(re2.is_rational());
    CHECK(re2.rational_value() == Rat(2));
    // |1+i| = sqrt 2
    CHECK(z.abs() == sqrt_of(2));
    // (1+i)^2 = 2i, abs = 2
    CHECK(z.pow(2).abs() == AlgebraicNumber(Rat(2)));
}

TEST_CASE("roots of unity") {
    // (1 + i sqrt3)/2 is a primitive 6th root: x^2 - x + 1
    auto roots = AlgebraicNumber::roots_of(P({1, -1, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root_of_unity() == 6);
    CHECK(roots[0].pow(6) == AlgebraicNumber(Rat(1)));
    CHECK(roots[0].pow(3) == AlgebraicNumber(Rat(-1)));
    CHECK(sqrt_of(2).root_of_unity() == std::nullopt);
    CHECK(AlgebraicNumber(Rat(1)).root_of_unity() == 1);
    CHECK(AlgebraicNumber(Rat(-1)).root_of_unity() == 2);
    CHECK(AlgebraicNumber(Rat(2)).root_of_unity() == std::nullopt);
}

TEST_CASE("signs and comparisons") {
    CHECK(sqrt_of(2).compare(sqrt_of(3)) == -1);
    CHECK(sqrt_of(3).compare(sqrt_of(2)) == 1);
    CHECK(sqrt_of(2).compare(AlgebraicNumber(Rat(141421, 100000))) == 1);
    CHECK(sqrt_of(2).compare(AlgebraicNumber(Rat(141422, 100000))) == -1);
    AlgebraicNumber phi = real_root_of(P({-1, -1, 1}), 1);  // golden ratio
    CHECK(phi.sign() == 1);
    CHECK(phi.compare(AlgebraicNumber(Rat(8, 5))) == 1);
    CHECK(phi.compare(AlgebraicNumber(Rat(13, 8))) == -1);
    // phi^2 = phi + 1
    CHECK(phi.pow(2) == phi + AlgebraicNumber(Rat(1)));
}

TEST_CASE("heights frozen values") {
    double log2 = 0.6931471805599453;
    double log3 = 1.0986122886681098;
    CHECK(AlgebraicNumber(Rat(1)).height().hi_d() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(AlgebraicNumber(Rat(2)).height().lo_d() == doctest::Approx(log2).epsilon(1e-6));
    CHECK(AlgebraicNumber(Rat(3, 2)).height().lo_d() == doctest::Approx(log3).epsilon(1e-6));
    CHECK(AlgebraicNumber(Rat(-5)).height().lo_d() ==
          doctest::Approx(std::log(5.0)).epsilon(1e-6));
    // h(sqrt2) = (1/2) log 2
    CHECK(sqrt_of(2).height().lo_d() == doctest::Approx(log2 / 2).epsilon(1e-6));
    // h(2^(1/3)) = (1/3) log 2
    AlgebraicNumber cbrt2 = real_root_of(P({-2, 0, 0, 1}));
    CHECK(cbrt2.height().lo_d() == doctest::Approx(log2 / 3).epsilon(1e-6));
    // golden ratio: h = log phi = 0.4812118251/2
    AlgebraicNumber phi = real_root_of(P({-1, -1, 1}), 1);
    CHECK(phi.height().lo_d() == doctest::Approx(0.2406059125).epsilon(1e-6));
    // x^2-x+1 has roots on the unit circle: height 0
    auto z6 = AlgebraicNumber::roots_of(P({1, -1, 1}))[0];
    CHECK(z6.height().hi_d() == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("height laws random") {
    std::mt19937 rng(2026);
    auto rnd_number = [&]() -> AlgebraicNumber {
        for (;;) {
            int deg = 1 + static_cast<int>(rng() % 4);
            std::vector<Rat> c(deg + 1);
            for (auto& x : c) x = Rat(static_cast<long>(rng() % 13) - 6);
            c[deg] = Rat(1 + static_cast<long>(rng() % 3));
            QPoly f(std::move(c));
            if (f.degree() < 1) continue;
            auto roots = AlgebraicNumber::roots_of(f);
            if (roots.empty()) continue;
            auto z = roots[rng() % roots.size()];
            if (z.is_zero()) continue;
            return z;
        }
    };
    const double tol = 1e-6;
    for (int t = 0; t < 40; ++t) {
        AlgebraicNumber x = rnd_number();
        double hx = x.height().hi_d();
        // h(1/x) = h(x)
        CHECK(x.inverse().height().hi_d() == doctest::Approx(hx).epsilon(1e-5));
        // h(x^n) = n h(x)
        long n = 2 + static_cast<long>(rng() % 3);
        double hxn = x.pow(n).height().hi_d();
        CHECK(hxn == doctest::Approx(n * x.height().lo_d()).epsilon(1e-5));
        // h(-x) = h(x)
        CHECK((-x).height().hi_d() == doctest::Approx(hx).epsilon(1e-5));
        if (t % 2 == 0) {
            AlgebraicNumber y = rnd_number();
            double hy = y.height().hi_d();
            CHECK((x * y).height().lo_d() <= hx + hy + tol);
            CHECK((x + y).height().lo_d() <= hx + hy + 0.6931472 + tol);
        }
    }
}

TEST_CASE("exact real signs") {
    ExactReal a = ExactReal::of(sqrt_of(2)) * ExactReal::of(sqrt_of(3)) -
                  ExactReal::of(sqrt_of(6));
    CHECK(a.sign() == 0);
    ExactReal b = ExactReal::of(sqrt_of(2)) - ExactReal::of_rat(Rat(7, 5));
    CHECK(b.sign() == 1);
    ExactReal c = ExactReal::of(sqrt_of(2)) - ExactReal::of_rat(Rat(3, 2));
    CHECK(c.sign() == -1);
    ExactReal d = (ExactReal::of(sqrt_of(2)) * ExactReal::of(sqrt_of(2)) -
                   ExactReal::of_rat(Rat(2)));
    CHECK(d.is_zero());
    // sqrt(2)*sqrt(3)*sqrt(6) = 6
    ExactReal e = ExactReal::of(sqrt_of(2)) * ExactReal::of(sqrt_of(3)) *
                      ExactReal::of(sqrt_of(6)) -
                  ExactReal::of_rat(Rat(6));
    CHECK(e.is_zero());
    CHECK(ExactReal::of_rat(Rat(0)).sign() == 0);
    // compare
    CHECK(ExactReal::of(sqrt_of(5)).compare(ExactReal::of_rat(Rat(9, 4))) == -1);
}

TEST_CASE("equality across systems") {
    AlgebraicNumber a = sqrt_of(2);
    AlgebraicNumber b = sqrt_of(8) * AlgebraicNumber(Rat(1, 2));
    CHECK(a == b);
    AlgebraicNumber c = -sqrt_of(2);
    CHECK(a != c);
    CHECK((a + c).is_zero());
}
