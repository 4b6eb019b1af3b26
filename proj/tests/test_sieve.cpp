#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/sieve.hpp"

#include <random>

using namespace skolem;

TEST_CASE("fibonacci residue orbits match the classical tables") {
    LRS fib({1, 1}, {0, 1});

    auto p8 = sieve_modulus(fib, 8, 1000);
    REQUIRE(p8.has_value());
    CHECK(p8->preperiod == 0);
    CHECK(p8->period == 12);  // Pisano period of 8
    for (unsigned long r = 0; r < 12; ++r)
        CHECK(p8->zero[r] == (r == 0 || r == 6));
    CHECK(p8->density == doctest::Approx(1.0 / 6));

    auto p2 = sieve_modulus(fib, 2, 1000);
    REQUIRE(p2.has_value());
    CHECK(p2->period == 3);
    for (unsigned long r = 0; r < 3; ++r) CHECK(p2->zero[r] == (r == 0));
}

TEST_CASE("powers of two: zero density filter in both directions") {
    LRS u({2}, {1});
    auto p8 = sieve_modulus(u, 8, 1000);
    REQUIRE(p8.has_value());
    CHECK(p8->preperiod == 3);  // 2^n = 0 mod 8 from n = 3 on
    CHECK(p8->period == 1);
    CHECK(p8->density == 1.0);  // no information

    auto p7 = sieve_modulus(u, 7, 1000);
    REQUIRE(p7.has_value());
    CHECK(p7->preperiod == 0);
    CHECK(p7->period == 3);
    CHECK(p7->density == 0.0);  // certificate: no zeros at all

    Sieve sv = build_sieve(u, 1 << 16);
    CHECK(sv.density == 0.0);
    CHECK(!sv.admits(17));
    CHECK(!sv.admits(Int(1) << 40));
}

TEST_CASE("combined fibonacci sieve is sharp and still a superset") {
    LRS fib({1, 1}, {0, 1});
    Sieve sv = build_sieve(fib, 1 << 18);
    CHECK(sv.density <= 1.0 / 6);
    CHECK(sv.admits(0));  // the exact zero must survive

    auto vals = fib.terms(2000);
    for (long n = 0; n < 2000; ++n)
        if (!sv.admits(n)) CHECK(vals[n] != 0);
}

TEST_CASE("random recurrences: rejected residues never hide a zero") {
    std::mt19937 rng(0x51e7e5);
    std::uniform_int_distribution<int> ord(1, 4), coef(-6, 6), iv(-9, 9);
    long checked = 0, tested_seqs = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int k = ord(rng);
        std::vector<Rat> rec(k), init(k);
        for (auto& c : rec) c = Rat(coef(rng));
        if (rec[0] == 0) rec[0] = 1;
        bool nonzero = false;
        for (auto& c : init) {
            c = Rat(iv(rng));
            if (c != 0) nonzero = true;
        }
        if (!nonzero) init[0] = 1;

        LRS u(rec, init);
        Sieve sv = build_sieve(u, 1 << 16);
        CHECK(sv.allowed.size() == sv.period);
        ++tested_seqs;
        auto vals = u.terms(800);
        for (long n = 0; n < 800; ++n)
            if (!sv.admits(n)) {
                CHECK(vals[n] != 0);
                ++checked;
            }
    }
    CHECK(tested_seqs == 20);
    CHECK(checked > 2000);  // the filter actually rejects a lot
}

TEST_CASE("non-integer input is rejected") {
    LRS u({Rat(1, 2)}, {1});
    CHECK_THROWS(sieve_modulus(u, 8, 100));
}
