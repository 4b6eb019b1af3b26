#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/engine.hpp"

#include <random>
#include <set>

using namespace skolem;

namespace {

std::set<long> zero_set(const EngineResult& r) {
    std::set<long> out;
    for (const Int& z : r.zeros) out.insert(z.get_si());
    return out;
}

// Ground truth by direct evaluation.
std::set<long> brute_zeros(const LRS& u, unsigned long hi) {
    std::set<long> out;
    auto ts = u.terms(hi);
    for (unsigned long n = 0; n < hi; ++n)
        if (ts[n] == 0) out.insert(static_cast<long>(n));
    return out;
}

bool same_result(const EngineResult& a, const EngineResult& b) {
    if (a.status != b.status) return false;
    if (a.zeros != b.zeros) return false;
    if (a.progressions != b.progressions) return false;
    if (a.searched_below != b.searched_below) return false;
    if (a.cutoff != b.cutoff) return false;
    return true;
}

}  // namespace

TEST_CASE("fibonacci is decided with the single zero at 0") {
    LRS fib({Rat(1), Rat(1)}, {Rat(0), Rat(1)});
    DecideOptions opt;
    EngineResult r = decide(fib, opt);
    CHECK(r.status == Status::Decided);
    CHECK(zero_set(r) == std::set<long>{0});
    CHECK(r.progressions.empty());
    CHECK(r.cutoff > 0);
    CHECK(r.cutoff < 200);
    CHECK(r.searched_below == r.cutoff);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].lead == 1);
    CHECK(!r.branches[0].place.empty());
}

TEST_CASE("three real roots, one interior zero: 2*4^n - 5*2^n + 2") {
    LRS u({Rat(8), Rat(-14), Rat(7)}, {Rat(-1), Rat(0), Rat(14)});
    EngineResult r = decide(u, {});
    CHECK(r.status == Status::Decided);
    CHECK(zero_set(r) == brute_zeros(u, 2000));
    CHECK(zero_set(r).count(1) == 1);
    CHECK(r.progressions.empty());
}

TEST_CASE("polynomial coefficient zero: (n-3) 2^n") {
    LRS u({Rat(-4), Rat(4)}, {Rat(-3), Rat(-4)});
    EngineResult r = decide(u, {});
    CHECK(r.status == Status::Decided);
    CHECK(zero_set(r) == std::set<long>{3});
    CHECK(r.cutoff == 4);  // coefficient root forces the cutoff just past it
}

TEST_CASE("degenerate: 2^n + (-2)^n vanishes on the odd progression") {
    LRS u({Rat(4), Rat(0)}, {Rat(2), Rat(0)});
    CHECK(u.term(0) == 2);
    CHECK(u.term(1) == 0);
    CHECK(u.term(2) == 8);
    CHECK(u.term(3) == 0);
    EngineResult r = decide(u, {});
    CHECK(r.status == Status::Decided);
    CHECK(r.zeros.empty());
    REQUIRE(r.progressions.size() == 1);
    CHECK(r.progressions[0].first == 1);
    CHECK(r.progressions[0].second == 2);
    REQUIRE(r.branches.size() == 2);
    bool saw_all_zero = false;
    for (auto& b : r.branches) saw_all_zero |= b.all_zero;
    CHECK(saw_all_zero);
}

TEST_CASE("degenerate: Fibonacci silenced on odd indices") {
    // roots +-phi, +-phibar; u(2m) = 2 F(2m), u(2m+1) = 0.
    LRS u({Rat(-1), Rat(0), Rat(3), Rat(0)}, {Rat(0), Rat(0), Rat(2), Rat(0)});
    CHECK(u.term(4) == 6);   // 2 F(4)
    CHECK(u.term(6) == 16);  // 2 F(6)
    EngineResult r = decide(u, {});
    CHECK(r.status == Status::Decided);
    REQUIRE(r.progressions.size() == 1);
    CHECK(r.progressions[0].first == 1);
    CHECK(r.progressions[0].second == 2);
    // F(0) = 0 sits at even index 0, outside the progression.
    CHECK(zero_set(r) == std::set<long>{0});
}

TEST_CASE("identically zero sequence reports the trivial progression") {
    LRS z({Rat(1)}, {Rat(0)});
    EngineResult r = decide(z, {});
    CHECK(r.status == Status::Decided);
    CHECK(r.zeros.empty());
    REQUIRE(r.progressions.size() == 1);
    CHECK(r.progressions[0].first == 0);
    CHECK(r.progressions[0].second == 1);
}

TEST_CASE("zero tail after a transient") {
    // u(0) = 5, u(1) = 7, u(n) = 0 for n >= 2: recurrence u(n+2) = 0.
    LRS u({Rat(0), Rat(0)}, {Rat(5), Rat(7)});
    EngineResult r = decide(u, {});
    CHECK(r.status == Status::Decided);
    CHECK(r.zeros.empty());
    REQUIRE(r.progressions.size() == 1);
    CHECK(r.progressions[0].first == 2);
    CHECK(r.progressions[0].second == 1);

    // Same shape with a zero inside the head.
    LRS v({Rat(0), Rat(0), Rat(0)}, {Rat(5), Rat(0), Rat(7)});
    EngineResult rv = decide(v, {});
    CHECK(rv.status == Status::Decided);
    CHECK(zero_set(rv) == std::set<long>{1});
    REQUIRE(rv.progressions.size() == 1);
    CHECK(rv.progressions[0].first == 3);
    CHECK(rv.progressions[0].second == 1);
}

TEST_CASE("honest bound when the cutoff exceeds the cap") {
    // Triple dominance tie plus a fourth root: every usable place needs a
    // linear-forms bound, and those land far beyond any feasible scan.
    LRS u({Rat(-8), Rat(14), Rat(-9), Rat(4)}, {Rat(0), Rat(0), Rat(0), Rat(1)});
    DecideOptions opt;
    opt.cap = 5000;
    EngineResult r = decide(u, opt);
    CHECK(r.status == Status::Bounded);
    CHECK(r.cutoff > r.searched_below);
    CHECK(r.searched_below >= 5000);
    CHECK(zero_set(r) == brute_zeros(u, 5000));
}

TEST_CASE("cap smaller than the natural cutoff still reports found zeros") {
    LRS fib({Rat(1), Rat(1)}, {Rat(0), Rat(1)});
    DecideOptions opt;
    opt.cap = 1;
    EngineResult r = decide(fib, opt);
    CHECK(r.status == Status::Bounded);
    CHECK(zero_set(r) == std::set<long>{0});
    CHECK(r.searched_below >= 1);
    CHECK(r.cutoff > 1);
}

TEST_CASE("thread count does not change the result") {
    // Perturbed three-root sequence with a cutoff big enough to make the
    // threaded scan take several chunks.
    LRS u({Rat(8), Rat(-14), Rat(7)}, {Rat(-1), Rat(0), Rat(14)});
    DecideOptions one, four;
    one.threads = 1;
    four.threads = 4;
    EngineResult r1 = decide(u, one);
    EngineResult r4 = decide(u, four);
    CHECK(same_result(r1, r4));

    LRS fib({Rat(1), Rat(1)}, {Rat(0), Rat(1)});
    EngineResult f1 = decide(fib, one);
    EngineResult f4 = decide(fib, four);
    CHECK(same_result(f1, f4));

    LRS big({Rat(-8), Rat(14), Rat(-9), Rat(4)}, {Rat(0), Rat(0), Rat(0), Rat(1)});
    DecideOptions b1 = one, b4 = four;
    b1.cap = 150000;
    b4.cap = 150000;
    EngineResult g1 = decide(big, b1);
    EngineResult g4 = decide(big, b4);
    CHECK(same_result(g1, g4));
    CHECK(g1.status == Status::Bounded);
}

TEST_CASE("random small instances agree with brute force") {
    std::mt19937 rng(0x3e19a7);
    int decided = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<Rat> rec(k), init(k);
        for (int i = 0; i < k; ++i) {
            rec[i] = Rat(static_cast<long>(rng() % 7) - 3);
            init[i] = Rat(static_cast<long>(rng() % 9) - 4);
        }
        LRS u(rec, init);
        DecideOptions opt;
        opt.cap = 3000;
        EngineResult r = decide(u, opt);
        auto truth = brute_zeros(u, 3000);
        // Every reported isolated zero is genuine and every true zero below
        // the searched bound is reported (possibly via a progression).
        for (long z : zero_set(r)) CHECK(truth.count(z) == 1);
        unsigned long lim = 3000;
        if (r.searched_below < 3000) lim = r.searched_below.get_ui();
        for (long z : truth) {
            if (z >= static_cast<long>(lim)) break;
            bool covered = zero_set(r).count(z) > 0;
            for (auto& [o, m] : r.progressions)
                covered |= Int(z) >= o && (Int(z) - o) % m == 0;
            CHECK(covered);
        }
        if (r.status == Status::Decided) ++decided;
    }
    CHECK(decided >= 10);
}
