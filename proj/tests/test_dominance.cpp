#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/dominance.hpp"

#include <cmath>
#include <set>

using namespace skolem;

namespace {

constexpr mpfr_prec_t kPrec = 128;

int index_of_rational(const BinetForm& bf, const Rat& r) {
    for (size_t i = 0; i < bf.roots.size(); ++i)
        if (bf.roots[i].value.is_rational() &&
            bf.roots[i].value.rational_value() == r)
            return (int)i;
    REQUIRE(false);
    return -1;
}

std::set<int> as_set(const std::vector<int>& v) {
    return std::set<int>(v.begin(), v.end());
}

void check_gap(const RI& g, double ref) {
    CHECK(g.lo_d() > 0.0);
    CHECK(g.lo_d() <= ref * (1 + 1e-9) + 1e-15);
    CHECK(g.hi_d() >= ref * (1 - 1e-9) - 1e-15);
    CHECK(g.hi_d() - g.lo_d() < 1e-9 * (std::abs(ref) + 1));
}

std::vector<FVec> root_coords(const BinetForm& bf) {
    std::vector<FVec> xs;
    for (const auto& r : bf.roots) xs.push_back(r.coords);
    return xs;
}

}  // namespace

TEST_CASE("fibonacci: one dominant root at each real embedding, no finite "
          "places") {
    LRS fib({1, 1}, {0, 1});
    BinetForm bf = binet_form(fib);
    REQUIRE(bf.roots.size() == 2);

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 2);  // two real embeddings, roots are units
    for (const auto& up : ups) {
        CHECK(up.place.arch);
        CHECK(up.layers.lead_count() == 1);
        CHECK(up.layers.groups.size() == 2);
        double two_log_phi = 2 * std::log((1 + std::sqrt(5.0)) / 2);
        check_gap(place_gap(bf.field, root_coords(bf), up, kPrec),
                  two_log_phi);
    }
    // The two embeddings single out different roots.
    CHECK(ups[0].layers.groups[0][0] != ups[1].layers.groups[0][0]);
}

TEST_CASE("roots 4,2,1: strict archimedean chain plus a 2-adic chain") {
    // u(n) = 2*4^n - 5*2^n + 2, charpoly (x-4)(x-2)(x-1).
    LRS u({8, -14, 7}, {-1, 0, 14});
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 3);
    int i4 = index_of_rational(bf, 4), i2 = index_of_rational(bf, 2),
        i1 = index_of_rational(bf, 1);

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 2);

    const auto& arch = ups[0];
    CHECK(arch.place.arch);
    REQUIRE(arch.layers.groups.size() == 3);
    CHECK(arch.layers.groups[0] == std::vector<int>{i4});
    CHECK(arch.layers.groups[1] == std::vector<int>{i2});
    CHECK(arch.layers.groups[2] == std::vector<int>{i1});
    check_gap(place_gap(bf.field, root_coords(bf), arch, kPrec),
              std::log(2.0));

    const auto& dyadic = ups[1];
    CHECK(!dyadic.place.arch);
    CHECK(dyadic.place.fin.p() == 2);
    REQUIRE(dyadic.layers.groups.size() == 3);
    CHECK(dyadic.layers.groups[0] == std::vector<int>{i1});  // unit leads
    CHECK(dyadic.layers.groups[1] == std::vector<int>{i2});
    CHECK(dyadic.layers.groups[2] == std::vector<int>{i4});
    check_gap(place_gap(bf.field, root_coords(bf), dyadic, kPrec),
              std::log(2.0));
}

TEST_CASE("conjugate pair 2+-i: archimedean tie, split 5-adic places decide") {
    LRS u({-5, 4}, {0, 1});
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 2);

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 3);

    CHECK(ups[0].place.arch);
    CHECK(ups[0].layers.lead_count() == 2);  // |2+i| = |2-i|
    CHECK(ups[0].layers.groups.size() == 1);

    for (int k : {1, 2}) {
        CHECK(!ups[k].place.arch);
        CHECK(ups[k].place.fin.p() == 5);
        CHECK(ups[k].layers.lead_count() == 1);
        check_gap(place_gap(bf.field, root_coords(bf), ups[k], kPrec),
                  std::log(5.0));
    }
    // The two places above 5 lead with different roots.
    CHECK(ups[1].layers.groups[0][0] != ups[2].layers.groups[0][0]);
}

TEST_CASE("three roots of modulus 2: archimedean place has a triple tie") {
    // charpoly (x^2-x+4)(x-2): roots (1 +- i sqrt(15))/2 and 2, all |.| = 2.
    LRS u({8, -6, 3}, {0, 0, 1});
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 3);
    CHECK(bf.field.degree() == 2);  // Q(sqrt(-15))

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 3);

    CHECK(ups[0].place.arch);
    CHECK(ups[0].layers.lead_count() == 3);
    CHECK(ups[0].layers.groups.size() == 1);
    CHECK(ups[0].layers.tail().empty());

    // -15 is 1 mod 8, so 2 splits; each place pins a different half plane.
    int i2 = index_of_rational(bf, 2);
    for (int k : {1, 2}) {
        CHECK(!ups[k].place.arch);
        CHECK(ups[k].place.fin.p() == 2);
        CHECK(ups[k].place.fin.e() == 1);
        CHECK(ups[k].place.fin.f() == 1);
        REQUIRE(ups[k].layers.groups.size() == 3);
        CHECK(ups[k].layers.lead_count() == 1);
        CHECK(ups[k].layers.groups[0][0] != i2);   // a complex root leads
        CHECK(ups[k].layers.groups[1] == std::vector<int>{i2});
        check_gap(place_gap(bf.field, root_coords(bf), ups[k], kPrec),
                  std::log(2.0));
    }
    CHECK(ups[1].layers.groups[0][0] != ups[2].layers.groups[0][0]);
}

TEST_CASE("exact tie versus non-usable finite place") {
    // charpoly (x-6)(x+6)(x-2): at p=2 all three valuations are 1.
    LRS u({-72, 36, 2}, {1, 1, 1});
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 3);
    int i6 = index_of_rational(bf, 6), im6 = index_of_rational(bf, -6),
        i2 = index_of_rational(bf, 2);

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 2);  // arch + p=3; p=2 is a triple tie, dropped

    CHECK(ups[0].place.arch);
    REQUIRE(ups[0].layers.groups.size() == 2);
    CHECK(as_set(ups[0].layers.groups[0]) == std::set<int>{i6, im6});
    CHECK(ups[0].layers.groups[1] == std::vector<int>{i2});
    check_gap(place_gap(bf.field, root_coords(bf), ups[0], kPrec),
              std::log(3.0));

    CHECK(!ups[1].place.arch);
    CHECK(ups[1].place.fin.p() == 3);
    CHECK(ups[1].layers.groups[0] == std::vector<int>{i2});
    CHECK(as_set(ups[1].layers.tail()) == std::set<int>{i6, im6});
    check_gap(place_gap(bf.field, root_coords(bf), ups[1], kPrec),
              std::log(3.0));
}

TEST_CASE("near tie 1+i versus 41/29 is separated exactly everywhere") {
    // charpoly (x^2-2x+2)(x-41/29); |1+i| = 1.41421..., 41/29 = 1.41379...
    LRS u({Rat(82, 29), Rat(-2 * 41, 29) - 2, Rat(41, 29) + 2}, {1, 1, 1});
    {
        QPoly cp = u.charpoly();
        REQUIRE(cp.degree() == 3);
        REQUIRE(cp[0] == Rat(-82, 29));  // constant term -2*41/29
    }
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 3);
    int ir = index_of_rational(bf, Rat(41, 29));

    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 6);  // arch, p=2, two over 41, two over 29

    CHECK(ups[0].place.arch);
    REQUIRE(ups[0].layers.groups.size() == 2);
    CHECK(ups[0].layers.lead_count() == 2);  // the conjugate pair, barely
    CHECK(ups[0].layers.groups[1] == std::vector<int>{ir});
    check_gap(place_gap(bf.field, root_coords(bf), ups[0], kPrec),
              0.5 * std::log(1682.0 / 1681.0));

    CHECK(ups[1].place.fin.p() == 2);
    CHECK(ups[1].place.fin.e() == 2);  // ramified in Q(i)
    CHECK(ups[1].layers.groups[0] == std::vector<int>{ir});
    check_gap(place_gap(bf.field, root_coords(bf), ups[1], kPrec),
              0.5 * std::log(2.0));

    for (int k : {2, 3}) {
        CHECK(ups[k].place.fin.p() == 29);
        CHECK(ups[k].layers.groups[0] == std::vector<int>{ir});  // nu = -1
        check_gap(place_gap(bf.field, root_coords(bf), ups[k], kPrec),
                  std::log(29.0));
    }
    for (int k : {4, 5}) {
        CHECK(ups[k].place.fin.p() == 41);
        CHECK(ups[k].layers.lead_count() == 2);  // both units above 41
        CHECK(ups[k].layers.groups[1] == std::vector<int>{ir});
        check_gap(place_gap(bf.field, root_coords(bf), ups[k], kPrec),
                  std::log(41.0));
    }
}

TEST_CASE("geometric sequence: every place is trivially usable") {
    LRS u({5}, {3});
    BinetForm bf = binet_form(u);
    REQUIRE(bf.roots.size() == 1);
    auto ups = usable_places(bf);
    REQUIRE(ups.size() == 2);  // arch + p=5
    for (const auto& up : ups) {
        CHECK(up.layers.lead_count() == 1);
        CHECK(up.layers.groups.size() == 1);
    }
    CHECK(!ups[1].place.arch);
    CHECK(ups[1].place.fin.p() == 5);
}

TEST_CASE("usable place enumeration is deterministic") {
    LRS u({8, -6, 3}, {0, 0, 1});
    BinetForm bf = binet_form(u);
    auto a = usable_places(bf), b = usable_places(bf);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].place.str() == b[i].place.str());
        CHECK(a[i].layers.groups == b[i].layers.groups);
    }
}
