#include "skewfact/group.hpp"

#include "skewfact/errors.hpp"
#include "skewfact/perm.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

using namespace skewfact;

namespace {
Perm P(const std::string& s, uint32_t deg = 0) { return parse_cycles(s, deg); }

GroupHandle symmetric(uint32_t n) {
    std::vector<std::vector<uint32_t>> big;
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    big.push_back(cyc);
    return GroupHandle({from_cycles(n, {{0, 1}}), from_cycles(n, big)}, "S" + std::to_string(n));
}

Perm random_perm(RandomSource& rng, uint32_t deg) {
    std::vector<uint16_t> img(deg);
    std::iota(img.begin(), img.end(), 0);
    for (uint32_t i = deg; i > 1; --i) {
        uint32_t j = static_cast<uint32_t>(rng.below(i));
        std::swap(img[i - 1], img[j]);
    }
    return Perm(std::move(img));
}
} // namespace

TEST_CASE("chain orders of classic groups") {
    GroupHandle a5({P("(1 2 3)", 5), P("(3 4 5)")}, "A5");
    CHECK(a5.order() == BigUint(60));

    CHECK(symmetric(4).order() == BigUint(24));
    CHECK(symmetric(8).order() == BigUint(40320));

    GroupHandle c2({P("(1 2)")}, "C2");
    CHECK(c2.order() == BigUint(2));

    GroupHandle triv = GroupHandle::trivial(5);
    CHECK(triv.order() == BigUint(1));
    CHECK(triv.chain().levels().empty());
}

TEST_CASE("arbitrary precision order path") {
    // A13 = <(1 2 3), (3 4 ... 13)>; 13!/2 = 3113510400 needs >32 bits.
    std::vector<uint32_t> tail(11);
    std::iota(tail.begin(), tail.end(), 2);
    GroupHandle a13({P("(1 2 3)", 13), from_cycles(13, {tail})}, "A13");
    CHECK(a13.order().to_string() == "3113510400");
}

TEST_CASE("membership by sifting agrees with brute force") {
    GroupHandle a4({P("(1 2 3)", 4), P("(2 3 4)")}, "A4");
    CHECK_FALSE(a4.contains(P("(1 2)", 4)));
    CHECK(a4.contains(P("(1 2)(3 4)")));

    auto els = enumerate_elements(a4);
    CHECK(els.size() == 12);
    std::unordered_set<Perm, PermHash> set(els.begin(), els.end());
    RandomSource rng(99);
    for (int t = 0; t < 100; ++t) {
        Perm g = random_perm(rng, 4);
        CHECK(a4.contains(g) == (set.count(g) > 0));
    }
}

TEST_CASE("base hint is respected") {
    GroupHandle s4 = symmetric(4);
    StabilizerChain chain(s4.generators(), 4, {2});
    CHECK(chain.levels().front().base == 2);
    CHECK(chain.order() == BigUint(24));

    GroupHandle stab = point_stabilizer(s4, 3);
    CHECK(stab.order() == BigUint(6));
    for (const auto& g : stab.generators()) CHECK(g.apply(3) == 3);
}

TEST_CASE("enumeration threshold") {
    Limits lim;
    lim.enum_limit = 20;
    GroupHandle s4 = symmetric(4);
    CHECK_THROWS_AS(enumerate_elements(s4, lim), over_threshold);
}

TEST_CASE("enumeration is deterministic and exact") {
    GroupHandle s4 = symmetric(4);
    auto a = enumerate_elements(s4);
    auto b = enumerate_elements(s4);
    CHECK(a.size() == 24);
    CHECK(a == b);
    CHECK(a.front().is_identity());
}

TEST_CASE("conjugation orbits") {
    GroupHandle s4 = symmetric(4);
    auto orb = conjugation_orbit(s4, P("(1 2)", 4));
    CHECK(orb.size() == 6);

    // Orbit sizes divide the group order.
    for (const auto& x : enumerate_elements(s4)) {
        auto o = conjugation_orbit(s4, x);
        CHECK(24 % o.size() == 0);
    }
}

TEST_CASE("exact classes of S4") {
    GroupHandle s4 = symmetric(4);
    auto classes = conjugacy_classes_exact(s4);
    CHECK(classes.size() == 5);
    uint64_t total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == 24);
}

TEST_CASE("random elements are members and streams are reproducible") {
    GroupHandle a5({P("(1 2 3)", 5), P("(3 4 5)")}, "A5");
    RandomSource r1(42), r2(42);
    for (int t = 0; t < 50; ++t) {
        Perm g = random_element(a5, r1);
        CHECK(a5.contains(g));
        CHECK(random_element(a5, r2) == g);
    }
}

TEST_CASE("A5 order spectrum from sampling matches enumeration") {
    GroupHandle a5({P("(1 2 3)", 5), P("(3 4 5)")}, "A5");
    std::set<uint64_t> enumerated;
    for (const auto& g : enumerate_elements(a5)) enumerated.insert(perm_order(g));
    CHECK(enumerated == std::set<uint64_t>{1, 2, 3, 5});

    RandomSource rng(1);
    std::set<uint64_t> sampled;
    for (int t = 0; t < 10000; ++t) sampled.insert(perm_order(random_element(a5, rng)));
    CHECK(sampled == enumerated);
}

TEST_CASE("discover_classes covers A5 with a small budget") {
    GroupHandle a5({P("(1 2 3)", 5), P("(3 4 5)")}, "A5");
    RandomSource rng(5);
    auto disc = discover_classes(a5, rng, 1000);
    CHECK(disc.complete);
    CHECK(disc.coverage == BigUint(60));
    CHECK(disc.classes.size() == 5);
}

TEST_CASE("subgroup predicates") {
    GroupHandle s4 = symmetric(4);
    GroupHandle klein({P("(1 2)(3 4)"), P("(1 3)(2 4)")}, "V4");
    CHECK(is_subgroup(klein, s4));
    CHECK_FALSE(is_subgroup(s4, klein));
    CHECK(equal_groups(s4, symmetric(4)));

    // Lagrange on a few random subgroups of S4.
    auto els = enumerate_elements(s4);
    RandomSource rng(17);
    for (int t = 0; t < 20; ++t) {
        Perm a = els[rng.below(els.size())], b = els[rng.below(els.size())];
        GroupHandle h({a, b});
        CHECK(is_subgroup(h, s4));
        auto dm = s4.order().divmod(h.order());
        CHECK(dm.rem.is_zero());
    }
}

TEST_CASE("chain orders match brute-force closure on random groups") {
    RandomSource rng(101);
    Limits lim;
    lim.enum_limit = 5040;
    for (int t = 0; t < 40; ++t) {
        GroupHandle g({random_perm(rng, 7), random_perm(rng, 7)});
        auto els = enumerate_elements(g, lim);
        CHECK(BigUint(els.size()) == g.order());
        // Sifting accepts exactly the enumerated elements.
        CHECK(g.contains(els[rng.below(els.size())]));
        Perm outside = random_perm(rng, 7);
        std::unordered_set<Perm, PermHash> set(els.begin(), els.end());
        CHECK(g.contains(outside) == (set.count(outside) > 0));
    }
}

TEST_CASE("seven-cycle sits inside A7") {
    std::vector<uint32_t> tail(5);
    std::iota(tail.begin(), tail.end(), 2);
    GroupHandle a7({P("(1 2 3)", 7), from_cycles(7, {tail})}, "A7");
    CHECK(a7.order() == BigUint(2520));
    GroupHandle c7({P("(1 2 3 4 5 6 7)")}, "C7");
    CHECK(is_subgroup(c7, a7));
}
