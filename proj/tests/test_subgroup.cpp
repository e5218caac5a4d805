#include "skewfact/subgroup.hpp"

#include "skewfact/constructors.hpp"
#include "skewfact/errors.hpp"

#include <doctest.h>

#include <unordered_set>

using namespace skewfact;

namespace {
Perm P(const std::string& s, uint32_t deg = 0) { return parse_cycles(s, deg); }

// Brute-force oracles over fully enumerated groups.
GroupHandle oracle_normalizer(const GroupHandle& x, const Perm& a) {
    uint64_t n = perm_order(a);
    std::unordered_set<Perm, PermHash> cyc;
    Perm p(x.degree());
    for (uint64_t k = 0; k < n; ++k) {
        cyc.insert(p);
        p = compose(p, pad(a, x.degree()));
    }
    std::vector<Perm> members;
    for (const auto& t : enumerate_elements(x)) {
        bool normalizes = true;
        for (const auto& c : cyc)
            if (!cyc.count(conjugate(c, t))) { normalizes = false; break; }
        if (normalizes) members.push_back(t);
    }
    return GroupHandle(members, "oracle_N");
}

GroupHandle oracle_centralizer(const GroupHandle& x, const Perm& g) {
    std::vector<Perm> members;
    Perm gp = pad(g, x.degree());
    for (const auto& t : enumerate_elements(x))
        if (compose(t, gp) == compose(gp, t)) members.push_back(t);
    return GroupHandle(members, "oracle_C");
}
} // namespace

TEST_CASE("core of the dihedral subgroup of S4 is the Klein group") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle h({P("(1 2 3 4)"), P("(1 3)")}, "D8");
    REQUIRE(h.order() == BigUint(8));
    auto res = core_small(s4, h);
    CHECK(res.core.order() == BigUint(4));
    CHECK(res.core.contains(P("(1 2)(3 4)")));
    CHECK(res.core.contains(P("(1 3)(2 4)")));
    CHECK(res.core.contains(P("(1 4)(2 3)")));
    CHECK(is_normal(s4, res.core));
    // Explicit agreement with the independent traversal oracle.
    CHECK(equal_groups(res.core, brute_force_core(s4, h)));
}

TEST_CASE("cores in simple groups are trivial") {
    GroupHandle a5 = make_group("A:5");
    GroupHandle d10({P("(1 2 3 4 5)"), P("(2 5)(3 4)")}, "D10");
    REQUIRE(d10.order() == BigUint(10));
    auto res = core_small(a5, d10);
    CHECK(res.core.order() == BigUint(1));
}

TEST_CASE("core threshold") {
    GroupHandle m12 = make_group("M12");
    Limits lim;
    lim.subgroup_limit = 100;
    CHECK_THROWS_AS(core_small(m12, m12, lim), over_threshold);
}

TEST_CASE("cores are invariant under random conjugation") {
    GroupHandle x = make_group("S:4");
    GroupHandle h({P("(1 2 3 4)"), P("(1 3)")}, "D8");
    GroupHandle core = core_small(x, h).core;
    RandomSource rng(55);
    for (int t = 0; t < 50; ++t) {
        Perm r = random_element(x, rng);
        for (const auto& c : core.generators())
            CHECK(core.contains(conjugate(c, r)));
    }
}

TEST_CASE("intersections") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle a4 = make_group("A:4");
    GroupHandle inter = intersection_small(s4, a4);
    CHECK(equal_groups(inter, a4));

    GroupHandle g = make_group("A:6");
    CHECK(intersection_small(g, g).order() == g.order());

    GroupHandle c5({P("(1 2 3 4 5)")}, "C5");
    GroupHandle c4({P("(1 2 3 4)")}, "C4");
    CHECK(intersection_small(c5, c4).order() == BigUint(1));
}

TEST_CASE("normal closures") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle klein = normal_closure(s4, {P("(1 2)(3 4)")});
    CHECK(klein.order() == BigUint(4));

    GroupHandle a5 = make_group("A:5");
    CHECK(normal_closure(a5, {P("(1 2 3)", 5)}).order() == BigUint(60));

    // The closure of an order-11 element of PGL(2,11) is PSL(2,11).
    GroupHandle pgl = make_group("PGL2:11");
    Perm elevens;
    for (const auto& g : enumerate_elements(pgl))
        if (perm_order(g) == 11) { elevens = g; break; }
    GroupHandle psl_closure = normal_closure(pgl, {elevens});
    CHECK(psl_closure.order() == BigUint(660));
    CHECK(equal_groups(psl_closure, make_group("PSL2:11")));

    CHECK_THROWS_AS(normal_closure(make_group("A:4"), {P("(1 2)")}), input_error);
}

TEST_CASE("normalizers of cyclic subgroups match the oracle") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle n1 = normalizer_of_cyclic(s4, P("(1 2 3 4)"));
    CHECK(n1.order() == BigUint(8));
    CHECK(equal_groups(n1, oracle_normalizer(s4, P("(1 2 3 4)"))));

    GroupHandle a5 = make_group("A:5");
    GroupHandle n2 = normalizer_of_cyclic(a5, P("(1 2 3 4 5)"));
    CHECK(n2.order() == BigUint(10));
    CHECK(equal_groups(n2, oracle_normalizer(a5, P("(1 2 3 4 5)"))));

    GroupHandle pgl = make_group("PGL2:11");
    Perm a;
    for (const auto& g : pgl.generators())
        if (perm_order(g) == 11) a = g;
    GroupHandle n3 = normalizer_of_cyclic(pgl, a);
    CHECK(n3.order() == BigUint(110));
    CHECK(equal_groups(n3, oracle_normalizer(pgl, a)));
}

TEST_CASE("M23 normalizer of a Sylow 23 subgroup has order 253") {
    GroupHandle m23 = make_group("M23");
    Perm a;
    for (const auto& g : m23.generators())
        if (perm_order(g) == 23) a = g;
    REQUIRE(perm_order(a) == 23);
    GroupHandle n = normalizer_of_cyclic(m23, a);
    CHECK(n.order() == BigUint(253));
}

TEST_CASE("centralizers match the oracle") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle c = centralizer_of_element(s4, P("(1 2)(3 4)"));
    CHECK(c.order() == BigUint(8));
    CHECK(equal_groups(c, oracle_centralizer(s4, P("(1 2)(3 4)"))));

    GroupHandle a5 = make_group("A:5");
    Perm g = P("(1 2 3)", 5);
    CHECK(equal_groups(centralizer_of_element(a5, g), oracle_centralizer(a5, g)));
}

TEST_CASE("M23 involution class and centralizer") {
    GroupHandle m23 = make_group("M23");
    RandomSource rng(77);
    Perm inv;
    for (;;) {
        Perm g = random_element(m23, rng);
        uint64_t o = perm_order(g);
        if (o % 2 == 0) { inv = power(g, static_cast<int64_t>(o / 2)); break; }
    }
    auto orbit = conjugation_orbit(m23, inv);
    CHECK(orbit.size() == 3795);
    GroupHandle cent = centralizer_of_element(m23, inv);
    CHECK(BigUint(3795) * cent.order() == m23.order());
}

TEST_CASE("simplicity verdicts") {
    RandomSource rng(13);
    auto a5 = is_simple(make_group("A:5"), rng);
    CHECK(a5.verdict == Verdict3::yes);
    CHECK(a5.deterministic);

    auto s4 = is_simple(make_group("S:4"), rng);
    CHECK(s4.verdict == Verdict3::no);
    REQUIRE(s4.witness.has_value());
    CHECK(s4.witness->order() < BigUint(24));
    CHECK(is_normal(make_group("S:4"), *s4.witness));

    auto c7 = is_simple(make_group("C:7"), rng);
    CHECK(c7.verdict == Verdict3::yes);

    auto prod = is_simple(make_group("prod(A:5,C:2)"), rng);
    CHECK(prod.verdict == Verdict3::no);
    CHECK(prod.witness.has_value());

    auto gl = is_simple(make_group("GL32"), rng);
    CHECK(gl.verdict == Verdict3::yes);
}

TEST_CASE("subgroup ref verifies containment") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle a4 = make_group("A:4");
    auto ref = make_subgroup(s4, a4);
    CHECK(ref.containment_checked);
    CHECK_THROWS_AS(make_subgroup(a4, s4), input_error);
}
