#include "skewfact/action.hpp"

#include "skewfact/constructors.hpp"
#include "skewfact/errors.hpp"

#include <doctest.h>

#include <set>

using namespace skewfact;

namespace {
Perm P(const std::string& s, uint32_t deg = 0) { return parse_cycles(s, deg); }

// Oracle: a subset B containing 0 is a block iff every group element maps it
// to itself or clear of itself. Returns the smallest nontrivial block through
// {0, b}, by exhausting all subsets of the (small) point set.
std::vector<uint32_t> oracle_min_block(const GroupHandle& g, uint32_t b) {
    auto els = enumerate_elements(g);
    uint32_t n = g.degree();
    std::vector<uint32_t> best;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u) || !(mask & (1u << b))) continue;
        bool is_block = true;
        for (const auto& e : els) {
            uint32_t im = 0;
            for (uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) im |= 1u << e.apply(i);
            if (im != mask && (im & mask) != 0) { is_block = false; break; }
        }
        if (!is_block) continue;
        if (best.empty() || __builtin_popcount(mask) < static_cast<int>(best.size())) {
            best.clear();
            for (uint32_t i = 0; i < n; ++i)
                if (mask & (1u << i)) best.push_back(i);
        }
    }
    return best;
}
} // namespace

TEST_CASE("orbit decomposition") {
    GroupHandle g({P("(1 2 3)", 5)}, "C3@5");
    auto parts = orbits(g);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::vector<uint32_t>{0, 1, 2});
    CHECK(parts[1] == std::vector<uint32_t>{3});
    CHECK(parts[2] == std::vector<uint32_t>{4});
    CHECK_FALSE(is_transitive(g));
}

TEST_CASE("regularity") {
    CHECK(is_regular(make_group("D:12")));
    CHECK(is_regular(make_group("C:8")));
    CHECK_FALSE(is_regular(make_group("S:4")));
    CHECK_FALSE(is_regular(make_group("A:4")));
}

TEST_CASE("2-transitivity") {
    CHECK(is_2transitive(make_group("AGL32")));
    CHECK_FALSE(is_2transitive(make_group("D:12")));
    CHECK(is_2transitive(make_group("A:4")));
    CHECK(is_2transitive(make_group("S:5")));
    CHECK_FALSE(is_2transitive(make_group("C:5")));
}

TEST_CASE("blocks of the regular dihedral action") {
    GroupHandle d12 = make_group("D:12");
    auto sys = minimal_blocks(d12, 0, 6);
    REQUIRE_FALSE(sys.trivial());
    CHECK(sys.blocks.size() == 6);
    for (const auto& blk : sys.blocks) CHECK(blk.size() == 2);
    // Agreement with the exhaustive invariant-partition oracle.
    auto oracle = oracle_min_block(d12, 6);
    CHECK(sys.blocks.front() == oracle);

    GroupHandle c4 = make_group("C:4");
    auto sys2 = minimal_blocks(c4, 0, 2);
    REQUIRE(sys2.blocks.size() == 2);
    CHECK(sys2.blocks[0] == std::vector<uint32_t>{0, 2});
    CHECK(sys2.blocks[1] == std::vector<uint32_t>{1, 3});
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(make_group("A:5")));
    CHECK_FALSE(is_primitive(make_group("D:12")));
    CHECK(is_primitive(make_group("M12")));
    CHECK_FALSE(is_primitive(make_group("C:6")));
    CHECK(is_primitive(make_group("C:5")));     // prime regular is primitive
}

TEST_CASE("quasiprimitivity verdicts") {
    RandomSource rng(4);
    auto agl = is_quasiprimitive(make_group("AGL32"), rng);
    CHECK(agl.verdict == Verdict3::yes);
    CHECK(agl.deterministic);

    auto a5 = is_quasiprimitive(make_group("A:5"), rng);
    CHECK(a5.verdict == Verdict3::yes);

    // PGL(2,11) on the 22 cosets of an A5: non-quasiprimitive with the
    // PSL(2,11) image as witness, two orbits of 11.
    GroupHandle pgl = make_group("PGL2:11");
    GroupHandle a5sub = find_a5_in_psl211(make_group("PSL2:11"));
    auto act = coset_action(pgl, a5sub);
    CHECK(act.degree == 22);
    CHECK(act.kernel_order == BigUint(1));
    auto qp = is_quasiprimitive(act.image, rng);
    CHECK(qp.verdict == Verdict3::no);
    REQUIRE(qp.witness.has_value());
    CHECK(qp.witness_orbit_sizes == std::vector<uint32_t>{11, 11});
    CHECK(qp.witness->order() == BigUint(660));
}

TEST_CASE("coset actions") {
    GroupHandle m12 = make_group("M12");
    GroupHandle m11 = make_group("M11");
    auto act = coset_action(m12, GroupHandle(m11.generators(), "M11"));
    CHECK(act.degree == 12);
    CHECK(is_2transitive(act.image));
    CHECK(act.kernel_order == BigUint(1));
    REQUIRE(act.kernel.has_value());
    CHECK(act.kernel->order() == BigUint(1));

    GroupHandle s4 = make_group("S:4");
    auto self = coset_action(s4, s4);
    CHECK(self.degree == 1);
    CHECK(self.kernel_order == BigUint(24));

    // Index threshold.
    Limits lim;
    lim.index_limit = 4;
    CHECK_THROWS_AS(coset_action(m12, GroupHandle(m11.generators(), "M11"), lim),
                    index_too_large);
}

TEST_CASE("coset action on a trivial subgroup is the regular action") {
    GroupHandle s4 = make_group("S:4");
    auto act = coset_action(s4, GroupHandle::trivial(4));
    CHECK(act.degree == 24);
    CHECK(is_regular(act.image));
    CHECK(act.kernel_order == BigUint(1));
}

TEST_CASE("block seeds must be distinct points") {
    CHECK_THROWS_AS(minimal_blocks(make_group("C:6"), 2, 2), input_error);
    CHECK_THROWS_AS(minimal_blocks(make_group("C:6"), 0, 9), input_error);
}

TEST_CASE("coset action kernel equals the core") {
    GroupHandle s4 = make_group("S:4");
    GroupHandle h({P("(1 2 3 4)"), P("(1 3)")}, "D8");
    auto act = coset_action(s4, h);
    CHECK(act.degree == 3);
    CHECK(act.kernel_order == BigUint(4));
    REQUIRE(act.kernel.has_value());
    CHECK(equal_groups(*act.kernel, core_small(s4, h).core));
}

TEST_CASE("analyze_action asserts the implication chain") {
    RandomSource rng(8);
    auto rep = analyze_action(make_group("M12"), rng);
    CHECK(rep.transitive);
    REQUIRE(rep.two_transitive.has_value());
    CHECK(*rep.two_transitive);
    CHECK(*rep.primitive);
    CHECK(rep.quasiprimitive.verdict == Verdict3::yes);

    auto reg = analyze_action(make_group("D:16"), rng);
    CHECK(reg.regular);
    CHECK_FALSE(*reg.two_transitive);
    CHECK_FALSE(*reg.primitive);
    CHECK_FALSE(reg.sample_block_sizes.empty());
}

TEST_CASE("implication chain across a corpus of actions") {
    RandomSource rng(21);
    std::vector<std::string> corpus = {
        "A:4", "A:5", "A:6", "A:7", "S:4", "S:5", "S:6",
        "C:5", "C:6", "C:12", "D:8", "D:12", "D:16", "D:24",
        "PSL2:11", "PGL2:11", "A:8", "AGL32", "M11", "M12",
    };
    int checked = 0;
    for (const auto& spec : corpus) {
        GroupHandle g = make_group(spec);
        if (!is_transitive(g)) continue;
        auto rep = analyze_action(g, rng);   // throws if the chain breaks
        ++checked;
        if (rep.two_transitive.value_or(false)) CHECK(*rep.primitive);
        if (rep.primitive.value_or(false) && rep.quasiprimitive.deterministic)
            CHECK(rep.quasiprimitive.verdict == Verdict3::yes);
    }
    CHECK(checked == 20);
}
