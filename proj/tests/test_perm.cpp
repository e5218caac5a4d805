#include "skewfact/perm.hpp"

#include "skewfact/errors.hpp"
#include "skewfact/group.hpp"

#include <doctest.h>

#include <numeric>

using namespace skewfact;

namespace {
Perm P(const std::string& s, uint32_t deg = 0) { return parse_cycles(s, deg); }

// Independent pointwise oracle for conjugation.
Perm conj_oracle(const Perm& g, const Perm& h) {
    uint32_t n = std::max(g.degree(), h.degree());
    std::vector<uint16_t> img(n);
    Perm hi = h.inverse();
    for (uint32_t x = 0; x < n; ++x)
        img[x] = static_cast<uint16_t>(h.apply(g.apply(hi.apply(x))));
    return Perm(std::move(img));
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

TEST_CASE("composition applies the left factor first") {
    CHECK(compose(P("(1 2 3)"), P("(1 2)")) == P("(2 3)"));
    Perm g = P("(1 5 2)(3 4)");
    CHECK(compose(g, Perm(5)) == g);
    CHECK(compose(P("(1 2)"), P("(1 2)")).is_identity());
}

TEST_CASE("inverse and power") {
    CHECK(P("(1 2 3)").inverse() == P("(1 3 2)"));
    CHECK(power(P("(1 2 3 4)"), 2) == P("(1 3)(2 4)"));
    CHECK(power(P("(1 2 3 4)"), 0).is_identity());
    CHECK(power(P("(1 2 3)"), -1) == P("(1 3 2)"));
    Perm g = P("(1 4 2 6)(3 5)");
    CHECK(compose(g, g.inverse()).is_identity());
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(perm_order(P("(1 2 3)(4 5)")) == 6);
    CHECK(perm_order(Perm(7)) == 1);
    CHECK(perm_order(P("(1 2 3 4 5 6 7 8)(9 10)")) == 8);
}

TEST_CASE("parity") {
    CHECK(parity(P("(1 2 3 4)")) == Parity::odd);
    CHECK(parity(P("(1 9)(2 8)(3 7)(4 6)")) == Parity::even);
    CHECK(parity(Perm(3)) == Parity::even);
}

TEST_CASE("conjugation matches the pointwise oracle") {
    Perm g = P("(1 2 3)"), h = P("(1 2)");
    CHECK(conjugate(g, h) == conj_oracle(g, h));
    CHECK(conjugate(g, h) == compose(compose(h.inverse(), g), h));
    RandomSource rng(7);
    for (int t = 0; t < 50; ++t) {
        Perm a = random_perm(rng, 9), b = random_perm(rng, 9);
        CHECK(conjugate(a, b) == conj_oracle(a, b));
    }
}

TEST_CASE("cycle string round trip") {
    CHECK(to_cycle_string(P("(1 2 3)(4 5)")) == "(1 2 3)(4 5)");
    CHECK(to_cycle_string(Perm(4)) == "()");
    CHECK(P("()").is_identity());
    CHECK(P("( 2 4 ) (1 3)") == P("(1 3)(2 4)"));
    RandomSource rng(11);
    for (int t = 0; t < 40; ++t) {
        Perm a = random_perm(rng, 12);
        CHECK(parse_cycles(to_cycle_string(a), 12) == a);
    }
}

TEST_CASE("bad cycle input is rejected") {
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), input_error);
    CHECK_THROWS_AS(parse_cycles("(0 1)"), input_error);
    CHECK_THROWS_AS(parse_cycles("1 2 3"), input_error);
    CHECK_THROWS_AS(Perm(std::vector<uint16_t>{0, 0, 1}), input_error);
}

TEST_CASE("padding equality and hashing") {
    Perm a = P("(1 2)", 2);
    Perm b = P("(1 2)", 6);
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(pad(a, 6).degree() == 6);
    CHECK(a != P("(1 3)"));
}

TEST_CASE("group axioms on random permutations") {
    RandomSource rng(3);
    for (int t = 0; t < 60; ++t) {
        Perm g = random_perm(rng, 10), h = random_perm(rng, 10), k = random_perm(rng, 10);
        CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
        CHECK(compose(g, g.inverse()).is_identity());
        uint64_t og = perm_order(g);
        uint64_t e = 1 + rng.below(12);
        CHECK(perm_order(power(g, static_cast<int64_t>(e))) == og / std::gcd(og, e));
        // Parity is a homomorphism.
        int pg = parity(g) == Parity::odd, ph = parity(h) == Parity::odd;
        CHECK((parity(compose(g, h)) == Parity::odd) == ((pg + ph) % 2 == 1));
        // product_order agrees with composing then measuring.
        CHECK(product_order(g, h) == perm_order(compose(g, h)));
    }
}

TEST_CASE("from_cycles inverts cycles") {
    RandomSource rng(23);
    for (int t = 0; t < 40; ++t) {
        Perm a = random_perm(rng, 11);
        CHECK(from_cycles(11, cycles(a)) == a);
    }
}
