#include "skewfact/kernels.hpp"

#include "skewfact/group.hpp"
#include "skewfact/perm.hpp"

#include <doctest.h>

#include <numeric>

using namespace skewfact;

namespace {
GroupHandle s6() {
    std::vector<uint32_t> cyc(6);
    std::iota(cyc.begin(), cyc.end(), 0);
    return GroupHandle({from_cycles(6, {{0, 1}}), from_cycles(6, {cyc})}, "S6");
}
} // namespace

TEST_CASE("parallel kernels agree with their serial references") {
    auto els = enumerate_elements(s6());
    REQUIRE(els.size() == 720);

    for (uint64_t n : {1, 2, 3, 4, 5, 6, 7, 12}) {
        CHECK(kernels::find_order(els, n) == kernels::find_order_serial(els, n));
    }
    CHECK(kernels::involution_indices(els) == kernels::involution_indices_serial(els));
    CHECK(kernels::order_histogram(els) == kernels::order_histogram_serial(els));

    auto invs = kernels::involution_indices(els);
    std::vector<Perm> inv_els;
    for (uint32_t i : invs) inv_els.push_back(els[i]);
    for (uint64_t n : {2, 3, 4, 5, 6, 11}) {
        CHECK(kernels::pair_product_order(inv_els[0], inv_els, n) ==
              kernels::pair_product_order_serial(inv_els[0], inv_els, n));
    }

    GroupHandle a6({parse_cycles("(1 2 3)", 6), parse_cycles("(1 2)(3 4 5 6)", 6)}, "A6");
    auto par = kernels::member_indices(els, a6.chain());
    auto ser = kernels::member_indices_serial(els, a6.chain());
    CHECK(par == ser);
    CHECK(par.size() == 360);
}

TEST_CASE("kernel results are facts about the data") {
    auto els = enumerate_elements(s6());
    auto hist = kernels::order_histogram(els);
    uint64_t total = 0;
    for (const auto& [o, c] : hist) total += c;
    CHECK(total == 720);
    CHECK(hist.at(1) == 1);
    // S6 has no element of order 12: 6 and 4+2 are the largest lcm patterns.
    CHECK_FALSE(kernels::find_order(els, 12).has_value());
    CHECK(kernels::find_order(els, 6).has_value());

    auto idx = kernels::find_order(els, 5);
    REQUIRE(idx.has_value());
    CHECK(perm_order(els[*idx]) == 5);
    for (size_t i = 0; i < *idx; ++i) CHECK(perm_order(els[i]) != 5);
}
