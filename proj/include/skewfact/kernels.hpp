#pragma once

#include "skewfact/group.hpp"
#include "skewfact/perm.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace skewfact::kernels {

// Element-scan kernels over enumerated element arrays. Each kernel has an
// OpenMP-parallel implementation and a serial reference twin; the twins are
// compared in the test suite and timed against each other by bench_kernels.
// All results are pure functions of the input array (first hits reduce to
// the minimum index), so outputs do not depend on the thread count.

// Index of the first element of order n, if any.
std::optional<size_t> find_order(std::span<const Perm> elements, uint64_t n);
std::optional<size_t> find_order_serial(std::span<const Perm> elements, uint64_t n);

// Indices of all involutions, ascending.
std::vector<uint32_t> involution_indices(std::span<const Perm> elements);
std::vector<uint32_t> involution_indices_serial(std::span<const Perm> elements);

// Smallest index c with order(b * candidates[c]) == n.
std::optional<size_t> pair_product_order(const Perm& b,
                                         std::span<const Perm> candidates,
                                         uint64_t n);
std::optional<size_t> pair_product_order_serial(const Perm& b,
                                                std::span<const Perm> candidates,
                                                uint64_t n);

// Element order -> multiplicity.
std::map<uint64_t, uint64_t> order_histogram(std::span<const Perm> elements);
std::map<uint64_t, uint64_t> order_histogram_serial(std::span<const Perm> elements);

// Indices of elements contained in the given chain's group, ascending.
std::vector<uint32_t> member_indices(std::span<const Perm> elements,
                                     const StabilizerChain& chain);
std::vector<uint32_t> member_indices_serial(std::span<const Perm> elements,
                                            const StabilizerChain& chain);

} // namespace skewfact::kernels
