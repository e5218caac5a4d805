#include "skewfact/kernels.hpp"

#include <algorithm>

namespace skewfact::kernels {

namespace {
constexpr size_t kNone = ~size_t{0};
}

std::optional<size_t> find_order_serial(std::span<const Perm> elements, uint64_t n) {
    for (size_t i = 0; i < elements.size(); ++i)
        if (perm_order(elements[i]) == n) return i;
    return std::nullopt;
}

std::optional<size_t> find_order(std::span<const Perm> elements, uint64_t n) {
    size_t best = kNone;
    const int64_t count = static_cast<int64_t>(elements.size());
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int64_t i = 0; i < count; ++i) {
        if (static_cast<size_t>(i) < best && perm_order(elements[static_cast<size_t>(i)]) == n)
            best = static_cast<size_t>(i);
    }
    if (best == kNone) return std::nullopt;
    return best;
}

std::vector<uint32_t> involution_indices_serial(std::span<const Perm> elements) {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (is_involution(elements[i])) out.push_back(static_cast<uint32_t>(i));
    return out;
}

std::vector<uint32_t> involution_indices(std::span<const Perm> elements) {
    std::vector<uint8_t> flag(elements.size(), 0);
    const int64_t count = static_cast<int64_t>(elements.size());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < count; ++i) {
        if (is_involution(elements[static_cast<size_t>(i)])) flag[static_cast<size_t>(i)] = 1;
    }
    std::vector<uint32_t> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (flag[i]) out.push_back(static_cast<uint32_t>(i));
    return out;
}

std::optional<size_t> pair_product_order_serial(const Perm& b,
                                                std::span<const Perm> candidates,
                                                uint64_t n) {
    for (size_t i = 0; i < candidates.size(); ++i)
        if (product_order(b, candidates[i]) == n) return i;
    return std::nullopt;
}

std::optional<size_t> pair_product_order(const Perm& b,
                                         std::span<const Perm> candidates,
                                         uint64_t n) {
    size_t best = kNone;
    const int64_t count = static_cast<int64_t>(candidates.size());
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int64_t i = 0; i < count; ++i) {
        if (static_cast<size_t>(i) < best &&
            product_order(b, candidates[static_cast<size_t>(i)]) == n)
            best = static_cast<size_t>(i);
    }
    if (best == kNone) return std::nullopt;
    return best;
}

std::map<uint64_t, uint64_t> order_histogram_serial(std::span<const Perm> elements) {
    std::map<uint64_t, uint64_t> hist;
    for (const auto& p : elements) ++hist[perm_order(p)];
    return hist;
}

std::map<uint64_t, uint64_t> order_histogram(std::span<const Perm> elements) {
    std::map<uint64_t, uint64_t> hist;
    const int64_t count = static_cast<int64_t>(elements.size());
#pragma omp parallel
    {
        std::map<uint64_t, uint64_t> local;
#pragma omp for schedule(static) nowait
        for (int64_t i = 0; i < count; ++i) ++local[perm_order(elements[static_cast<size_t>(i)])];
#pragma omp critical(skewfact_hist_merge)
        for (const auto& [k, v] : local) hist[k] += v;
    }
    return hist;
}

std::vector<uint32_t> member_indices_serial(std::span<const Perm> elements,
                                            const StabilizerChain& chain) {
    std::vector<uint32_t> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (chain.contains(elements[i])) out.push_back(static_cast<uint32_t>(i));
    return out;
}

std::vector<uint32_t> member_indices(std::span<const Perm> elements,
                                     const StabilizerChain& chain) {
    std::vector<uint8_t> flag(elements.size(), 0);
    const int64_t count = static_cast<int64_t>(elements.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t i = 0; i < count; ++i)
        if (chain.contains(elements[static_cast<size_t>(i)])) flag[static_cast<size_t>(i)] = 1;
    std::vector<uint32_t> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (flag[i]) out.push_back(static_cast<uint32_t>(i));
    return out;
}

} // namespace skewfact::kernels
