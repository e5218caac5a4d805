#pragma once

#include "skewfact/group.hpp"
#include "skewfact/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewfact {

std::vector<std::vector<uint32_t>> orbits(const std::vector<Perm>& gens, uint32_t degree);
std::vector<std::vector<uint32_t>> orbits(const GroupHandle& g);

bool is_transitive(const GroupHandle& g);
bool is_regular(const GroupHandle& g);

// Transitive and the stabilizer of the first point is transitive on the rest.
bool is_2transitive(const GroupHandle& g);

struct BlockSystem {
    std::vector<std::vector<uint32_t>> blocks;   // sorted by smallest member
    bool trivial() const { return blocks.size() <= 1; }
};

// Minimal block system whose blocks merge points a and b (union-find refinement).
BlockSystem minimal_blocks(const GroupHandle& g, uint32_t a, uint32_t b);
bool is_primitive(const GroupHandle& g);

struct QuasiprimitiveResult {
    Verdict3 verdict = Verdict3::inconclusive;
    std::optional<GroupHandle> witness;          // intransitive nontrivial normal subgroup
    std::vector<uint32_t> witness_orbit_sizes;
    bool deterministic = false;
    std::string method;
};

// Every nontrivial normal subgroup transitive? Checked through normal
// closures of conjugacy class representatives; 2-transitive actions short
// circuit through the implication chain.
QuasiprimitiveResult is_quasiprimitive(const GroupHandle& g, RandomSource& rng,
                                       const Limits& lim = {});

// Right-multiplication action of X on the cosets of H. Cosets are keyed by
// canonical representatives (minimal base images under H's chain), so the
// BFS is linear in the index.
struct CosetAction {
    GroupHandle parent;
    GroupHandle sub;
    uint64_t degree = 0;                         // index |X : H|
    std::vector<Perm> gen_images;                // one per generator of X
    GroupHandle image;                           // the induced permutation group
    BigUint kernel_order;                        // |X| / |image|
    std::optional<GroupHandle> kernel;           // materialized when H is small
    std::vector<Perm> coset_reps;
};

CosetAction coset_action(const GroupHandle& x, const GroupHandle& h,
                         const Limits& lim = {});

struct ActionReport {
    uint32_t degree = 0;
    std::vector<uint32_t> orbit_sizes;
    bool transitive = false;
    bool regular = false;
    std::optional<bool> two_transitive;          // transitive actions only
    std::optional<bool> primitive;
    QuasiprimitiveResult quasiprimitive;
    std::vector<uint32_t> sample_block_sizes;    // one nontrivial system if imprimitive
};

ActionReport analyze_action(const GroupHandle& g, RandomSource& rng,
                            const Limits& lim = {});

} // namespace skewfact
