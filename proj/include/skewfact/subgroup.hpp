#pragma once

#include "skewfact/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewfact {

// A verified parent/subgroup pair: every generator of sub sifts into parent.
struct SubgroupRef {
    GroupHandle parent;
    GroupHandle sub;
    bool containment_checked = false;
};

SubgroupRef make_subgroup(const GroupHandle& parent, const GroupHandle& sub);

enum class CoreMethod { iterated_intersection, brute_force };

struct CoreResult {
    GroupHandle core;
    uint32_t iterations = 0;
    CoreMethod method = CoreMethod::iterated_intersection;
};

// Largest normal subgroup of X inside H, for small H. Iterated conjugate
// intersection: K starts as H's element set and is cut by K^g for each
// generator until a full pass is stable; the fixed point generates the core.
// Verified normal and contained in H; cross-checked against the brute-force
// core whenever X itself is enumerable.
CoreResult core_small(const GroupHandle& x, const GroupHandle& h,
                      const Limits& lim = {});

// Independent oracle: intersect H^t over a full traversal of X's elements.
GroupHandle brute_force_core(const GroupHandle& x, const GroupHandle& h,
                             const Limits& lim = {});

// Enumerates the smaller factor and filters by membership in the other.
GroupHandle intersection_small(const GroupHandle& g, const GroupHandle& h,
                               const Limits& lim = {});

// Smallest normal subgroup of X containing the given elements.
GroupHandle normal_closure(const GroupHandle& x, const std::vector<Perm>& seed);

// N_X(<a>) by orbit-stabilizer on the conjugates of <a>, keyed by a canonical
// generator; |X| = |orbit| * |N| is asserted.
GroupHandle normalizer_of_cyclic(const GroupHandle& x, const Perm& a,
                                 const Limits& lim = {});

// C_X(g) by orbit-stabilizer on the conjugacy class of g.
GroupHandle centralizer_of_element(const GroupHandle& x, const Perm& g,
                                   const Limits& lim = {});

bool is_normal(const GroupHandle& x, const GroupHandle& h);

enum class Verdict3 { yes, no, inconclusive };

struct SimplicityResult {
    Verdict3 verdict = Verdict3::inconclusive;
    std::optional<GroupHandle> witness;    // proper nontrivial normal subgroup
    bool deterministic = false;
    std::string note;
};

// Deterministic for enumerable groups (normal closure of one representative
// per conjugacy class must be the whole group); otherwise randomized over
// discover_classes, with the verdict downgraded to inconclusive unless class
// coverage reaches 100%. orbit_work_budget caps the randomized class-size
// expansion work (0 = unlimited).
SimplicityResult is_simple(const GroupHandle& g, RandomSource& rng,
                           const Limits& lim = {}, size_t sample_budget = 64,
                           uint64_t orbit_work_budget = 0);

} // namespace skewfact
