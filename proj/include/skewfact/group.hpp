#pragma once

#include "skewfact/bigint.hpp"
#include "skewfact/perm.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewfact {

// Size limits guarding exhaustive computations. All overridable from the CLI.
struct Limits {
    uint64_t enum_limit = 1ULL << 21;      // element enumeration
    uint64_t orbit_limit = 2'000'000;      // conjugation / subgroup orbits
    uint64_t subgroup_limit = 10'000;      // "small subgroup" operations
    uint64_t index_limit = 100'000;        // coset action degree
};

// One level of a stabilizer chain: a base point, the strong generators that
// fix all earlier base points, and a Schreier tree for the base orbit.
struct ChainLevel {
    uint32_t base = 0;
    uint32_t degree = 0;
    std::vector<Perm> gens;
    std::vector<int32_t> parent_gen;       // -1 root, -2 unreached
    std::vector<uint32_t> parent_pt;
    std::vector<uint32_t> orbit;           // BFS discovery order

    void rebuild_tree();
    bool reached(uint32_t pt) const { return parent_gen[pt] != -2; }
    Perm coset_rep(uint32_t pt) const;     // u with base^u = pt
};

// Deterministic Schreier-Sims chain. Base points are the smallest moved
// points (optionally seeded with preferred points), every Schreier generator
// is verified to sift to the identity after construction, and the whole
// build is reproducible bit for bit for a fixed generator list.
class StabilizerChain {
public:
    StabilizerChain(std::vector<Perm> generators, uint32_t degree,
                    std::vector<uint32_t> base_hint = {});

    uint32_t degree() const { return degree_; }
    const std::vector<ChainLevel>& levels() const { return levels_; }
    const BigUint& order() const { return order_; }

    Perm sift(const Perm& g) const;        // residue; identity iff member
    bool contains(const Perm& g) const;

    // Strong generators fixing the first `level` base points.
    std::vector<Perm> strong_generators_from(size_t level) const;

private:
    uint32_t degree_;
    std::vector<uint32_t> base_hint_;
    std::vector<ChainLevel> levels_;
    BigUint order_;

    void add_level_for(const Perm& residue);
    void complete_level(size_t k);
    std::pair<Perm, size_t> sift_from(size_t level, Perm g) const;
    void verify() const;
};

// A finite permutation group given by generators, with a lazily built chain
// and cached order. Cheap to copy; the chain is shared.
class GroupHandle {
public:
    GroupHandle() : GroupHandle({Perm(0)}, "1") {}    // trivial group, degree 0
    explicit GroupHandle(std::vector<Perm> generators, std::string label = {});
    GroupHandle(std::vector<Perm> generators, std::string label,
                std::shared_ptr<const StabilizerChain> chain);

    uint32_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::string& label() const { return label_; }

    const StabilizerChain& chain() const;  // built on first use
    const BigUint& order() const { return chain().order(); }
    bool contains(const Perm& g) const;
    bool is_trivial() const { return order() == BigUint(1); }

    static GroupHandle trivial(uint32_t degree, std::string label = "1");

private:
    uint32_t degree_;
    std::vector<Perm> gens_;
    std::string label_;
    mutable std::shared_ptr<const StabilizerChain> chain_;
};

bool is_subgroup(const GroupHandle& h, const GroupHandle& g);
bool equal_groups(const GroupHandle& a, const GroupHandle& b);

// Deterministic product-replacement stream. One source drives one group;
// rebinding to a different generator set reinitialises the state.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed);
    uint64_t next_u64();
    uint64_t below(uint64_t n);            // uniform-ish in [0, n)
    uint64_t seed() const { return seed_; }

    Perm element(const GroupHandle& g);

private:
    uint64_t seed_;
    uint64_t state_;
    uint64_t bound_group_ = 0;             // hash of the bound generator set
    std::vector<Perm> slots_;
    Perm acc_;

    void bind(const GroupHandle& g);
};

Perm random_element(const GroupHandle& g, RandomSource& rng);

// Exact element set by breadth-first closure over the generators,
// in a deterministic discovery order starting from the identity.
std::vector<Perm> enumerate_elements(const GroupHandle& g, const Limits& lim = {});

// Exact conjugacy class of x under g, BFS over generator conjugation.
std::vector<Perm> conjugation_orbit(const GroupHandle& g, const Perm& x,
                                    const Limits& lim = {});

struct ConjClass {
    Perm rep;
    uint64_t size = 0;                     // 0 when the orbit overflowed the limit
};

// Full class decomposition; requires |g| within the enumeration limit.
std::vector<ConjClass> conjugacy_classes_exact(const GroupHandle& g,
                                               const Limits& lim = {});

struct ClassDiscovery {
    std::vector<ConjClass> classes;
    BigUint coverage;                      // sum of known class sizes
    bool complete = false;                 // coverage == |g|
};

// Exact size of the conjugacy class of x, plus (optionally) the sorted
// element hashes, computed with a flat arena so multi-million-element
// classes stay cheap.
struct ClassScan {
    uint64_t size = 0;
    std::vector<uint64_t> element_hashes;  // sorted when requested
};

ClassScan conjugation_class_scan(const GroupHandle& g, const Perm& x,
                                 bool want_hashes, const Limits& lim = {});

// Randomized class discovery: samples elements and their powers, expanding
// each new class exactly. Never throws on overflow; incomplete coverage is
// reported, not hidden.
ClassDiscovery discover_classes(const GroupHandle& g, RandomSource& rng,
                                size_t budget, const Limits& lim = {});

// Stabilizer of a point, extracted from a chain based at that point and
// reduced to a small generating set.
GroupHandle point_stabilizer(const GroupHandle& g, uint32_t pt);

// Greedy generating subset reaching the given order; keeps BFS sweeps over
// the group proportional to a handful of generators.
std::vector<Perm> shrink_generating_set(const std::vector<Perm>& gens,
                                        const BigUint& target_order, uint32_t degree);

uint64_t fnv1a(const void* data, size_t len);
uint64_t mix64(uint64_t x);

} // namespace skewfact
