#include "skewfact/group.hpp"

#include "skewfact/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace skewfact {

uint64_t fnv1a(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// ChainLevel

void ChainLevel::rebuild_tree() {
    parent_gen.assign(degree, -2);
    parent_pt.assign(degree, 0);
    orbit.clear();
    parent_gen[base] = -1;
    orbit.push_back(base);
    for (size_t i = 0; i < orbit.size(); ++i) {
        uint32_t p = orbit[i];
        for (size_t j = 0; j < gens.size(); ++j) {
            uint32_t q = gens[j].apply(p);
            if (parent_gen[q] == -2) {
                parent_gen[q] = static_cast<int32_t>(j);
                parent_pt[q] = p;
                orbit.push_back(q);
            }
        }
    }
}

Perm ChainLevel::coset_rep(uint32_t pt) const {
    std::vector<int32_t> path;
    uint32_t cur = pt;
    while (parent_gen[cur] != -1) {
        path.push_back(parent_gen[cur]);
        cur = parent_pt[cur];
    }
    Perm rep(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        rep = compose(rep, gens[static_cast<size_t>(*it)]);
    return rep;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::vector<Perm> generators, uint32_t degree,
                                 std::vector<uint32_t> base_hint)
    : degree_(degree), base_hint_(std::move(base_hint)) {
    std::vector<Perm> gens;
    for (auto& g : generators) {
        if (g.degree() > degree_) throw input_error("generator degree exceeds group degree");
        if (!g.is_identity()) gens.push_back(pad(g, degree_));
    }
    if (!gens.empty()) {
        auto moved_by_some = [&](uint32_t p) {
            for (const auto& g : gens)
                if (g.apply(p) != p) return true;
            return false;
        };
        uint32_t pick = degree_;
        for (uint32_t h : base_hint_)
            if (h < degree_ && moved_by_some(h)) { pick = h; break; }
        if (pick == degree_)
            for (uint32_t i = 0; i < degree_; ++i)
                if (moved_by_some(i)) { pick = i; break; }
        ChainLevel lvl;
        lvl.base = pick;
        lvl.degree = degree_;
        lvl.gens = gens;
        lvl.rebuild_tree();
        levels_.push_back(std::move(lvl));
        complete_level(0);
    }
    order_ = BigUint(1);
    for (const auto& l : levels_) order_ *= static_cast<uint64_t>(l.orbit.size());
    verify();
}

void StabilizerChain::add_level_for(const Perm& residue) {
    // The residue fixes every existing base point; pick its next base from the
    // unused hint points first, then the smallest point it moves.
    uint32_t pick = degree_;
    for (uint32_t h : base_hint_) {
        bool used = false;
        for (const auto& l : levels_)
            if (l.base == h) { used = true; break; }
        if (!used && h < degree_ && residue.apply(h) != h) { pick = h; break; }
    }
    if (pick == degree_) pick = residue.smallest_moved();
    if (pick >= degree_) return;
    ChainLevel lvl;
    lvl.base = pick;
    lvl.degree = degree_;
    lvl.rebuild_tree();
    levels_.push_back(std::move(lvl));
}

std::pair<Perm, size_t> StabilizerChain::sift_from(size_t level, Perm g) const {
    for (size_t l = level; l < levels_.size(); ++l) {
        uint32_t x = g.apply(levels_[l].base);
        if (x == levels_[l].base) continue;
        if (!levels_[l].reached(x)) return {std::move(g), l};
        g = compose(g, levels_[l].coset_rep(x).inverse());
    }
    return {std::move(g), levels_.size()};
}

void StabilizerChain::complete_level(size_t k) {
    // Invariant on return: for every level l >= k, each Schreier generator
    // sifts to the identity through the levels below l. Level k's own
    // generators and orbit never change inside this call, so a single pass
    // over (orbit point, generator) suffices; deeper levels are re-completed
    // after every addition. levels_ may reallocate, so no references are
    // held across mutation.
    for (size_t oi = 0; oi < levels_[k].orbit.size(); ++oi) {
        for (size_t j = 0; j < levels_[k].gens.size(); ++j) {
            uint32_t x = levels_[k].orbit[oi];
            Perm ux = levels_[k].coset_rep(x);
            uint32_t y = levels_[k].gens[j].apply(x);
            Perm sg = compose(compose(ux, levels_[k].gens[j]),
                              levels_[k].coset_rep(y).inverse());
            if (sg.is_identity()) continue;
            auto [res, stuck] = sift_from(k + 1, std::move(sg));
            if (res.is_identity()) continue;
            if (stuck == levels_.size()) add_level_for(res);
            size_t last = std::min(stuck, levels_.size() - 1);
            for (size_t l = k + 1; l <= last; ++l) {
                levels_[l].gens.push_back(res);
                levels_[l].rebuild_tree();
            }
            for (size_t l = last; l > k; --l) complete_level(l);
        }
    }
}

Perm StabilizerChain::sift(const Perm& g) const {
    return sift_from(0, pad(g, std::max(degree_, g.degree()))).first;
}

bool StabilizerChain::contains(const Perm& g) const {
    if (g.effective_degree() > degree_) return false;
    return sift(g).is_identity();
}

std::vector<Perm> StabilizerChain::strong_generators_from(size_t level) const {
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHash> seen;
    for (size_t l = level; l < levels_.size(); ++l)
        for (const auto& g : levels_[l].gens)
            if (seen.insert(g).second) out.push_back(g);
    return out;
}

void StabilizerChain::verify() const {
    for (size_t k = 0; k < levels_.size(); ++k) {
        const auto& lvl = levels_[k];
        for (uint32_t x : lvl.orbit) {
            Perm ux = lvl.coset_rep(x);
            for (const auto& g : lvl.gens) {
                Perm sg = compose(compose(ux, g), lvl.coset_rep(g.apply(x)).inverse());
                auto [res, stuck] = sift_from(k + 1, std::move(sg));
                (void)stuck;
                if (!res.is_identity())
                    throw std::logic_error("stabilizer chain verification failed");
            }
        }
        // Strong generators at deeper levels must fix all earlier base points.
        for (size_t l = k + 1; l < levels_.size(); ++l)
            for (const auto& g : levels_[l].gens)
                if (g.apply(lvl.base) != lvl.base)
                    throw std::logic_error("strong generator moves an earlier base point");
    }
}

// ---------------------------------------------------------------------------
// GroupHandle

namespace {
uint32_t max_degree(const std::vector<Perm>& gens) {
    uint32_t d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}
} // namespace

GroupHandle::GroupHandle(std::vector<Perm> generators, std::string label)
    : degree_(max_degree(generators)), gens_(std::move(generators)), label_(std::move(label)) {
    if (gens_.empty()) throw input_error("group requires at least one generator");
    for (auto& g : gens_) g = pad(g, degree_);
}

GroupHandle::GroupHandle(std::vector<Perm> generators, std::string label,
                         std::shared_ptr<const StabilizerChain> chain)
    : GroupHandle(std::move(generators), std::move(label)) {
    degree_ = std::max(degree_, chain->degree());
    chain_ = std::move(chain);
}

const StabilizerChain& GroupHandle::chain() const {
    if (!chain_) chain_ = std::make_shared<const StabilizerChain>(gens_, degree_);
    return *chain_;
}

bool GroupHandle::contains(const Perm& g) const {
    return chain().contains(g);
}

GroupHandle GroupHandle::trivial(uint32_t degree, std::string label) {
    return GroupHandle({Perm(degree)}, std::move(label));
}

bool is_subgroup(const GroupHandle& h, const GroupHandle& g) {
    for (const auto& x : h.generators())
        if (!g.contains(x)) return false;
    return true;
}

bool equal_groups(const GroupHandle& a, const GroupHandle& b) {
    return a.order() == b.order() && is_subgroup(a, b) && is_subgroup(b, a);
}

// ---------------------------------------------------------------------------
// RandomSource / product replacement

RandomSource::RandomSource(uint64_t seed) : seed_(seed), state_(seed) {}

uint64_t RandomSource::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t RandomSource::below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

void RandomSource::bind(const GroupHandle& g) {
    uint64_t h = g.degree();
    for (const auto& p : g.generators()) h = mix64(h ^ p.hash());
    if (h == bound_group_ && !slots_.empty()) return;
    bound_group_ = h;
    constexpr size_t kSlots = 10;
    slots_.clear();
    for (size_t i = 0; i < kSlots; ++i)
        slots_.push_back(g.generators()[i % g.generators().size()]);
    acc_ = Perm(g.degree());
    for (int burn = 0; burn < 60; ++burn) (void)element(g);
}

Perm RandomSource::element(const GroupHandle& g) {
    if (slots_.empty() || bound_group_ == 0) bind(g);
    uint64_t check = g.degree();
    for (const auto& p : g.generators()) check = mix64(check ^ p.hash());
    if (check != bound_group_) { slots_.clear(); bind(g); }

    size_t i = static_cast<size_t>(below(slots_.size()));
    size_t j = static_cast<size_t>(below(slots_.size() - 1));
    if (j >= i) ++j;
    uint64_t mode = below(4);
    const Perm& other = slots_[j];
    Perm rhs = (mode & 2) ? other.inverse() : other;
    slots_[i] = (mode & 1) ? compose(slots_[i], rhs) : compose(rhs, slots_[i]);
    acc_ = compose(acc_, slots_[i]);
    return acc_;
}

Perm random_element(const GroupHandle& g, RandomSource& rng) {
    return rng.element(g);
}

// ---------------------------------------------------------------------------
// Enumeration and conjugation orbits
//
// BFS sweeps over whole groups and big conjugacy classes are the hot path of
// the library. FlatPermSet keeps all image arrays in one arena behind an
// open-addressing index, hashing exactly like Perm::hash (trailing fixed
// points ignored), so deduplication stays exact without per-element nodes.

namespace {

class FlatPermSet {
public:
    FlatPermSet(uint32_t degree, size_t expect) : deg_(degree) {
        size_t cap = 64;
        while (cap < expect * 2) cap <<= 1;
        table_.assign(cap, kNone);
        mask_ = cap - 1;
    }

    size_t size() const { return count_; }
    const uint16_t* row(size_t i) const { return arena_.data() + i * deg_; }

    uint64_t hash_row(const uint16_t* img) const {
        uint32_t n = deg_;
        while (n > 0 && img[n - 1] == n - 1) --n;
        uint64_t h = 1469598103934665603ULL;
        for (uint32_t i = 0; i < n; ++i) {
            h ^= img[i];
            h *= 1099511628211ULL;
        }
        return h;
    }

    // Returns (index, inserted).
    std::pair<size_t, bool> insert(const uint16_t* img) {
        if ((count_ + 1) * 2 > table_.size()) grow();
        size_t pos = hash_row(img) & mask_;
        while (table_[pos] != kNone) {
            if (std::equal(img, img + deg_, row(table_[pos])))
                return {table_[pos], false};
            pos = (pos + 1) & mask_;
        }
        table_[pos] = count_;
        arena_.insert(arena_.end(), img, img + deg_);
        return {count_++, true};
    }

    size_t find(const uint16_t* img) const {
        size_t pos = hash_row(img) & mask_;
        while (table_[pos] != kNone) {
            if (std::equal(img, img + deg_, row(table_[pos]))) return table_[pos];
            pos = (pos + 1) & mask_;
        }
        return kNone;
    }

    Perm make_perm(size_t i) const {
        return Perm(std::vector<uint16_t>(row(i), row(i) + deg_));
    }

    static constexpr size_t kNone = ~size_t{0};

private:
    uint32_t deg_;
    size_t count_ = 0;
    size_t mask_;
    std::vector<uint16_t> arena_;
    std::vector<size_t> table_;

    void grow() {
        std::vector<size_t> bigger((mask_ + 1) * 2, kNone);
        size_t nmask = bigger.size() - 1;
        for (size_t i = 0; i < count_; ++i) {
            size_t pos = hash_row(row(i)) & nmask;
            while (bigger[pos] != kNone) pos = (pos + 1) & nmask;
            bigger[pos] = i;
        }
        table_ = std::move(bigger);
        mask_ = nmask;
    }
};

// Closure of `seed` under img[p] -> gen(row[p]) (right multiplication) or
// row-conjugation, without allocating per element.
FlatPermSet closure_right_multiBFS(const std::vector<Perm>& gens, uint32_t deg,
                                   const Perm& seed, uint64_t limit,
                                   const char* what) {
    FlatPermSet set(deg, 1024);
    std::vector<uint16_t> scratch(deg);
    for (uint32_t i = 0; i < deg; ++i) scratch[i] = static_cast<uint16_t>(seed.apply(i));
    set.insert(scratch.data());
    for (size_t i = 0; i < set.size(); ++i) {
        for (const auto& gen : gens) {
            const uint16_t* cur = set.row(i);
            for (uint32_t p = 0; p < deg; ++p)
                scratch[p] = static_cast<uint16_t>(gen.apply(cur[p]));
            auto [idx, inserted] = set.insert(scratch.data());
            (void)idx;
            if (inserted && set.size() > limit)
                throw over_threshold(std::string(what) + " exceeds limit " +
                                     std::to_string(limit));
        }
    }
    return set;
}

FlatPermSet closure_conjugation_bfs(const std::vector<Perm>& gens, uint32_t deg,
                                    const Perm& seed, uint64_t limit) {
    FlatPermSet set(deg, 1024);
    std::vector<uint16_t> scratch(deg);
    for (uint32_t i = 0; i < deg; ++i) scratch[i] = static_cast<uint16_t>(seed.apply(i));
    set.insert(scratch.data());
    for (size_t i = 0; i < set.size(); ++i) {
        for (const auto& gen : gens) {
            const uint16_t* cur = set.row(i);
            // (h^-1 g h)(h(p)) = h(g(p))
            for (uint32_t p = 0; p < deg; ++p)
                scratch[gen.apply(p)] = static_cast<uint16_t>(gen.apply(cur[p]));
            auto [idx, inserted] = set.insert(scratch.data());
            (void)idx;
            if (inserted && set.size() > limit)
                throw over_threshold("conjugation orbit exceeds limit " +
                                     std::to_string(limit));
        }
    }
    return set;
}

} // namespace

std::vector<Perm> enumerate_elements(const GroupHandle& g, const Limits& lim) {
    if (g.order() > BigUint(lim.enum_limit))
        throw over_threshold("group order " + g.order().to_string() +
                             " exceeds enumeration limit " + std::to_string(lim.enum_limit));
    FlatPermSet set = closure_right_multiBFS(g.generators(), g.degree(), Perm(g.degree()),
                                             lim.enum_limit, "enumeration");
    std::vector<Perm> out;
    out.reserve(set.size());
    for (size_t i = 0; i < set.size(); ++i) out.push_back(set.make_perm(i));
    return out;
}

std::vector<Perm> conjugation_orbit(const GroupHandle& g, const Perm& x,
                                    const Limits& lim) {
    FlatPermSet set = closure_conjugation_bfs(g.generators(), g.degree(),
                                              pad(x, g.degree()), lim.orbit_limit);
    std::vector<Perm> out;
    out.reserve(set.size());
    for (size_t i = 0; i < set.size(); ++i) out.push_back(set.make_perm(i));
    return out;
}

ClassScan conjugation_class_scan(const GroupHandle& g, const Perm& x,
                                 bool want_hashes, const Limits& lim) {
    FlatPermSet set = closure_conjugation_bfs(g.generators(), g.degree(),
                                              pad(x, g.degree()), lim.orbit_limit);
    ClassScan out;
    out.size = set.size();
    if (want_hashes) {
        out.element_hashes.reserve(set.size());
        for (size_t i = 0; i < set.size(); ++i)
            out.element_hashes.push_back(set.hash_row(set.row(i)));
        std::sort(out.element_hashes.begin(), out.element_hashes.end());
    }
    return out;
}

std::vector<ConjClass> conjugacy_classes_exact(const GroupHandle& g, const Limits& lim) {
    if (g.order() > BigUint(lim.enum_limit))
        throw over_threshold("group order " + g.order().to_string() +
                             " exceeds enumeration limit " + std::to_string(lim.enum_limit));
    FlatPermSet all = closure_right_multiBFS(g.generators(), g.degree(), Perm(g.degree()),
                                             lim.enum_limit, "enumeration");
    const uint32_t deg = g.degree();
    std::vector<bool> done(all.size(), false);
    std::vector<uint16_t> scratch(deg);
    std::vector<ConjClass> classes;
    std::vector<size_t> stack;
    for (size_t i = 0; i < all.size(); ++i) {
        if (done[i]) continue;
        done[i] = true;
        stack.assign(1, i);
        uint64_t count = 0;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            ++count;
            for (const auto& gen : g.generators()) {
                const uint16_t* img = all.row(cur);
                for (uint32_t p = 0; p < deg; ++p)
                    scratch[gen.apply(p)] = static_cast<uint16_t>(gen.apply(img[p]));
                size_t idx = all.find(scratch.data());
                if (idx == FlatPermSet::kNone)
                    throw std::logic_error("conjugate escaped the enumerated set");
                if (!done[idx]) {
                    done[idx] = true;
                    stack.push_back(idx);
                }
            }
        }
        classes.push_back({all.make_perm(i), count});
    }
    return classes;
}

ClassDiscovery discover_classes(const GroupHandle& g, RandomSource& rng,
                                size_t budget, const Limits& lim) {
    ClassDiscovery disc;
    // Sorted element-hash fingerprints per class, for O(log n) identification.
    std::vector<std::vector<uint64_t>> prints;

    auto known = [&](const Perm& x) {
        uint64_t h = x.hash();
        for (const auto& fp : prints)
            if (std::binary_search(fp.begin(), fp.end(), h)) return true;
        return false;
    };
    auto absorb = [&](const Perm& x) {
        if (known(x)) return;
        ConjClass cls;
        cls.rep = x;
        std::vector<uint64_t> fp;
        try {
            auto scan = conjugation_class_scan(g, x, /*want_hashes=*/true, lim);
            cls.size = scan.size;
            fp = std::move(scan.element_hashes);
        } catch (const over_threshold&) {
            cls.size = 0;                   // size unknown; coverage stays short
            fp.push_back(x.hash());
        }
        prints.push_back(std::move(fp));
        disc.classes.push_back(std::move(cls));
    };

    auto any_unknown = [&] {
        for (const auto& c : disc.classes)
            if (c.size == 0 && !c.rep.is_identity()) return true;
        return false;
    };

    absorb(Perm(g.degree()));
    for (size_t b = 0; b < budget && !any_unknown(); ++b) {
        Perm x = rng.element(g);
        uint64_t o = perm_order(x);
        Perm p = x;
        for (uint64_t k = 1; k < o; ++k) {
            absorb(p);
            p = compose(p, x);
            // One unknown-size class already rules out full coverage; stop
            // paying for further over-threshold expansions.
            if (any_unknown()) break;
        }
        if (o == 1) absorb(x);
        disc.coverage = BigUint(0);
        for (const auto& c : disc.classes) disc.coverage += BigUint(c.size);
        if (!any_unknown() && disc.coverage == g.order()) {
            disc.complete = true;
            return disc;
        }
    }
    disc.coverage = BigUint(0);
    for (const auto& c : disc.classes) disc.coverage += BigUint(c.size);
    disc.complete = !any_unknown() && (disc.coverage == g.order());
    return disc;
}

std::vector<Perm> shrink_generating_set(const std::vector<Perm>& gens,
                                        const BigUint& target_order, uint32_t degree) {
    std::vector<Perm> chosen;
    std::unique_ptr<StabilizerChain> chain;
    for (const auto& g : gens) {
        if (g.is_identity()) continue;
        if (chain && chain->contains(g)) continue;
        chosen.push_back(g);
        chain = std::make_unique<StabilizerChain>(chosen, degree);
        if (chain->order() == target_order) return chosen;
    }
    throw std::logic_error("generator shrink did not reach the target order");
}

GroupHandle point_stabilizer(const GroupHandle& g, uint32_t pt) {
    if (pt >= g.degree()) throw input_error("stabilizer point out of range");
    bool moved = false;
    for (const auto& gen : g.generators())
        if (gen.apply(pt) != pt) { moved = true; break; }
    if (!moved) return g;

    auto chain = std::make_shared<const StabilizerChain>(g.generators(), g.degree(),
                                                         std::vector<uint32_t>{pt});
    if (chain->levels().empty() || chain->levels().front().base != pt)
        throw std::logic_error("stabilizer chain ignored its base hint");
    auto stab_gens = chain->strong_generators_from(1);
    std::string label = g.label().empty() ? "stab" : g.label() + "_stab" + std::to_string(pt + 1);
    if (stab_gens.empty()) return GroupHandle::trivial(g.degree(), label);
    auto target = g.order().divmod(BigUint(chain->levels().front().orbit.size())).quot;
    return GroupHandle(shrink_generating_set(stab_gens, target, g.degree()), label);
}

} // namespace skewfact
