#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewfact {

// A permutation of {0..degree-1}, stored as an image array.
// Points outside the stored degree are fixed, so permutations of different
// degrees compare and compose by implicit padding.
//
// Composition convention: (g*h)(x) = h(g(x)) -- g acts first. With the
// right action x^g = g(x) this makes x^(g*h) = (x^g)^h and puts
// conjugation in the familiar form g^h = h^-1 * g * h.
class Perm {
public:
    Perm() = default;
    explicit Perm(uint32_t degree);                       // identity
    explicit Perm(std::vector<uint16_t> images);          // validated bijection

    uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
    uint32_t apply(uint32_t x) const { return x < img_.size() ? img_[x] : x; }

    bool is_identity() const;
    // Length after dropping trailing fixed points; equality/hash domain.
    uint32_t effective_degree() const;
    uint32_t smallest_moved() const;                      // degree() if identity

    Perm inverse() const;

    bool operator==(const Perm& o) const;
    bool operator!=(const Perm& o) const { return !(*this == o); }
    uint64_t hash() const;

    const std::vector<uint16_t>& images() const { return img_; }

private:
    struct trusted_tag {};
    Perm(std::vector<uint16_t> images, trusted_tag) : img_(std::move(images)) {}

    std::vector<uint16_t> img_;

    friend Perm compose(const Perm&, const Perm&);
    friend Perm conjugate(const Perm&, const Perm&);
};

struct PermHash {
    size_t operator()(const Perm& p) const { return static_cast<size_t>(p.hash()); }
};

Perm compose(const Perm& g, const Perm& h);               // g first
Perm conjugate(const Perm& g, const Perm& h);             // h^-1 * g * h
Perm power(const Perm& g, int64_t k);
Perm pad(const Perm& g, uint32_t degree);

uint64_t perm_order(const Perm& g);                       // lcm of cycle lengths
uint64_t product_order(const Perm& g, const Perm& h);     // order of g*h, no allocation of the product
bool is_involution(const Perm& g);                        // order exactly 2

enum class Parity { even, odd };
Parity parity(const Perm& g);

std::vector<std::vector<uint32_t>> cycles(const Perm& g);             // nontrivial cycles, 0-based
Perm from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cs);

// Cycle notation is 1-based in all text I/O: "(1 2 3)(4 5)", "()" = identity.
std::string to_cycle_string(const Perm& g);
Perm parse_cycles(const std::string& text, uint32_t min_degree = 0);

} // namespace skewfact
