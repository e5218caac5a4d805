#include "skewfact/perm.hpp"

#include "skewfact/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skewfact {

namespace {
constexpr uint32_t kMaxDegree = 1u << 16;

uint64_t lcm_checked(uint64_t a, uint64_t b) {
    uint64_t g = std::gcd(a, b);
    unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
    if (l > ~0ULL) throw input_error("permutation order exceeds 64 bits");
    return static_cast<uint64_t>(l);
}
} // namespace

Perm::Perm(uint32_t degree) {
    if (degree > kMaxDegree) throw input_error("degree exceeds 2^16");
    img_.resize(degree);
    for (uint32_t i = 0; i < degree; ++i) img_[i] = static_cast<uint16_t>(i);
}

Perm::Perm(std::vector<uint16_t> images) : img_(std::move(images)) {
    if (img_.size() > kMaxDegree) throw input_error("degree exceeds 2^16");
    std::vector<bool> seen(img_.size(), false);
    for (uint16_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw input_error("image array is not a bijection");
        seen[v] = true;
    }
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

uint32_t Perm::effective_degree() const {
    uint32_t n = degree();
    while (n > 0 && img_[n - 1] == n - 1) --n;
    return n;
}

uint32_t Perm::smallest_moved() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return i;
    return degree();
}

Perm Perm::inverse() const {
    std::vector<uint16_t> inv(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<uint16_t>(i);
    Perm p;
    p.img_ = std::move(inv);
    return p;
}

bool Perm::operator==(const Perm& o) const {
    uint32_t n = std::max(degree(), o.degree());
    for (uint32_t i = 0; i < n; ++i)
        if (apply(i) != o.apply(i)) return false;
    return true;
}

uint64_t Perm::hash() const {
    // FNV-1a over the trimmed image array; stable across platforms.
    uint64_t h = 1469598103934665603ULL;
    uint32_t n = effective_degree();
    for (uint32_t i = 0; i < n; ++i) {
        h ^= img_[i];
        h *= 1099511628211ULL;
    }
    return h;
}

Perm compose(const Perm& g, const Perm& h) {
    uint32_t n = std::max(g.degree(), h.degree());
    std::vector<uint16_t> out(n);
    for (uint32_t i = 0; i < n; ++i) out[i] = static_cast<uint16_t>(h.apply(g.apply(i)));
    return Perm(std::move(out), Perm::trusted_tag{});
}

Perm conjugate(const Perm& g, const Perm& h) {
    // (h^-1 g h)(h(i)) = h(g(i)) -- one pass, no intermediate products.
    uint32_t n = std::max(g.degree(), h.degree());
    std::vector<uint16_t> out(n);
    for (uint32_t i = 0; i < n; ++i) out[h.apply(i)] = static_cast<uint16_t>(h.apply(g.apply(i)));
    return Perm(std::move(out), Perm::trusted_tag{});
}

Perm power(const Perm& g, int64_t k) {
    if (k < 0) return power(g.inverse(), -k);
    Perm acc(std::max<uint32_t>(g.degree(), 0));
    Perm base = g;
    uint64_t e = static_cast<uint64_t>(k);
    while (e) {
        if (e & 1) acc = compose(acc, base);
        e >>= 1;
        if (e) base = compose(base, base);
    }
    return acc;
}

Perm pad(const Perm& g, uint32_t degree) {
    if (g.degree() >= degree) return g;
    std::vector<uint16_t> out(degree);
    for (uint32_t i = 0; i < degree; ++i) out[i] = static_cast<uint16_t>(g.apply(i));
    return Perm(std::move(out));
}

uint64_t perm_order(const Perm& g) {
    uint64_t ord = 1;
    std::vector<bool> seen(g.degree(), false);
    for (uint32_t i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        uint32_t j = i;
        do {
            seen[j] = true;
            j = g.apply(j);
            ++len;
        } while (j != i);
        ord = lcm_checked(ord, len);
    }
    return ord;
}

uint64_t product_order(const Perm& g, const Perm& h) {
    uint32_t n = std::max(g.degree(), h.degree());
    uint64_t ord = 1;
    std::vector<bool> seen(n, false);
    for (uint32_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        uint32_t j = i;
        do {
            seen[j] = true;
            j = h.apply(g.apply(j));
            ++len;
        } while (j != i);
        ord = lcm_checked(ord, len);
    }
    return ord;
}

bool is_involution(const Perm& g) {
    bool moved = false;
    for (uint32_t i = 0; i < g.degree(); ++i) {
        uint32_t j = g.apply(i);
        if (j != i) moved = true;
        if (g.apply(j) != i) return false;
    }
    return moved;
}

Parity parity(const Perm& g) {
    uint32_t transpositions = 0;
    std::vector<bool> seen(g.degree(), false);
    for (uint32_t i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        uint32_t len = 0;
        uint32_t j = i;
        do {
            seen[j] = true;
            j = g.apply(j);
            ++len;
        } while (j != i);
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? Parity::even : Parity::odd;
}

std::vector<std::vector<uint32_t>> cycles(const Perm& g) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(g.degree(), false);
    for (uint32_t i = 0; i < g.degree(); ++i) {
        if (seen[i] || g.apply(i) == i) continue;
        std::vector<uint32_t> cyc;
        uint32_t j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = g.apply(j);
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

Perm from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cs) {
    uint32_t n = degree;
    for (const auto& c : cs)
        for (uint32_t p : c) n = std::max(n, p + 1);
    if (n > kMaxDegree) throw input_error("degree exceeds 2^16");
    std::vector<uint16_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = static_cast<uint16_t>(i);
    std::vector<bool> used(n, false);
    for (const auto& c : cs) {
        if (c.size() < 2) {
            if (c.size() == 1) {
                if (used[c[0]]) throw input_error("overlapping cycles");
                used[c[0]] = true;
            }
            continue;
        }
        for (size_t k = 0; k < c.size(); ++k) {
            if (used[c[k]]) throw input_error("overlapping cycles");
            used[c[k]] = true;
            img[c[k]] = static_cast<uint16_t>(c[(k + 1) % c.size()]);
        }
    }
    return Perm(std::move(img));
}

std::string to_cycle_string(const Perm& g) {
    auto cs = cycles(g);
    if (cs.empty()) return "()";
    // Canonical form: each cycle starts at its smallest point, cycles sorted.
    for (auto& c : cs) {
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
    }
    std::sort(cs.begin(), cs.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) os << ' ';
            os << c[k] + 1;
        }
        os << ')';
    }
    return os.str();
}

Perm parse_cycles(const std::string& text, uint32_t min_degree) {
    std::vector<std::vector<uint32_t>> cs;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw input_error("empty cycle string");
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw input_error("expected '(' in cycle string");
        ++i;
        std::vector<uint32_t> cyc;
        for (;;) {
            skip_ws();
            if (i == text.size()) throw input_error("unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("expected point or ')' in cycle string");
            uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<uint64_t>(text[i] - '0');
                if (v > kMaxDegree) throw input_error("point exceeds 2^16");
                ++i;
            }
            if (v == 0) throw input_error("cycle points are 1-based");
            cyc.push_back(static_cast<uint32_t>(v - 1));
        }
        if (!cyc.empty()) cs.push_back(std::move(cyc));
    }
    return from_cycles(min_degree, cs);
}

} // namespace skewfact
