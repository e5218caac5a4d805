#include "skewfact/constructors.hpp"

#include "skewfact/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skewfact {

namespace {

// ---------------------------------------------------------------------------
// Elementary constructions

GroupHandle make_cyclic(uint32_t n) {
    if (n == 0) throw input_error("C:n requires n >= 1");
    if (n == 1) return GroupHandle::trivial(1, "C1");
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return GroupHandle({from_cycles(n, {cyc})}, "C" + std::to_string(n));
}

GroupHandle make_symmetric(uint32_t n) {
    if (n == 0) throw input_error("S:n requires n >= 1");
    if (n == 1) return GroupHandle::trivial(1, "S1");
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return GroupHandle({from_cycles(n, {{0, 1}}), from_cycles(n, {cyc})},
                       "S" + std::to_string(n));
}

GroupHandle make_alternating(uint32_t n) {
    if (n < 3) throw input_error("A:n requires n >= 3");
    std::string label = "A" + std::to_string(n);
    if (n == 3) return GroupHandle({from_cycles(3, {{0, 1, 2}})}, label);
    std::vector<uint32_t> tail(n - 2);
    std::iota(tail.begin(), tail.end(), 2u);
    // The tail cycle has length n-2; prepend (1 2) when that length is even
    // so both generators are even permutations.
    std::vector<std::vector<uint32_t>> second;
    if ((n - 2) % 2 == 0) second.push_back({0, 1});
    second.push_back(tail);
    return GroupHandle({from_cycles(n, {{0, 1, 2}}), from_cycles(n, second)}, label);
}

// Regular representation of the dihedral group of order k = 2n on k points:
// rotations r^i at points 0..n-1, reflections r^i s at points n..2n-1,
// acting by right multiplication.
GroupHandle make_dihedral_regular(uint32_t k) {
    if (k < 4 || k % 2 != 0) throw input_error("D:k requires even k >= 4");
    uint32_t n = k / 2;
    std::vector<uint16_t> r(k), s(k);
    for (uint32_t i = 0; i < n; ++i) {
        r[i] = static_cast<uint16_t>((i + 1) % n);                    // r^i r = r^{i+1}
        r[n + i] = static_cast<uint16_t>(n + (i + n - 1) % n);        // r^i s r = r^{i-1} s
        s[i] = static_cast<uint16_t>(n + i);                          // r^i s
        s[n + i] = static_cast<uint16_t>(i);                          // r^i s s = r^i
    }
    return GroupHandle({Perm(std::move(r)), Perm(std::move(s))}, "D" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Linear groups

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint32_t primitive_root(uint32_t p) {
    for (uint32_t z = 2; z < p; ++z) {
        uint32_t v = 1;
        bool ok = true;
        for (uint32_t e = 1; e < p - 1; ++e) {
            v = static_cast<uint32_t>((static_cast<uint64_t>(v) * z) % p);
            if (v == 1) { ok = false; break; }
        }
        if (ok) return z;
    }
    throw std::logic_error("no primitive root");
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    uint32_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<uint32_t>((static_cast<uint64_t>(r) * b) % p);
        b = static_cast<uint32_t>((static_cast<uint64_t>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

// Projective line over F_p: points 0..p-1 are the affine line, point p is
// infinity. The Moebius map of [[a,b],[c,d]] with nonzero determinant.
Perm moebius(uint32_t p, int64_t a, int64_t b, int64_t c, int64_t d) {
    auto m = [&](int64_t v) { return static_cast<uint32_t>(((v % p) + p) % p); };
    uint32_t ua = m(a), ub = m(b), uc = m(c), ud = m(d);
    std::vector<uint16_t> img(p + 1);
    for (uint32_t x = 0; x < p; ++x) {
        uint32_t den = static_cast<uint32_t>((static_cast<uint64_t>(uc) * x + ud) % p);
        uint32_t num = static_cast<uint32_t>((static_cast<uint64_t>(ua) * x + ub) % p);
        img[x] = static_cast<uint16_t>(
            den == 0 ? p : (static_cast<uint64_t>(num) * inv_mod(den, p)) % p);
    }
    img[p] = static_cast<uint16_t>(uc == 0 ? p : (static_cast<uint64_t>(ua) * inv_mod(uc, p)) % p);
    return Perm(std::move(img));
}

GroupHandle make_psl2(uint32_t p) {
    if (!is_prime(p) || p == 2) throw input_error("PSL2:p requires an odd prime p");
    // Determinant-one generators: a translation and the inversion.
    return GroupHandle({moebius(p, 1, 1, 0, 1), moebius(p, 0, -1, 1, 0)},
                       "PSL(2," + std::to_string(p) + ")");
}

GroupHandle make_pgl2(uint32_t p) {
    if (!is_prime(p) || p == 2) throw input_error("PGL2:p requires an odd prime p");
    uint32_t z = primitive_root(p);
    return GroupHandle({moebius(p, 1, 1, 0, 1), moebius(p, 0, -1, 1, 0),
                        moebius(p, z, 0, 0, 1)},
                       "PGL(2," + std::to_string(p) + ")");
}

// Vectors of F_2^3 numbered by binary value: point v = v0 + 2 v1 + 4 v2.
// A matrix acts as w_i = parity(row_i & v).
Perm gl32_matrix(std::array<uint8_t, 3> rows) {
    std::vector<uint16_t> img(8);
    for (uint32_t v = 0; v < 8; ++v) {
        uint32_t w = 0;
        for (int i = 0; i < 3; ++i)
            w |= static_cast<uint32_t>(__builtin_parity(rows[static_cast<size_t>(i)] & v)) << i;
        img[v] = static_cast<uint16_t>(w);
    }
    return Perm(std::move(img));
}

GroupHandle make_gl32() {
    // Coordinate rotation plus a transvection generate the whole group
    // (order checked in the test suite).
    Perm rot = gl32_matrix({0b010, 0b100, 0b001});
    Perm trans = gl32_matrix({0b011, 0b010, 0b100});
    return GroupHandle({rot, trans}, "GL(3,2)");
}

GroupHandle make_agl32() {
    auto lin = make_gl32();
    std::vector<Perm> gens = lin.generators();
    for (uint32_t j = 0; j < 3; ++j) {
        std::vector<uint16_t> img(8);
        for (uint32_t v = 0; v < 8; ++v) img[v] = static_cast<uint16_t>(v ^ (1u << j));
        gens.push_back(Perm(std::move(img)));
    }
    return GroupHandle(std::move(gens), "AGL(3,2)");
}

// ---------------------------------------------------------------------------
// Fixtures

std::string g_fixture_dir;                  // set explicitly or resolved lazily
std::map<std::string, FixtureRecord> g_fixture_cache;
std::map<std::string, std::string> g_fixture_hashes;
std::mutex g_fixture_mutex;

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

FixtureRecord parse_fixture(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fixture_error("cannot open fixture file " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const std::exception& e) {
        throw fixture_error("fixture " + path + ": " + e.what());
    }

    FixtureRecord rec;
    try {
        rec.name = doc.at("name").get<std::string>();
        rec.degree = doc.at("degree").get<uint32_t>();
        rec.expected_order = doc.at("expected_order").get<std::string>();
        rec.provenance = doc.value("provenance", std::string{});
        for (const auto& arr : doc.at("generators")) {
            std::vector<uint16_t> img;
            for (const auto& v : arr) {
                uint64_t pt = v.get<uint64_t>();
                if (pt >= rec.degree)
                    throw fixture_error("fixture " + path + ": point out of range");
                img.push_back(static_cast<uint16_t>(pt));
            }
            if (img.size() != rec.degree)
                throw fixture_error("fixture " + path + ": generator length != degree");
            rec.generators.push_back(Perm(std::move(img)));
        }
    } catch (const fixture_error&) {
        throw;
    } catch (const std::exception& e) {
        throw fixture_error("fixture " + path + ": " + e.what());
    }
    if (rec.generators.empty()) throw fixture_error("fixture " + path + ": no generators");
    rec.content_hash = hex64(fnv1a(bytes.data(), bytes.size()));

    // Integrity gate: the stabilizer chain must reproduce the expected order.
    StabilizerChain chain(rec.generators, rec.degree);
    if (!rec.expected_order.empty() &&
        chain.order() != BigUint::from_decimal(rec.expected_order)) {
        throw fixture_error("fixture " + path + ": chain order " +
                            chain.order().to_string() + " != expected " + rec.expected_order);
    }
    return rec;
}

} // namespace

std::string fixture_directory() {
    std::lock_guard<std::mutex> lock(g_fixture_mutex);
    if (!g_fixture_dir.empty()) return g_fixture_dir;
    if (const char* env = std::getenv("SKEWFACT_FIXTURES")) return env;
    std::ifstream probe("fixtures/m12.json");
    if (probe) return "fixtures";
#ifdef SKEWFACT_SOURCE_FIXTURES
    return SKEWFACT_SOURCE_FIXTURES;
#else
    return "fixtures";
#endif
}

void set_fixture_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_fixture_mutex);
    g_fixture_dir = dir;
    g_fixture_cache.clear();
    g_fixture_hashes.clear();
}

const FixtureRecord& load_fixture(const std::string& stem) {
    std::string path = stem;
    if (path.find('/') == std::string::npos && path.find(".json") == std::string::npos)
        path = fixture_directory() + "/" + stem + ".json";
    std::lock_guard<std::mutex> lock(g_fixture_mutex);
    auto it = g_fixture_cache.find(path);
    if (it == g_fixture_cache.end()) {
        it = g_fixture_cache.emplace(path, parse_fixture(path)).first;
        g_fixture_hashes[it->second.name] = it->second.content_hash;
    }
    return it->second;
}

std::map<std::string, std::string> loaded_fixture_hashes() {
    std::lock_guard<std::mutex> lock(g_fixture_mutex);
    return g_fixture_hashes;
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

GroupSpec parse_spec_at(const std::string& text, size_t& i);

void skip_spaces(const std::string& text, size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

GroupSpec parse_spec_at(const std::string& text, size_t& i) {
    skip_spaces(text, i);
    if (text.compare(i, 5, "prod(") == 0) {
        i += 5;
        GroupSpec spec;
        spec.left = std::make_unique<GroupSpec>(parse_spec_at(text, i));
        skip_spaces(text, i);
        if (i >= text.size() || text[i] != ',')
            throw input_error("expected ',' in prod(...)");
        ++i;
        spec.right = std::make_unique<GroupSpec>(parse_spec_at(text, i));
        skip_spaces(text, i);
        if (i >= text.size() || text[i] != ')')
            throw input_error("expected ')' in prod(...)");
        ++i;
        spec.text = "prod(" + spec.left->text + "," + spec.right->text + ")";
        return spec;
    }
    size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (start == i) throw input_error("empty group spec atom");
    GroupSpec spec;
    spec.atom = text.substr(start, i - start);
    spec.text = spec.atom;
    return spec;
}

uint32_t atom_param(const std::string& atom, const std::string& prefix) {
    std::string num = atom.substr(prefix.size());
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad parameter in spec atom '" + atom + "'");
    unsigned long v = std::stoul(num);
    if (v > 65536) throw input_error("parameter too large in '" + atom + "'");
    return static_cast<uint32_t>(v);
}

GroupHandle make_atom(const std::string& atom) {
    if (atom.rfind("A:", 0) == 0) return make_alternating(atom_param(atom, "A:"));
    if (atom.rfind("S:", 0) == 0) return make_symmetric(atom_param(atom, "S:"));
    if (atom.rfind("C:", 0) == 0) return make_cyclic(atom_param(atom, "C:"));
    if (atom.rfind("D:", 0) == 0) return make_dihedral_regular(atom_param(atom, "D:"));
    if (atom.rfind("PSL2:", 0) == 0) return make_psl2(atom_param(atom, "PSL2:"));
    if (atom.rfind("PGL2:", 0) == 0) return make_pgl2(atom_param(atom, "PGL2:"));
    if (atom == "AGL32") return make_agl32();
    if (atom == "GL32") return make_gl32();
    if (atom == "M11" || atom == "M12" || atom == "M23" || atom == "M24") {
        std::string stem = atom;
        std::transform(stem.begin(), stem.end(), stem.begin(), ::tolower);
        const auto& rec = load_fixture(stem);
        return GroupHandle(rec.generators, rec.name);
    }
    if (atom == "M12.2") {
        const auto& rec = load_fixture("m12aut");
        return GroupHandle(rec.generators, rec.name);
    }
    if (atom.rfind("file:", 0) == 0) {
        const auto& rec = load_fixture(atom.substr(5));
        return GroupHandle(rec.generators, rec.name);
    }
    throw input_error("unknown group spec atom '" + atom + "'");
}

GroupHandle shift_group(const GroupHandle& g, uint32_t offset, uint32_t total) {
    std::vector<Perm> gens;
    for (const auto& p : g.generators()) {
        std::vector<uint16_t> img(total);
        for (uint32_t i = 0; i < total; ++i) img[i] = static_cast<uint16_t>(i);
        for (uint32_t i = 0; i < g.degree(); ++i)
            img[offset + i] = static_cast<uint16_t>(offset + p.apply(i));
        gens.push_back(Perm(std::move(img)));
    }
    return GroupHandle(std::move(gens), g.label());
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    size_t i = 0;
    GroupSpec spec = parse_spec_at(text, i);
    skip_spaces(text, i);
    if (i != text.size()) throw input_error("trailing input in group spec '" + text + "'");
    return spec;
}

GroupHandle make_group(const GroupSpec& spec) {
    if (!spec.is_product()) return make_atom(spec.atom);
    GroupHandle a = make_group(*spec.left);
    GroupHandle b = make_group(*spec.right);
    uint32_t total = a.degree() + b.degree();
    GroupHandle bs = shift_group(b, a.degree(), total);
    std::vector<Perm> gens;
    for (const auto& p : a.generators()) gens.push_back(pad(p, total));
    for (const auto& p : bs.generators()) gens.push_back(p);
    return GroupHandle(std::move(gens), a.label() + "x" + b.label());
}

GroupHandle make_group(const std::string& spec_text) {
    return make_group(parse_group_spec(spec_text));
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

// Reflection i -> m+2-i on the 1-based points 1..m+1 (0-based: i -> m-i),
// the unique involution of the (m+1)-gon inverting (1 2 ... m+1) and fixing
// m/2+1.
std::vector<std::vector<uint32_t>> polygon_reflection_pairs(uint32_t m) {
    std::vector<std::vector<uint32_t>> pairs;
    for (uint32_t i = 0; i < m / 2; ++i) pairs.push_back({i, m - i});
    return pairs;
}

std::vector<uint32_t> run(uint32_t from, uint32_t len) {
    std::vector<uint32_t> v(len);
    std::iota(v.begin(), v.end(), from);
    return v;
}

} // namespace

Embedding lemma31_embedding(uint32_t m) {
    if (m < 6 || m % 2 != 0) throw input_error("lemma31 embedding requires even m >= 6");
    uint32_t deg = m + 3;
    Perm a = from_cycles(deg, {run(0, m + 1)});
    auto pairs = polygon_reflection_pairs(m);
    pairs.push_back({m + 1, m + 2});
    Perm b = from_cycles(deg, pairs);

    GroupHandle am1 = make_alternating(m + 1);
    std::vector<Perm> xgens;
    for (const auto& p : am1.generators()) xgens.push_back(pad(p, deg));
    xgens.push_back(b);
    GroupHandle x(std::move(xgens), "A" + std::to_string(m + 1) + ":2");

    GroupHandle g = make_alternating(m);   // fixes m+1..m+3 inside S_{m+3}
    DihedralWitness d = make_dihedral_witness(a, b);
    if (d.n != m + 1) throw std::logic_error("lemma31 witness has wrong rotation order");
    return {std::move(x), std::move(g), std::move(d), "A_{m+1} extended by a polygon reflection"};
}

Embedding lemma32_embedding(uint32_t m) {
    if (m < 2) throw input_error("lemma32 embedding requires m >= 2");
    uint32_t deg = 4 * m + 2;
    Perm a = from_cycles(deg, {run(0, 4 * m), {4 * m, 4 * m + 1}});
    std::vector<std::vector<uint32_t>> pairs;
    for (uint32_t i = 0; i < 2 * m; ++i) pairs.push_back({i, 4 * m - 1 - i});
    Perm b = from_cycles(deg, pairs);

    GroupHandle a4m = make_alternating(4 * m);
    std::vector<Perm> xgens;
    for (const auto& p : a4m.generators()) xgens.push_back(pad(p, deg));
    xgens.push_back(a);
    GroupHandle x(std::move(xgens), "A" + std::to_string(4 * m) + ":2");

    GroupHandle g = make_alternating(4 * m - 1);
    DihedralWitness d = make_dihedral_witness(a, b);
    if (d.n != 4 * m) throw std::logic_error("lemma32 witness has wrong rotation order");
    return {std::move(x), std::move(g), std::move(d), "A_4m extended by the long rotation"};
}

Embedding theorem2_embedding(uint32_t m, bool doubled) {
    if (m % 2 != 0 || (m / 2) % 2 != 0 || m / 2 < 4)
        throw input_error("theorem2 embedding requires m/2 even and >= 4 "
                          "(m/2 = 3 fails: the reflection would be odd)");
    uint32_t deg = doubled ? m + 3 : m + 1;
    Perm a = from_cycles(deg, {run(0, m + 1)});
    Perm b = from_cycles(deg, polygon_reflection_pairs(m));
    if (parity(b) != Parity::even) throw std::logic_error("reflection must be even");

    // G stabilizes the one point b fixes, so G cap D = <b>.
    uint32_t fixed = m / 2;

    GroupHandle am1 = make_alternating(m + 1);
    if (!doubled) {
        GroupHandle y = am1;
        GroupHandle g = point_stabilizer(y, fixed);
        DihedralWitness d = make_dihedral_witness(a, b);
        return {std::move(y), std::move(g), std::move(d), "A_{m+1} with D_{2(m+1)}"};
    }
    Perm z = from_cycles(deg, {{m + 1, m + 2}});
    std::vector<Perm> ygens;
    for (const auto& p : am1.generators()) ygens.push_back(pad(p, deg));
    ygens.push_back(z);
    GroupHandle y(std::move(ygens), "A" + std::to_string(m + 1) + "xC2");
    // G is the point stabilizer inside the alternating part; the stabilizer
    // taken in Y would pick up z as well.
    GroupHandle g = point_stabilizer(am1, fixed);
    DihedralWitness d = make_dihedral_witness(compose(a, z), b);
    if (d.n != 2 * (m + 1)) throw std::logic_error("doubled witness has wrong rotation order");
    return {std::move(y), std::move(g), std::move(d), "A_{m+1} x C2 with D_{4(m+1)}"};
}

GroupHandle find_a5_in_psl211(const GroupHandle& psl, const Limits& lim) {
    auto els = enumerate_elements(psl, lim);
    std::vector<size_t> invs, threes;
    for (size_t i = 0; i < els.size(); ++i) {
        uint64_t o = perm_order(els[i]);
        if (o == 2) invs.push_back(i);
        else if (o == 3) threes.push_back(i);
    }
    for (size_t xi : invs) {
        for (size_t yi : threes) {
            if (product_order(els[xi], els[yi]) != 5) continue;
            GroupHandle h({els[xi], els[yi]}, "A5");
            if (h.order() == BigUint(60)) return h;
        }
    }
    throw std::logic_error("no A5 found in PSL(2,11)");
}

Embedding theorem2_12_embedding() {
    const uint32_t p = 11, deg = 15;
    GroupHandle psl = make_psl2(p);
    // D22 in PGL(2,11): a = x+1 (translation), b = -x. b has matrix
    // [[-1,0],[0,1]] of determinant -1, a nonsquare mod 11, so b is outside
    // PSL(2,11).
    Perm a = pad(moebius(p, 1, 1, 0, 1), deg);
    Perm b = pad(moebius(p, -1, 0, 0, 1), deg);
    if (psl.contains(b)) throw std::logic_error("reflection unexpectedly inside PSL(2,11)");
    if (conjugate(a, b) != a.inverse()) throw std::logic_error("reflection does not invert a");

    Perm z = from_cycles(deg, {{12, 13, 14}});
    Perm b2 = compose(b, from_cycles(deg, {{13, 14}}));

    std::vector<Perm> ygens;
    for (const auto& gp : psl.generators()) ygens.push_back(pad(gp, deg));
    ygens.push_back(z);
    ygens.push_back(b2);
    GroupHandle y(std::move(ygens), "C3:PGL(2,11)");

    GroupHandle g = find_a5_in_psl211(psl);
    std::vector<Perm> gpad;
    for (const auto& gp : g.generators()) gpad.push_back(pad(gp, deg));
    GroupHandle gd(std::move(gpad), "A5");

    DihedralWitness d = make_dihedral_witness(compose(a, z), b2);
    if (d.n != 33) throw std::logic_error("rotation a z must have order 33");
    return {std::move(y), std::move(gd), std::move(d), "C3 : PGL(2,11) with D66"};
}

Embedding theorem2_13_split_embedding() {
    const uint32_t p = 11, deg = 14;
    GroupHandle pgl = make_pgl2(p);
    Perm a = pad(moebius(p, 1, 1, 0, 1), deg);
    Perm b = pad(moebius(p, -1, 0, 0, 1), deg);
    Perm z = from_cycles(deg, {{12, 13}});

    std::vector<Perm> ygens;
    for (const auto& gp : pgl.generators()) ygens.push_back(pad(gp, deg));
    ygens.push_back(z);
    GroupHandle y(std::move(ygens), "PGL(2,11)xC2");

    GroupHandle psl = make_psl2(p);
    GroupHandle g = find_a5_in_psl211(psl);
    std::vector<Perm> gpad;
    for (const auto& gp : g.generators()) gpad.push_back(pad(gp, deg));
    GroupHandle gd(std::move(gpad), "A5");

    // D22 x C2 is dihedral of order 44 because 11 is odd: rotation a z of
    // order 22, reflection b.
    DihedralWitness d = make_dihedral_witness(compose(a, z), b);
    if (d.n != 22) throw std::logic_error("rotation a z must have order 22");
    return {std::move(y), std::move(gd), std::move(d), "PGL(2,11) x C2 with D44"};
}

} // namespace skewfact
