#pragma once

#include "skewfact/factorization.hpp"
#include "skewfact/group.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace skewfact {

// Group specs: atoms A:n, S:n, C:n, D:k, PSL2:p, PGL2:p, AGL32, GL32,
// M11, M12, M12.2, M23, M24, file:path, combined with prod(spec, spec)
// on disjoint point sets.
struct GroupSpec {
    std::string text;                       // canonical form
    std::string atom;                       // empty for products
    std::unique_ptr<GroupSpec> left, right; // product factors

    bool is_product() const { return left != nullptr; }
};

GroupSpec parse_group_spec(const std::string& text);

// Fixture files: {"name", "degree", "generators" (0-based image arrays),
// "expected_order" (decimal string), "provenance"}. The chain order must
// reproduce expected_order exactly or loading fails.
struct FixtureRecord {
    std::string name;
    uint32_t degree = 0;
    std::vector<Perm> generators;
    std::string expected_order;
    std::string provenance;
    std::string content_hash;               // fnv1a of the file bytes, hex
};

std::string fixture_directory();            // SKEWFACT_FIXTURES > ./fixtures > build-time default
void set_fixture_directory(const std::string& dir);

const FixtureRecord& load_fixture(const std::string& stem);

// Hashes of every fixture loaded so far, for report version stamps.
std::map<std::string, std::string> loaded_fixture_hashes();

GroupHandle make_group(const GroupSpec& spec);
GroupHandle make_group(const std::string& spec_text);

// The named embeddings behind the parametric factorization families.
struct Embedding {
    GroupHandle x;                          // the product group (X or Y)
    GroupHandle g;                          // the simple factor
    DihedralWitness d;
    std::string note;
};

// X = <A_{m+1} on 1..m+1, b> inside S_{m+3}, a = (1 2 ... m+1), b the
// reflection of the (m+1)-gon times the extra transposition (m+2 m+3);
// G = A_m, D = <a, b> of order 2(m+1). Requires m even, m >= 6.
Embedding lemma31_embedding(uint32_t m);

// X = <A_4m on 1..4m, a> inside S_{4m+2}, a = (1 ... 4m)(4m+1 4m+2),
// b the reflection of the 4m-gon; G = A_{4m-1}, D = <a, b> of order 8m.
// Requires m >= 2.
Embedding lemma32_embedding(uint32_t m);

// Inside A_{m+1}: a = (1 ... m+1), b the reflection fixing m/2+1,
// G the stabilizer of b's fixed point (so G cap D = <b>), D of order
// 2(m+1). Doubled: adjoin a central transposition z, D = <a z, b> of
// order 4(m+1), Y = A_{m+1} x <z>. Requires m/2 even, m/2 >= 4.
Embedding theorem2_embedding(uint32_t m, bool doubled);

// Y = <PSL(2,11), z, b'> on 15 points with z = (13 14 15) and
// b' = b (14 15) for a D22 = <a, b> in PGL(2,11), b outside PSL(2,11);
// G = an A5 inside PSL(2,11), D = <a z, b'> of order 66. The core of D
// in Y is <z> of order 3 and |Y| = 3960.
Embedding theorem2_12_embedding();

// Split companion to the theorem2 1.3 family: Y = PGL(2,11) x C2,
// D = <a z, b> of order 44 (= D22 x C2 with 11 odd), core of D = <z>.
Embedding theorem2_13_split_embedding();

// First A5 subgroup of PSL(2,11) in deterministic enumeration order.
GroupHandle find_a5_in_psl211(const GroupHandle& psl, const Limits& lim = {});

} // namespace skewfact
