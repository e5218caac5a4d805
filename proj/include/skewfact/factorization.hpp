#pragma once

#include "skewfact/action.hpp"
#include "skewfact/group.hpp"
#include "skewfact/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewfact {

// A dihedral group of order 2n handed over with its certifying data:
// o(a) = n, b^2 = 1, b outside <a>, a^b = a^-1, |<a,b>| = 2n.
// All of that is re-verified on construction. Order-4 witnesses (n = 2,
// the Klein group) are accepted but flagged.
struct DihedralWitness {
    Perm rotation;
    Perm reflection;
    uint64_t n = 0;               // |D| = 2n
    GroupHandle group;
    bool degenerate_klein = false;
};

DihedralWitness make_dihedral_witness(const Perm& rotation, const Perm& reflection);

std::optional<DihedralWitness> recognize_dihedral(const GroupHandle& h,
                                                  const Limits& lim = {});

enum class SearchMode { randomized, exhaustive };

struct SearchEvidence {
    bool deterministic = false;
    std::string method;           // order-spectrum | involution-pairs | randomized
    uint64_t elements_enumerated = 0;
    std::string note;
};

struct DihedralSearch {
    std::optional<DihedralWitness> witness;
    SearchEvidence evidence;
};

// Search for a dihedral subgroup of order two_n. Exhaustive mode enumerates
// the group, short-circuits on the order spectrum (no element of order n
// means no D_2n), then scans one involution representative per class against
// every involution; negatives at full coverage are deterministic.
DihedralSearch find_dihedral(const GroupHandle& x, uint64_t two_n, SearchMode mode,
                             RandomSource& rng, const Limits& lim = {});

// Regular dihedral subgroup on the natural points: a rotation of order
// degree/2 with two equal cycles plus a cycle-swapping reflection found by
// membership tests over the possible alignments.
DihedralSearch find_regular_dihedral(const GroupHandle& x, RandomSource& rng,
                                     size_t budget = 4000, const Limits& lim = {});

struct ProductCheck {
    BigUint order_x, order_g, order_d, order_intersection;
    bool ok = false;              // |G||D| == |X||G cap D|
    GroupHandle intersection;
};

// Set-product criterion for X = GD.
ProductCheck is_product(const GroupHandle& x, const GroupHandle& g,
                        const GroupHandle& d, const Limits& lim = {});

struct NormalizerVerdict {
    Verdict3 dihedral_exists = Verdict3::inconclusive;
    BigUint normalizer_order;
    bool deterministic = false;
    Perm rotation;
    std::optional<Perm> inverting_involution;
};

// Any D_2p through an order-p element a has its reflection inside N_X(<a>);
// with all order-p subgroups conjugate the normalizer scan is decisive.
NormalizerVerdict no_dihedral_by_normalizer(const GroupHandle& x, uint32_t p,
                                            RandomSource& rng, const Limits& lim = {});

struct Table1Row {
    int id;
    std::string x_desc, g_desc, d_desc;
    bool quasiprimitive;
    std::string domain;
};

const std::vector<Table1Row>& table1_rows();

// Reference data: the classified quasiprimitive (indeed 2-transitive)
// permutation groups containing a regular dihedral subgroup, with point
// stabilizers where the classification records them. Stored verbatim as
// handed down; the rows with simple stabilizers are the quasiprimitive
// catalogue rows and are cross-referenced by the scenarios.
struct RegularDihedralCase {
    std::string group;
    std::string regular_subgroup;
    std::string point_stabilizer;    // "-" when not recorded
};

const std::vector<RegularDihedralCase>& regular_dihedral_catalogue();

// Catalogue entry behind a quasiprimitive row (1..4), if any.
std::optional<RegularDihedralCase> catalogue_entry_for_row(int row);

struct FactorizationCertificate {
    BigUint order_x, order_g, order_d, order_intersection;
    bool product_ok = false;
    bool exact = false;                      // intersection trivial
    BigUint core_d_order;
    BigUint core_g_order;
    SimplicityResult g_simple;
    QuasiprimitiveResult quasiprimitive;     // of X on [X:G]
    std::optional<bool> coset_two_transitive;
    bool regular_witness_on_cosets = false;  // checked on quasiprimitive rows
    std::optional<int> matched_row;
    bool deterministic = true;
    std::vector<std::string> notes;
};

struct CertifyOptions {
    size_t simplicity_sample_budget = 64;
    uint64_t simplicity_work_budget = 0;     // 0 = unlimited
    bool check_regular_witness = true;
};

FactorizationCertificate verify_dihedral_skew(const GroupHandle& x,
                                              const GroupHandle& g,
                                              const DihedralWitness& d,
                                              RandomSource& rng,
                                              const Limits& lim = {},
                                              const CertifyOptions& opt = {});

// Same checks with a cyclic complement C = <a>.
FactorizationCertificate verify_skew_instance(const GroupHandle& x,
                                              const GroupHandle& g,
                                              const Perm& a,
                                              RandomSource& rng,
                                              const Limits& lim = {},
                                              const CertifyOptions& opt = {});

std::optional<int> match_table1_row(const BigUint& x, const BigUint& g,
                                    const BigUint& d, Verdict3 quasiprimitive);

} // namespace skewfact
