#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ohdet/incidence.hpp"
#include "ohdet/permutation.hpp"

namespace ohdet {

/// Default cap on the number of contributors any single operation may
/// visit. n^n * n! explodes past n = 7.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// A contributor of an n-full host: a tail map V -> E together with a
/// permutation V -> V. The tail-incidence of v is (v, tail[v]) and the
/// head-incidence is (perm(v), tail[v]).
struct Contributor {
    std::vector<int> tail;
    Permutation perm;

    bool operator==(const Contributor&) const = default;
};

/// A tail-equivalence class, named by its tail map. Edge-monic iff the
/// tail map is injective; then the map read as k -> l is the class
/// identifier.
struct TailClassId {
    std::vector<int> tail;
    bool edge_monic = false;
    std::optional<Permutation> identifier;

    static TailClassId from_tail(std::vector<int> tail);
    static TailClassId from_identifier(const Permutation& alpha);
};

struct ClassTally {
    TailClassId class_id;
    std::int64_t pos_count = 0;
    std::int64_t neg_count = 0;
    std::int64_t signed_sum = 0;
};

/// One permutation cycle of a contributor with its sign. Backsteps are
/// 1-cycles and always negative.
struct ComponentSign {
    std::vector<int> cycle;  // canonical cycle, 0-based vertices
    int sign = 0;            // +1 or -1
};

struct SignDetail {
    int sign = 0;                 // (-1)^{positive_components}
    int positive_components = 0;  // pc(c)
    std::vector<ComponentSign> components;
};

/// Component signs and the contributor sign (-1)^{pc(c)}. Each k-cycle
/// multiplies adjacency signs -entry(v_i, tail[v_i]) * entry(v_{i+1}, tail[v_i]);
/// a fixed point is a backstep with sign -entry(v, tail[v])^2 = -1.
/// Requires an n-full host; throws if the contributor touches a zero entry.
SignDetail contributor_sign(const IncidenceStructure& H, const Contributor& c);

/// Streams the n! contributors of a tail class in lexicographic order of
/// the permutation image array. Requires an n-full host.
void enumerate_tail_class(const IncidenceStructure& H, const TailClassId& cls,
                          const std::function<void(const Permutation&, int sign)>& visit);

ClassTally class_tally(const IncidenceStructure& H, const TailClassId& cls);

struct ContributorDetResult {
    std::int64_t det_laplacian = 0;
    std::uint64_t contributors_visited = 0;
    std::uint64_t classes_visited = 0;
};

struct BudgetExceeded {
    mpz_class required;  // contributors the operation would have to visit
};

/// det(L) by summing the signs of all n^n * n! contributors, partitioned
/// across `workers` threads over the tail-class index space; results are
/// independent of the worker count. Returns BudgetExceeded without doing
/// any work when n^n * n! > budget.
std::variant<ContributorDetResult, BudgetExceeded> laplacian_det_via_contributors(
    const IncidenceStructure& H, std::uint64_t budget = kDefaultBudget, int workers = 1);

struct PairingWitness {
    std::vector<int> tail;  // the class's tail map
    int v = 0;              // least vertex pair sharing a tail edge, 0-based
    int w = 0;
};

struct NonMonicReport {
    std::uint64_t classes_checked = 0;
    bool all_zero = false;
    bool pairing_holds = false;  // sign(c_pi) + sign(c_pi·(vw)) = 0 for every pi
    std::uint64_t case1_pairs = 0;  // 2-cycle through the shared edge vs two backsteps
    std::uint64_t case2_pairs = 0;
    std::optional<PairingWitness> witness;  // first class's witness pair
};

/// Checks every non-edge-monic class sums to zero and that the
/// transposition pairing from the vanishing proof cancels pairwise.
std::variant<NonMonicReport, BudgetExceeded> verify_nonmonic_zero(
    const IncidenceStructure& H, std::uint64_t budget = kDefaultBudget);

struct SingleClassMagnitude {
    std::int64_t magnitude = 0;  // |signed_sum| of the class
    ClassTally tally;
    bool identities_hold = false;  // n! - 2*minority = 2*majority - n!
};

/// |class sum| of the edge-monic class with identifier alpha; equals
/// |det(H)| for every identifier.
SingleClassMagnitude det_magnitude_single_class(const IncidenceStructure& H,
                                                const Permutation& alpha);

struct AllClassesResult {
    std::vector<ClassTally> tallies;     // all n! edge-monic classes, identifier-lex order
    std::int64_t plus_classes = 0;       // classes with positive sum
    std::int64_t minus_classes = 0;      // classes with negative sum
    std::int64_t det_magnitude = 0;      // |det(H)|, 0 when singular
    std::int64_t laplacian_det = 0;      // sum of all class sums
    bool degenerate = false;             // det = 0: the counting identities do not apply
    bool identities_hold = false;
};

AllClassesResult class_tallies_all(const IncidenceStructure& H, int workers = 1);

struct AdjacencyInversePair {
    Contributor in_alpha;  // c_{beta^-1 alpha} in A_alpha
    Contributor in_beta;   // c_{alpha^-1 beta} in A_beta
    bool same_adjacencies = false;
    bool equal_signs = false;
};

/// The unique adjacency-equivalent pair between classes alpha and beta:
/// tails alpha with heads beta, and tails beta with heads alpha.
AdjacencyInversePair adjacency_inverse_pair(const IncidenceStructure& H,
                                            const Permutation& alpha,
                                            const Permutation& beta);

struct HeadClassResult {
    std::vector<Contributor> contributors;  // adjacency-inverses of A_alpha
    bool common_heads = false;       // all share the head-incidence set {(v, alpha(v))}
    bool transversal = false;        // one contributor per edge-monic tail class
};

HeadClassResult head_class_from_tail_class(const IncidenceStructure& H,
                                           const Permutation& alpha);

} // namespace ohdet
