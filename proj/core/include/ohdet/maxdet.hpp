#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ohdet/incidence.hpp"

namespace ohdet {

struct SearchResult {
    int n = 0;
    mpz_class best_magnitude;
    std::vector<IncidenceStructure> witnesses;  // standardized, by candidate index
    std::uint64_t visited = 0;
    mpz_class n_pow_n;          // Hadamard bound compared as best^2 <= n^n
    bool hadamard_ok = false;
    bool heuristic = false;     // local search: not proven optimal
    std::int64_t id_class_neg_count = -1;  // neg contributors of A_id at the best (heuristic runs)
    bool cross_check_ok = false;  // one witness re-checked through a class tally
};

/// All 2^{(n-1)^2} standardized candidates; |det| via the exact oracle.
/// Ties across workers resolve to the least candidate index first.
/// Throws std::invalid_argument when n exceeds the cap.
SearchResult exhaustive_maxdet(int n, int workers = 1, int cap = 5);

/// Hill climbing over single-entry flips in the standardized free block,
/// random restarts, deterministic given seed. budget counts determinant
/// evaluations.
SearchResult local_search_maxdet(int n, std::uint64_t seed, std::uint64_t budget);

struct ForcedSignRow {
    int target_sign = 0;         // uniform sign forced on every probe
    IncidenceStructure matrix;   // the unique standardized reconstruction
    mpz_class magnitude;
    bool attains_maximum = false;
};

struct ForcedSignReport {
    int n = 0;
    mpz_class exhaustive_maximum;
    std::vector<ForcedSignRow> rows;   // target +1 and -1
    bool any_uniform_attains = false;  // observation only
};

/// Forces every probe contributor to one uniform sign, reconstructs the
/// unique matrix, and compares its |det| against the exhaustive maximum.
ForcedSignReport forced_sign_experiment(int n, int cap = 5);

} // namespace ohdet
