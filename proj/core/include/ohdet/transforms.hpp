#pragma once

#include <gmpxx.h>

#include <vector>

#include "ohdet/incidence.hpp"

namespace ohdet {

/// Row/column negation making the first row and first column all +1.
/// H_std(v,e) = row_signs[v] * col_signs[e] * H(v,e).
struct Standardization {
    IncidenceStructure h_std;
    std::vector<int> row_signs;  // +1 / -1
    std::vector<int> col_signs;
};

/// Deterministic: row v is negated iff H(v,1) = -1, then column e iff
/// the updated (1,e) entry is -1. Requires a full structure.
Standardization standardize(const IncidenceStructure& H);

struct Reduction {
    IncidenceStructure h_prime;  // (n-1)x(n-1) over {0,1}
    bool relation_check = false; // |det H_std| = 2^{n-1} |det H'|
    bool pivot_check = false;    // entry rule agrees with the pivot/factor path
    mpz_class det_h;             // det(H_std)
    mpz_class det_h_prime;
};

/// {+-1} -> {0,1} determinant-preserving reduction: pivot on (1,1), take
/// the (1,1)-minor, factor -2 from each row. Entry rule: H'(k-1,l-1) = 0
/// iff H_std(k,l) = +1. Requires n >= 2.
Reduction reduce_to_01(const Standardization& S);

struct BouquetSigns {
    /// signs[k-2][l-2] = sign of the digon on vertices v1,vk and edges
    /// e1,el, for k,l in 2..n.
    std::vector<std::vector<int>> signs;
    bool lemma_check = false;  // digon positive <=> H' entry 0
};

/// Fundamental-bouquet digon signs: h11*h1l*hk1*hkl. Requires n-full,
/// n >= 2. The signs are invariant under row/column negation.
BouquetSigns fundamental_bouquet_signs(const IncidenceStructure& H);

/// phi(G) = |I| - (|V| + |E|) + m where m counts connected components of
/// the bipartite vertex-edge incidence graph (0-edges and isolated
/// vertices included). Equals (n-1)^2 for n-full structures.
long cyclomatic_number(const IncidenceStructure& G);

} // namespace ohdet
