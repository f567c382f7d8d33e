#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ohdet/exact.hpp"
#include "ohdet/incidence.hpp"

namespace testutil {

inline ohdet::IncidenceStructure fig7() {
    return ohdet::parse_matrix("1 1 1\n1 -1 1\n1 1 -1\n");
}

inline ohdet::IncidenceStructure example4_raw() {
    return ohdet::parse_matrix("-1 1 -1 1\n-1 -1 -1 -1\n-1 1 1 -1\n1 1 -1 -1\n");
}

inline ohdet::IncidenceStructure all_plus(int n) {
    ohdet::IncidenceStructure H(n, n);
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e) H.set_entry(v, e, 1);
    return H;
}

inline ohdet::IncidenceStructure random_full(int n, std::mt19937& rng) {
    ohdet::IncidenceStructure H(n, n);
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e) H.set_entry(v, e, rng() & 1 ? 1 : -1);
    return H;
}

/// Full {+-1} matrix from the bits of `mask`, row-major.
inline ohdet::IncidenceStructure from_mask(int n, unsigned mask) {
    ohdet::IncidenceStructure H(n, n);
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e)
            H.set_entry(v, e, mask >> (v * n + e) & 1 ? -1 : 1);
    return H;
}

/// Independent determinant oracle: naive permutation expansion.
inline mpz_class naive_det(const ohdet::ExactMatrix& M) {
    const int n = M.dim();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class det = 0;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        mpz_class term = sign;
        for (int i = 0; i < n; ++i) term *= M.at(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? mpz_class(1) : det;
}

inline mpz_class naive_det(const ohdet::IncidenceStructure& H) {
    return naive_det(ohdet::to_exact(H));
}

inline std::vector<int> id_tail(int n) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    return t;
}

} // namespace testutil
