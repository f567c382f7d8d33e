#include "ohdet/transforms.hpp"

#include <stdexcept>

#include "ohdet/exact.hpp"

namespace ohdet {

Standardization standardize(const IncidenceStructure& H) {
    if (!H.is_full()) throw std::invalid_argument("standardize requires a full structure");
    const int n = H.n_vertices();
    Standardization S;
    S.row_signs.assign(n, 1);
    S.col_signs.assign(n, 1);
    for (int v = 0; v < n; ++v)
        if (H.entry(v, 0) == -1) S.row_signs[v] = -1;
    for (int e = 0; e < n; ++e)
        if (S.row_signs[0] * H.entry(0, e) == -1) S.col_signs[e] = -1;
    S.h_std = IncidenceStructure(n, n);
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e)
            S.h_std.set_entry(v, e, S.row_signs[v] * S.col_signs[e] * H.entry(v, e));
    return S;
}

Reduction reduce_to_01(const Standardization& S) {
    const int n = S.h_std.n_vertices();
    if (n < 2) throw std::invalid_argument("reduction needs n >= 2");
    if (!S.h_std.is_standardized())
        throw std::invalid_argument("input is not standardized");

    Reduction R;
    R.h_prime = IncidenceStructure(n - 1, n - 1);
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l)
            R.h_prime.set_entry(k - 1, l - 1, S.h_std.entry(k, l) == 1 ? 0 : 1);

    // second route: pivot on (1,1), take the minor, factor -2
    ExactMatrix pivoted = to_exact(S.h_std);
    for (int k = 1; k < n; ++k)
        for (int l = 0; l < n; ++l)
            pivoted.at(k, l) -= pivoted.at(0, l);
    R.pivot_check = true;
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l) {
            mpz_class minor_entry = pivoted.at(k, l);  // 0 or -2
            if (minor_entry != 0 && minor_entry != -2) R.pivot_check = false;
            mpz_class factored = minor_entry / -2;
            if (factored != R.h_prime.entry(k - 1, l - 1)) R.pivot_check = false;
        }

    R.det_h = exact_determinant(S.h_std);
    R.det_h_prime = exact_determinant(to_exact(R.h_prime));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - 1);
    R.relation_check = abs(R.det_h) == scale * abs(R.det_h_prime);
    return R;
}

BouquetSigns fundamental_bouquet_signs(const IncidenceStructure& H) {
    if (!H.is_full()) throw std::invalid_argument("bouquet requires an n-full structure");
    const int n = H.n_vertices();
    if (n < 2) throw std::invalid_argument("bouquet needs n >= 2");

    BouquetSigns B;
    B.signs.assign(n - 1, std::vector<int>(n - 1, 0));
    for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l)
            B.signs[k - 1][l - 1] =
                H.entry(0, 0) * H.entry(0, l) * H.entry(k, 0) * H.entry(k, l);

    Reduction R = reduce_to_01(standardize(H));
    B.lemma_check = true;
    for (int k = 0; k < n - 1; ++k)
        for (int l = 0; l < n - 1; ++l) {
            bool positive = B.signs[k][l] == 1;
            if (positive != (R.h_prime.entry(k, l) == 0)) B.lemma_check = false;
        }
    return B;
}

long cyclomatic_number(const IncidenceStructure& G) {
    const int nv = G.n_vertices(), ne = G.n_edges();
    long incidences = 0;
    // union-find over nv vertex nodes then ne edge nodes
    std::vector<int> parent(nv + ne);
    for (int i = 0; i < nv + ne; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < nv; ++v)
        for (int e = 0; e < ne; ++e)
            if (G.entry(v, e) != 0) {
                ++incidences;
                parent[find(v)] = find(nv + e);
            }
    long components = 0;
    for (int i = 0; i < nv + ne; ++i)
        if (find(i) == i) ++components;
    return incidences - (nv + ne) + components;
}

} // namespace ohdet
