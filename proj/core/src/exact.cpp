#include "ohdet/exact.hpp"

#include <stdexcept>
#include <utility>

namespace ohdet {

ExactMatrix to_exact(const IncidenceStructure& H) {
    if (H.n_vertices() != H.n_edges())
        throw std::invalid_argument("incidence structure is not square");
    ExactMatrix M(H.n_vertices());
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j)
            M.at(i, j) = H.entry(i, j);
    return M;
}

DerivedMatrices derived_matrices(const IncidenceStructure& H) {
    const int n = H.n_vertices();
    DerivedMatrices d{ExactMatrix(n), ExactMatrix(n), ExactMatrix(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class acc = 0;
            for (int e = 0; e < H.n_edges(); ++e)
                acc += H.entry(i, e) * H.entry(j, e);
            d.laplacian.at(i, j) = acc;
        }
    for (int i = 0; i < n; ++i)
        d.degree.at(i, i) = d.laplacian.at(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.adjacency.at(i, j) = d.degree.at(i, j) - d.laplacian.at(i, j);
    return d;
}

mpz_class exact_determinant(const ExactMatrix& M) {
    const int n = M.dim();
    if (n == 0) return 1;
    ExactMatrix a = M;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        // full pivoting: any nonzero pivot keeps the elimination exact
        int pr = -1, pc = -1;
        for (int i = k; i < n && pr < 0; ++i)
            for (int j = k; j < n; ++j)
                if (a.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr < 0) return 0;
        if (pr != k) {
            sign = -sign;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pr, j));
        }
        if (pc != k) {
            sign = -sign;
            for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, pc));
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

mpz_class exact_determinant(const IncidenceStructure& H) {
    return exact_determinant(to_exact(H));
}

} // namespace ohdet
