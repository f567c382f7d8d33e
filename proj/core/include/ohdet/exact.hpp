#pragma once

#include <gmpxx.h>

#include <vector>

#include "ohdet/incidence.hpp"

namespace ohdet {

/// Square matrix of arbitrary-precision integers. No floating point
/// arithmetic anywhere in the library.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, 0) {}

    int dim() const { return n_; }
    const mpz_class& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    mpz_class& at(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const ExactMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<mpz_class> entries_;
};

/// Requires a square incidence structure.
ExactMatrix to_exact(const IncidenceStructure& H);

struct DerivedMatrices {
    ExactMatrix laplacian;  // L = H * H^T
    ExactMatrix degree;     // diagonal of L
    ExactMatrix adjacency;  // A = D - L
};

/// L, D, A for any incidence structure (L is n_vertices x n_vertices).
DerivedMatrices derived_matrices(const IncidenceStructure& H);

/// Exact determinant by fraction-free (Bareiss) elimination with full
/// pivoting. det of the empty 0x0 matrix is 1.
mpz_class exact_determinant(const ExactMatrix& M);

/// Convenience: determinant of a square incidence structure.
mpz_class exact_determinant(const IncidenceStructure& H);

} // namespace ohdet
