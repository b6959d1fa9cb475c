#pragma once

#include "sjb/poset_vector.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sjb {

/// One sparse row: (column index, coefficient) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct IndependenceResult {
    bool independent = false;
    std::string method; // "rational-elimination" or "modular-rank"
};

/// Exact linear independence of the rows over Q. Small systems run rational
/// Gaussian elimination directly; larger ones use a full-rank-mod-p
/// certificate (full rank mod p implies full rank over Q) with a second
/// prime and a rational fallback when the certificate is inconclusive.
IndependenceResult rows_independent(const std::vector<SparseRow>& rows, std::size_t dim);

/// Rational Gaussian elimination rank (exact, no certificates involved).
std::size_t rational_rank(std::vector<std::vector<Rational>> dense);

/// Eigenvalues of a symmetric dense matrix (row-major, dim x dim) via cyclic
/// Jacobi rotations, ascending. Intended for small blocks.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t dim);

} // namespace sjb
