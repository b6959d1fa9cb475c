#pragma once

#include "sjb/btk.hpp"

namespace sjb {

/// Substitution action of the transposition (a b) on V(B(n)): exchanges
/// membership of a and b in every subset. An involution preserving rank.
PosetVector transposition_apply(const PosetSpec& spec, int a, int b, const PosetVector& v);

/// Young-Jucys-Murphy element X_i = (1,i) + (2,i) + ... + (i-1,i); X_1 = 0.
PosetVector yjm_apply(const PosetSpec& spec, int i, const PosetVector& v);

/// Eigenvalues (a_1..a_n) of X_1..X_n on the vectors of one chain; a_1 = 0.
struct ChainWeights {
    int k = 0, b = 0;
    std::vector<long> weights;
};

struct GzResult {
    std::vector<ChainWeights> table; // sorted by (k, b)
    VerificationReport report;
};

/// Checks that every vector of O(n) is a simultaneous eigenvector of all
/// X_i with integer eigenvalues, that weights are constant along chains and
/// distinct across chains with the same start rank, and that sum_i X_i acts
/// as a scalar on each chain.
GzResult verify_gz(const SymmetricJordanBasis& sjb);

} // namespace sjb
