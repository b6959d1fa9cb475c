#pragma once

#include "sjb/operators.hpp"
#include "sjb/report.hpp"

#include <vector>

namespace sjb {

/// Graded Jordan chain for U: consecutive vectors satisfy U(v_i) = v_{i+1}
/// and U(last) = 0, with ranks increasing by one from start_rank.
struct JordanChain {
    int start_rank = 0;
    std::vector<PosetVector> vectors;

    int length() const { return static_cast<int>(vectors.size()); }
    int end_rank() const { return start_rank + length() - 1; }
};

/// Disjoint union of symmetric Jordan chains forming a basis of V(P).
/// Chains are stored in construction (emission) order; the (k, b) indexing
/// used elsewhere sorts by start rank first, emission order second.
struct SymmetricJordanBasis {
    PosetSpec spec;
    std::vector<JordanChain> chains;

    std::size_t total_vectors() const;
    /// Number of chains starting at each rank k = 0..floor(r(P)/2).
    std::vector<std::size_t> census() const;
    /// Indices into chains, sorted by (start_rank, emission order).
    std::vector<std::size_t> sorted_order() const;
};

/// The chain generated from the origin of M(2,p,q):
/// v(k) = U^k((0,0)) = sum_{i+j=k} C(k,i) (i,j).
JordanChain origin_chain_m2(int p, int q);

/// The reduced vectors v(i,j) = (p-i)(i,j) - (q-j+1)(i+1,j-1) for
/// 0 <= i <= p-1, 1 <= j <= q; result[i][j-1] holds v(i,j).
std::vector<std::vector<PosetVector>> reduced_vectors_m2(int p, int q);

/// SJB of V(M(2,p,q)): the origin chain plus the SJB of V(M(2,p-1,q-1))
/// transferred through (i,j) -> v(i,j+1). Degenerate p or q gives the single
/// chain of characteristic vectors.
SymmetricJordanBasis sjb_m2(int p, int q);

/// SJB of V(M(n,k_1..k_n)) by iterating the two-coordinate construction over
/// coordinates: each chain of the partial basis spans a grid on which U acts
/// as the up operator of M(2, l_m, k_c), and the M(2,..) basis is transferred
/// through that grid. All coefficients are integral.
SymmetricJordanBasis sjb_product(const PosetSpec& spec);

/// Checks (a) the Jordan property on every chain, (b) chain symmetry,
/// (c) per-rank vector counts against |P_i|, (d) per-rank linear
/// independence over Q, (e) integrality of all coefficients.
VerificationReport verify_sjb(const PosetSpec& spec, const SymmetricJordanBasis& sjb);

} // namespace sjb
