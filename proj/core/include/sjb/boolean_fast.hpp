#pragma once

#include "sjb/btk.hpp"

#include <cstdint>
#include <vector>

namespace sjb::fastb {

/// Machine-integer term of a Boolean SJB vector. Coefficients of the y/z
/// recursion stay below n!, so int64 is exact for every supported n; the
/// builder asserts the bound as it goes.
struct ITerm {
    std::uint32_t mask;
    std::int64_t coeff;
};

/// One symmetric Jordan chain of O(n) with int64 coefficients. Vectors are
/// term lists sorted by mask.
struct IntChain {
    int start_rank = 0;
    std::vector<std::vector<ITerm>> vectors;

    int end_rank() const { return start_rank + static_cast<int>(vectors.size()) - 1; }
};

/// O(n) via the Boolean y/z recursion, chains in emission order (for each
/// O(n-1) chain: y-chain then z-chain; middle singletons extend to (x, xbar)).
/// This matches sjb_product on B(n) vector for vector. Supported for
/// 1 <= n <= 16 (term counts grow ~3.7x per level; beyond that the basis no
/// longer fits in memory).
std::vector<IntChain> build_chains(int n);

/// Exact-rational view of the fast chains, emission order preserved.
SymmetricJordanBasis to_sjb(int n, const std::vector<IntChain>& chains);

/// Jordan property, chain symmetry, per-rank counts, and the q_k census,
/// all in integer arithmetic.
VerificationReport verify_jordan(int n, const std::vector<IntChain>& chains);

/// Pairwise orthogonality, exact, restricted to same-rank pairs (cross-rank
/// pairs are orthogonal because supports are rank-homogeneous).
VerificationReport verify_orthogonality(int n, const std::vector<IntChain>& chains);

/// Squared singular-value law |x_{u+1}|^2 = (u+1-k)(n-k-u)|x_u|^2, the
/// telescoped closed form |x_u|^2 = |x_k|^2 ((u-k)!)^2 C(n-2k,u-k), and
/// uniformity of profiles across chains with equal start rank.
VerificationReport verify_norm_ratios(int n, const std::vector<IntChain>& chains);

/// Down-action law D(x_u) = (u-k)(n-k-u+1) x_{u-1} on every chain.
VerificationReport verify_down_action(int n, const std::vector<IntChain>& chains);

/// Squared norms of one chain's vectors as exact integers.
std::vector<mpz_class> chain_norms_sq(const IntChain& chain);

} // namespace sjb::fastb
