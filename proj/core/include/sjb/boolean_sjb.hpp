#pragma once

#include "sjb/btk.hpp"

namespace sjb {

/// O(n): the SJB of V(B(n)) from the Boolean y/z recursion. Equals
/// sjb_product(B(n)) vector for vector under the fixed chain ordering.
/// Rejects n outside 1..63 (bitmask bound); construction is memory-bound
/// well before that.
SymmetricJordanBasis sjb_boolean(int n);

/// Pairwise orthogonality of the basis. Restricted to same-rank pairs
/// (cross-rank pairs vanish because supports are rank-homogeneous); the
/// restriction is stated in the report.
VerificationReport verify_orthogonality(const SymmetricJordanBasis& sjb);

/// Exact squared norms |x_u|^2 along one chain, u = k..n-k.
struct ChainNormProfile {
    int k = 0;
    std::vector<Rational> squared_norms;
};

struct NormProfileResult {
    ChainNormProfile profile;
    VerificationReport report; // squared-ratio law per consecutive pair
};

/// Profile of one chain plus the check
/// |x_{u+1}|^2 = (u+1-k)(n-k-u) |x_u|^2 for every consecutive pair.
/// Mismatches are reported with (k, u, expected, actual).
NormProfileResult norm_profile(const PosetSpec& spec, const JordanChain& chain);

/// Profiles of all chains: ratio law, the telescoped closed form
/// |x_u|^2 = |x_k|^2 ((u-k)!)^2 C(n-2k, u-k), and uniformity across chains
/// of equal start rank.
VerificationReport verify_norm_profiles(const SymmetricJordanBasis& sjb);

} // namespace sjb
