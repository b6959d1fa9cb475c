#pragma once

#include "sjb/btk.hpp"

#include <optional>

namespace sjb {

/// H(v_i) = (2i - n) v_i on V(B(n)), extended rank by rank to
/// non-homogeneous input.
PosetVector h_apply(const PosetSpec& spec, const PosetVector& v);

/// Commutator identities [H,U] = 2U, [H,D] = -2D, [U,D] = H as operator
/// equations on the standard basis of V(B(n)). Exhaustive when sample is
/// empty; otherwise checks `*sample` pseudo-randomly chosen basis points
/// (fixed seed).
VerificationReport verify_sl2(int n, std::optional<std::size_t> sample = std::nullopt);

/// Down-action law D(x_u) = (u-k)(n-k-u+1) x_{u-1} on every chain of a
/// Boolean SJB; violations are reported with (chain, u) and both sides.
VerificationReport verify_down_action(const SymmetricJordanBasis& sjb);

/// DU(x_u) = (u+1-k)(n-k-u) x_u on every chain vector.
VerificationReport verify_du_eigen(const SymmetricJordanBasis& sjb);

} // namespace sjb
