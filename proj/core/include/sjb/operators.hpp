#pragma once

#include "sjb/poset_vector.hpp"

namespace sjb {

/// Up operator U: p -> sum of covers of p, extended linearly.
PosetVector up_apply(const PosetSpec& spec, const PosetVector& v);

/// Down operator D: p -> sum of points covered by p; adjoint of U under the
/// standard inner product.
PosetVector down_apply(const PosetSpec& spec, const PosetVector& v);

} // namespace sjb
