#pragma once

#include "sjb/btk.hpp"

#include <string>

namespace sjb {

/// Canonical text form: terms sorted by point code (bitmask order on B(n)),
/// unit coefficients elided, e.g. "-{1} - {2} + 2{3}" or "3(2,1) + 3(1,2)".
std::string render_vector(const PosetSpec& spec, const PosetVector& v);

/// One vector per line, two-space indented, under a "chain k=. b=." header.
std::string render_chain(const PosetSpec& spec, const JordanChain& chain, int b);

/// Full basis grouped by start rank (chains sorted by (k, b)), preceded by
/// an "SJB <name>" header line. This is the golden-diff format.
std::string render_sjb(const SymmetricJordanBasis& sjb);

} // namespace sjb
