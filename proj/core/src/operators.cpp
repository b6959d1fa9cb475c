#include "sjb/operators.hpp"

namespace sjb {

PosetVector up_apply(const PosetSpec& spec, const PosetVector& v) {
    std::vector<Term> out;
    out.reserve(v.support_size() * static_cast<std::size_t>(spec.n()));
    for (const auto& t : v.terms())
        for (int i = 0; i < spec.n(); ++i)
            if (spec.coord(t.point, i) < spec.bounds()[static_cast<std::size_t>(i)])
                out.push_back({t.point + spec.step(i), t.coeff});
    return PosetVector::from_terms(std::move(out));
}

PosetVector down_apply(const PosetSpec& spec, const PosetVector& v) {
    std::vector<Term> out;
    out.reserve(v.support_size() * static_cast<std::size_t>(spec.n()));
    for (const auto& t : v.terms())
        for (int i = 0; i < spec.n(); ++i)
            if (spec.coord(t.point, i) > 0)
                out.push_back({t.point - spec.step(i), t.coeff});
    return PosetVector::from_terms(std::move(out));
}

} // namespace sjb
