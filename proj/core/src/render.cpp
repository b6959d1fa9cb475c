#include "sjb/render.hpp"

#include <sstream>

namespace sjb {

std::string render_vector(const PosetSpec& spec, const PosetVector& v) {
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : v.terms()) {
        Rational mag = abs(t.coeff);
        bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1)
            os << mag.get_str();
        os << point_to_string(spec, t.point);
    }
    return os.str();
}

std::string render_chain(const PosetSpec& spec, const JordanChain& chain, int b) {
    std::ostringstream os;
    os << "chain k=" << chain.start_rank << " b=" << b << "\n";
    for (const auto& v : chain.vectors)
        os << "  " << render_vector(spec, v) << "\n";
    return os.str();
}

std::string render_sjb(const SymmetricJordanBasis& sjb) {
    std::ostringstream os;
    os << "SJB " << sjb.spec.name() << "\n";
    auto order = sjb.sorted_order();
    int cur_k = -1, b = 0;
    for (std::size_t oi : order) {
        const auto& chain = sjb.chains[oi];
        if (chain.start_rank != cur_k) {
            cur_k = chain.start_rank;
            b = 0;
        }
        ++b;
        os << render_chain(sjb.spec, chain, b);
    }
    return os.str();
}

} // namespace sjb
