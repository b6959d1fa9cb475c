#include "sjb/sl2.hpp"

#include <map>
#include <random>
#include <sstream>

namespace sjb {

PosetVector h_apply(const PosetSpec& spec, const PosetVector& v) {
    const int n = spec.rank();
    std::map<int, std::vector<Term>> by_rank;
    for (const auto& t : v.terms())
        by_rank[spec.rank_of(t.point)].push_back(t);
    std::vector<Term> out;
    out.reserve(v.support_size());
    for (auto& [r, terms] : by_rank) {
        Rational f(2 * r - n);
        for (auto& t : terms)
            out.push_back({t.point, t.coeff * f});
    }
    return PosetVector::from_terms(std::move(out));
}

VerificationReport verify_sl2(int n, std::optional<std::size_t> sample) {
    PosetSpec spec = PosetSpec::boolean(n);
    VerificationReport rep;

    std::vector<Point> points;
    if (!sample) {
        points.resize(spec.size());
        for (Point p = 0; p < spec.size(); ++p)
            points[p] = p;
    } else {
        std::mt19937_64 rng(0x5eedu + static_cast<unsigned>(n));
        for (std::size_t i = 0; i < *sample; ++i)
            points.push_back(rng() & (spec.size() - 1));
    }

    bool hu = true, hd = true, ud = true;
    std::string detail;
    for (Point p : points) {
        PosetVector v = PosetVector::unit(p);
        PosetVector uv = up_apply(spec, v);
        PosetVector dv = down_apply(spec, v);
        // [H,U] = 2U
        if (!(h_apply(spec, uv) - up_apply(spec, h_apply(spec, v)) == uv + uv))
            hu = false;
        // [H,D] = -2D
        if (!(h_apply(spec, dv) - down_apply(spec, h_apply(spec, v)) == -(dv + dv)))
            hd = false;
        // [U,D] = H
        if (!(up_apply(spec, dv) - down_apply(spec, uv) == h_apply(spec, v))) {
            ud = false;
            detail = "point " + point_to_string(spec, p);
        }
    }
    rep.add("[H,U]=2U", hu);
    rep.add("[H,D]=-2D", hd);
    rep.add("[U,D]=H", ud, detail);
    rep.add("mode", true,
            sample ? "sampled " + std::to_string(points.size()) + " basis points"
                   : "exhaustive over " + std::to_string(points.size()) + " basis points");
    return rep;
}

VerificationReport verify_down_action(const SymmetricJordanBasis& sjb) {
    VerificationReport rep;
    const int n = sjb.spec.rank();
    bool ok = true;
    std::string detail;
    for (std::size_t ci = 0; ci < sjb.chains.size() && ok; ++ci) {
        const auto& chain = sjb.chains[ci];
        const int k = chain.start_rank;
        for (int i = 0; i < chain.length(); ++i) {
            const int u = k + i;
            PosetVector lhs = down_apply(sjb.spec, chain.vectors[static_cast<std::size_t>(i)]);
            PosetVector rhs;
            if (i > 0)
                rhs = chain.vectors[static_cast<std::size_t>(i - 1)].scaled(
                    Rational((u - k) * (n - k - u + 1)));
            if (!(lhs == rhs)) {
                ok = false;
                std::ostringstream os;
                os << "(chain=" << ci << ", k=" << k << ", u=" << u << ")";
                detail = os.str();
                break;
            }
        }
    }
    rep.add("down-action", ok, detail);
    return rep;
}

VerificationReport verify_du_eigen(const SymmetricJordanBasis& sjb) {
    VerificationReport rep;
    const int n = sjb.spec.rank();
    bool ok = true;
    for (const auto& chain : sjb.chains) {
        const int k = chain.start_rank;
        for (int i = 0; i < chain.length(); ++i) {
            const int u = k + i;
            PosetVector du =
                down_apply(sjb.spec, up_apply(sjb.spec, chain.vectors[static_cast<std::size_t>(i)]));
            PosetVector expect = chain.vectors[static_cast<std::size_t>(i)].scaled(
                Rational((u + 1 - k) * (n - k - u)));
            if (!(du == expect))
                ok = false;
        }
    }
    rep.add("du-eigenvalue", ok);
    return rep;
}

} // namespace sjb
