#include "sjb/boolean_sjb.hpp"

#include "sjb/boolean_fast.hpp"
#include "sjb/parallel.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sjb {

SymmetricJordanBasis sjb_boolean(int n) {
    if (n < 1 || n > 63)
        throw std::invalid_argument("sjb_boolean: need 1 <= n <= 63");
    return fastb::to_sjb(n, fastb::build_chains(n));
}

VerificationReport verify_orthogonality(const SymmetricJordanBasis& sjb) {
    VerificationReport rep;
    rep.add("orthogonality-scope", true,
            "restricted to same-rank pairs; cross-rank pairs vanish because supports "
            "are rank-homogeneous");

    // Flatten to (rank, vector*) pairs grouped by rank.
    const int rp = sjb.spec.rank();
    std::vector<std::vector<const PosetVector*>> by_rank(static_cast<std::size_t>(rp) + 1);
    std::vector<std::vector<std::size_t>> chain_of(static_cast<std::size_t>(rp) + 1);
    for (std::size_t ci = 0; ci < sjb.chains.size(); ++ci) {
        const auto& chain = sjb.chains[ci];
        for (int i = 0; i < chain.length(); ++i) {
            by_rank[static_cast<std::size_t>(chain.start_rank + i)].push_back(
                &chain.vectors[static_cast<std::size_t>(i)]);
            chain_of[static_cast<std::size_t>(chain.start_rank + i)].push_back(ci);
        }
    }

    std::atomic<bool> ok{true};
    std::string witness;
    std::mutex mu;
    parallel_for(by_rank.size(), [&](std::size_t r) {
        const auto& vecs = by_rank[r];
        for (std::size_t a = 0; a < vecs.size() && ok; ++a)
            for (std::size_t b = a + 1; b < vecs.size(); ++b) {
                Rational ip = inner_product(*vecs[a], *vecs[b]);
                if (sgn(ip) != 0) {
                    ok = false;
                    std::lock_guard<std::mutex> lock(mu);
                    std::ostringstream os;
                    os << "rank " << r << ": chains " << chain_of[r][a] << " and "
                       << chain_of[r][b] << " have <v,w> = " << ip.get_str();
                    witness = os.str();
                    break;
                }
            }
    });
    rep.add("orthogonality", ok, witness);
    return rep;
}

NormProfileResult norm_profile(const PosetSpec& spec, const JordanChain& chain) {
    NormProfileResult out;
    out.profile.k = chain.start_rank;
    const int n = spec.rank();
    const int k = chain.start_rank;
    for (const auto& v : chain.vectors)
        out.profile.squared_norms.push_back(inner_product(v, v));

    bool ok = true;
    std::string detail;
    for (std::size_t u = 0; u + 1 < out.profile.squared_norms.size(); ++u) {
        int uu = k + static_cast<int>(u);
        Rational expect = out.profile.squared_norms[u] * ((uu + 1 - k) * (n - k - uu));
        if (out.profile.squared_norms[u + 1] != expect) {
            ok = false;
            std::ostringstream os;
            os << "(k=" << k << ", u=" << uu << ", expected=" << expect.get_str()
               << ", actual=" << out.profile.squared_norms[u + 1].get_str() << ")";
            detail = os.str();
            break;
        }
    }
    out.report.add("norm-ratio-law", ok, detail);
    return out;
}

VerificationReport verify_norm_profiles(const SymmetricJordanBasis& sjb) {
    VerificationReport rep;
    const int n = sjb.spec.rank();
    bool ratio_ok = true, closed_ok = true, uniform_ok = true;
    std::string detail;
    std::map<int, ChainNormProfile> first_at_k;
    for (const auto& chain : sjb.chains) {
        auto res = norm_profile(sjb.spec, chain);
        if (!res.report.all_pass()) {
            ratio_ok = false;
            detail = res.report.first_failure();
        }
        const int k = chain.start_rank;
        const auto& nsq = res.profile.squared_norms;
        for (std::size_t u = 0; u < nsq.size(); ++u) {
            mpz_class fact = 1;
            for (std::size_t i = 1; i <= u; ++i)
                fact *= static_cast<unsigned long>(i);
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - 2 * k),
                         static_cast<unsigned long>(u));
            if (nsq[u] != nsq[0] * Rational(mpz_class(fact * fact * b)))
                closed_ok = false;
        }
        auto [it, inserted] = first_at_k.emplace(k, res.profile);
        if (!inserted) {
            const auto& ref = it->second.squared_norms;
            for (std::size_t u = 0; u < nsq.size(); ++u)
                if (nsq[u] * ref[0] != ref[u] * nsq[0])
                    uniform_ok = false;
        }
    }
    rep.add("norm-ratio-law", ratio_ok, detail);
    rep.add("norm-closed-form", closed_ok);
    rep.add("norm-uniformity", uniform_ok);
    return rep;
}

} // namespace sjb
