#include "sjb/boolean_fast.hpp"

#include "sjb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sjb::fastb {

namespace {

using I128 = __int128;

std::string i128_str(I128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::int64_t binom64(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

I128 dot(const std::vector<ITerm>& a, const std::vector<ITerm>& b) {
    I128 acc = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mask < b[j].mask)
            ++i;
        else if (b[j].mask < a[i].mask)
            ++j;
        else
            acc += static_cast<I128>(a[i++].coeff) * b[j++].coeff;
    }
    return acc;
}

} // namespace

std::vector<IntChain> build_chains(int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument(
            "fastb::build_chains: supported for 1 <= n <= 16 (memory / int64 bound)");

    std::vector<IntChain> chains;
    chains.push_back({0, {{{0u, 1}}, {{1u, 1}}}});
    std::int64_t max_coeff = 1;

    for (int level = 2; level <= n; ++level) {
        const std::uint32_t top = 1u << (level - 1);
        std::vector<IntChain> next;
        next.reserve(chains.size() * 2);
        for (const auto& chain : chains) {
            const int k = chain.start_rank;
            const int end = chain.end_rank();
            auto x = [&](int u) -> const std::vector<ITerm>* {
                if (u < k || u > end)
                    return nullptr;
                return &chain.vectors[static_cast<std::size_t>(u - k)];
            };
            if (k == end) {
                // Middle singleton: extends to (x_k, xbar_k).
                IntChain ext;
                ext.start_rank = k;
                ext.vectors.push_back(chain.vectors[0]);
                std::vector<ITerm> bar = chain.vectors[0];
                for (auto& t : bar)
                    t.mask |= top;
                ext.vectors.push_back(std::move(bar));
                next.push_back(std::move(ext));
                continue;
            }
            // y_l = x_l + (l-k) xbar_{l-1}, l = k..(level-1-k)+1
            IntChain y;
            y.start_rank = k;
            for (int l = k; l <= level - k; ++l) {
                std::vector<ITerm> vec;
                const auto* xl = x(l);
                const auto* xprev = x(l - 1);
                vec.reserve((xl ? xl->size() : 0) + (xprev ? xprev->size() : 0));
                if (xl)
                    vec.insert(vec.end(), xl->begin(), xl->end());
                if (xprev && l > k) {
                    const std::int64_t f = l - k;
                    for (const auto& t : *xprev) {
                        vec.push_back({t.mask | top, t.coeff * f});
                        if (std::abs(vec.back().coeff) > max_coeff)
                            max_coeff = std::abs(vec.back().coeff);
                    }
                }
                y.vectors.push_back(std::move(vec));
            }
            next.push_back(std::move(y));
            // z_l = (level-k-l) xbar_{l-1} - x_l, l = k+1..level-1-k
            IntChain z;
            z.start_rank = k + 1;
            for (int l = k + 1; l <= level - 1 - k; ++l) {
                std::vector<ITerm> vec;
                const auto* xl = x(l);
                const auto* xprev = x(l - 1);
                vec.reserve((xl ? xl->size() : 0) + (xprev ? xprev->size() : 0));
                if (xl)
                    for (const auto& t : *xl)
                        vec.push_back({t.mask, -t.coeff});
                const std::int64_t f = level - k - l;
                if (xprev)
                    for (const auto& t : *xprev) {
                        vec.push_back({t.mask | top, t.coeff * f});
                        if (std::abs(vec.back().coeff) > max_coeff)
                            max_coeff = std::abs(vec.back().coeff);
                    }
                z.vectors.push_back(std::move(vec));
            }
            next.push_back(std::move(z));
        }
        chains = std::move(next);
        // Headroom for the up/down scatter sums in the verifiers.
        if (max_coeff > (std::int64_t{1} << 62) / (n + 1))
            throw std::overflow_error("fastb::build_chains: coefficient bound exceeded");
    }
    return chains;
}

SymmetricJordanBasis to_sjb(int n, const std::vector<IntChain>& chains) {
    SymmetricJordanBasis out{PosetSpec::boolean(n), {}};
    out.chains.reserve(chains.size());
    for (const auto& chain : chains) {
        JordanChain jc;
        jc.start_rank = chain.start_rank;
        for (const auto& vec : chain.vectors) {
            std::vector<Term> terms;
            terms.reserve(vec.size());
            for (const auto& t : vec)
                terms.push_back({static_cast<Point>(t.mask), Rational(static_cast<long>(t.coeff))});
            jc.vectors.push_back(PosetVector::from_terms(std::move(terms)));
        }
        out.chains.push_back(std::move(jc));
    }
    return out;
}

VerificationReport verify_jordan(int n, const std::vector<IntChain>& chains) {
    VerificationReport rep;
    const std::size_t dim = std::size_t{1} << n;

    std::atomic<bool> ok{true};
    std::atomic<bool> sym_ok{true};
    parallel_for(chains.size(), [&](std::size_t ci) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        const auto& chain = chains[ci];
        if (chain.start_rank + chain.end_rank() != n)
            sym_ok = false;
        std::vector<std::int64_t> scratch(dim, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t vi = 0; vi < chain.vectors.size(); ++vi) {
            const auto& vec = chain.vectors[vi];
            touched.clear();
            for (const auto& t : vec) {
                if (std::popcount(t.mask) != chain.start_rank + static_cast<int>(vi) ||
                    t.coeff == 0) {
                    ok = false;
                    return;
                }
                std::uint32_t free = ~t.mask & ((1u << n) - 1);
                while (free) {
                    std::uint32_t bit = free & (~free + 1);
                    std::uint32_t q = t.mask | bit;
                    if (scratch[q] == 0)
                        touched.push_back(q);
                    scratch[q] += t.coeff;
                    free ^= bit;
                }
            }
            if (vi + 1 < chain.vectors.size()) {
                for (const auto& t : chain.vectors[vi + 1])
                    scratch[t.mask] -= t.coeff;
                for (const auto& t : chain.vectors[vi + 1])
                    if (scratch[t.mask] != 0)
                        ok = false;
            }
            for (std::uint32_t q : touched)
                if (scratch[q] != 0)
                    ok = false;
            // reset
            for (std::uint32_t q : touched)
                scratch[q] = 0;
            if (vi + 1 < chain.vectors.size())
                for (const auto& t : chain.vectors[vi + 1])
                    scratch[t.mask] = 0;
            if (!ok.load(std::memory_order_relaxed))
                return;
        }
    });
    rep.add("jordan", ok);
    rep.add("symmetry", sym_ok);

    // Census and per-rank counts.
    std::vector<std::int64_t> census(static_cast<std::size_t>(n / 2) + 1, 0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::size_t total = 0;
    for (const auto& chain : chains) {
        ++census[static_cast<std::size_t>(chain.start_rank)];
        total += chain.vectors.size();
        for (std::size_t vi = 0; vi < chain.vectors.size(); ++vi)
            ++counts[static_cast<std::size_t>(chain.start_rank) + vi];
    }
    bool census_ok = total == dim;
    for (int k = 0; k <= n / 2; ++k)
        census_ok = census_ok &&
                    census[static_cast<std::size_t>(k)] == binom64(n, k) - binom64(n, k - 1);
    for (int r = 0; r <= n; ++r)
        census_ok = census_ok && counts[static_cast<std::size_t>(r)] == binom64(n, r);
    rep.add("census", census_ok);
    return rep;
}

VerificationReport verify_orthogonality(int n, const std::vector<IntChain>& chains) {
    VerificationReport rep;
    rep.add("orthogonality-scope", true,
            "restricted to same-rank pairs; cross-rank pairs vanish because supports "
            "are rank-homogeneous");

    std::atomic<bool> ok{true};
    std::string witness;
    std::mutex witness_mu;
    parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t r) {
        // Dense columns of every basis vector of rank r.
        std::vector<std::uint32_t> pts;
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == static_cast<int>(r))
                pts.push_back(m);
        std::vector<int> where(std::size_t{1} << n, -1);
        for (std::size_t i = 0; i < pts.size(); ++i)
            where[pts[i]] = static_cast<int>(i);
        std::vector<std::vector<std::int64_t>> cols;
        std::vector<std::pair<std::size_t, std::size_t>> ids; // (chain, offset)
        for (std::size_t ci = 0; ci < chains.size(); ++ci) {
            const auto& chain = chains[ci];
            int off = static_cast<int>(r) - chain.start_rank;
            if (off < 0 || off >= static_cast<int>(chain.vectors.size()))
                continue;
            std::vector<std::int64_t> col(pts.size(), 0);
            for (const auto& t : chain.vectors[static_cast<std::size_t>(off)])
                col[static_cast<std::size_t>(where[t.mask])] = t.coeff;
            cols.push_back(std::move(col));
            ids.emplace_back(ci, static_cast<std::size_t>(off));
        }
        for (std::size_t a = 0; a < cols.size() && ok; ++a)
            for (std::size_t b = a + 1; b < cols.size(); ++b) {
                I128 acc = 0;
                const auto& ca = cols[a];
                const auto& cb = cols[b];
                for (std::size_t i = 0; i < ca.size(); ++i)
                    acc += static_cast<I128>(ca[i]) * cb[i];
                if (acc != 0) {
                    ok = false;
                    std::lock_guard<std::mutex> lock(witness_mu);
                    witness = "rank " + std::to_string(r) + ", chains " +
                              std::to_string(ids[a].first) + " and " +
                              std::to_string(ids[b].first) + ", <.,.> = " + i128_str(acc);
                    break;
                }
            }
    });
    rep.add("orthogonality", ok, witness);
    return rep;
}

std::vector<mpz_class> chain_norms_sq(const IntChain& chain) {
    std::vector<mpz_class> out;
    out.reserve(chain.vectors.size());
    for (const auto& vec : chain.vectors) {
        I128 nsq = dot(vec, vec);
        mpz_class z;
        // I128 -> mpz via two 64-bit words.
        bool neg = nsq < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-nsq)
                                  : static_cast<unsigned __int128>(nsq);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
        z = (hi << 64) + lo;
        if (neg)
            z = -z;
        out.push_back(z);
    }
    return out;
}

VerificationReport verify_norm_ratios(int n, const std::vector<IntChain>& chains) {
    VerificationReport rep;
    std::atomic<bool> ratio_ok{true};
    std::atomic<bool> closed_ok{true};
    std::vector<std::vector<mpz_class>> norms(chains.size());
    parallel_for(chains.size(), [&](std::size_t ci) {
        const auto& chain = chains[ci];
        const int k = chain.start_rank;
        auto nsq = chain_norms_sq(chain);
        for (std::size_t u = 0; u + 1 < nsq.size(); ++u) {
            long uu = k + static_cast<long>(u);
            mpz_class expect = nsq[u] * ((uu + 1 - k) * (n - k - uu));
            if (nsq[u + 1] != expect)
                ratio_ok = false;
        }
        // Telescoped closed form |x_u|^2 = |x_k|^2 ((u-k)!)^2 C(n-2k, u-k).
        for (std::size_t u = 0; u < nsq.size(); ++u) {
            mpz_class fact = 1;
            for (std::size_t i = 1; i <= u; ++i)
                fact *= static_cast<unsigned long>(i);
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - 2 * k),
                         static_cast<unsigned long>(u));
            if (nsq[u] != nsq[0] * fact * fact * b)
                closed_ok = false;
        }
        norms[ci] = std::move(nsq);
    });
    rep.add("norm-ratio-law", ratio_ok);
    rep.add("norm-closed-form", closed_ok);

    // Uniformity across chains of equal start rank (cross-multiplied form).
    bool uniform_ok = true;
    std::map<int, std::size_t> first_at_k;
    for (std::size_t ci = 0; ci < chains.size() && uniform_ok; ++ci) {
        int k = chains[ci].start_rank;
        auto [it, inserted] = first_at_k.emplace(k, ci);
        if (inserted)
            continue;
        const auto& ref = norms[it->second];
        const auto& cur = norms[ci];
        for (std::size_t u = 0; u < cur.size(); ++u)
            if (cur[u] * ref[0] != ref[u] * cur[0])
                uniform_ok = false;
    }
    rep.add("norm-uniformity", uniform_ok);
    return rep;
}

VerificationReport verify_down_action(int n, const std::vector<IntChain>& chains) {
    VerificationReport rep;
    const std::size_t dim = std::size_t{1} << n;
    std::atomic<bool> ok{true};
    parallel_for(chains.size(), [&](std::size_t ci) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        const auto& chain = chains[ci];
        const int k = chain.start_rank;
        std::vector<std::int64_t> scratch(dim, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t vi = 0; vi < chain.vectors.size(); ++vi) {
            const long u = k + static_cast<long>(vi);
            const long factor = (u - k) * (n - k - u + 1);
            touched.clear();
            for (const auto& t : chain.vectors[vi]) {
                std::uint32_t rem = t.mask;
                while (rem) {
                    std::uint32_t bit = rem & (~rem + 1);
                    std::uint32_t q = t.mask ^ bit;
                    if (scratch[q] == 0)
                        touched.push_back(q);
                    scratch[q] += t.coeff;
                    rem ^= bit;
                }
            }
            if (vi > 0)
                for (const auto& t : chain.vectors[vi - 1]) {
                    if (scratch[t.mask] == 0)
                        touched.push_back(t.mask);
                    scratch[t.mask] -= factor * t.coeff;
                }
            for (std::uint32_t q : touched)
                if (scratch[q] != 0)
                    ok = false;
            for (std::uint32_t q : touched)
                scratch[q] = 0;
            if (!ok.load(std::memory_order_relaxed))
                return;
        }
    });
    rep.add("down-action", ok);
    return rep;
}

} // namespace sjb::fastb
