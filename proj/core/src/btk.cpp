#include "sjb/btk.hpp"

#include "sjb/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sjb {

namespace {

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

std::size_t SymmetricJordanBasis::total_vectors() const {
    std::size_t n = 0;
    for (const auto& c : chains)
        n += c.vectors.size();
    return n;
}

std::vector<std::size_t> SymmetricJordanBasis::census() const {
    std::vector<std::size_t> q(static_cast<std::size_t>(spec.rank() / 2) + 1, 0);
    for (const auto& c : chains)
        ++q[static_cast<std::size_t>(c.start_rank)];
    return q;
}

std::vector<std::size_t> SymmetricJordanBasis::sorted_order() const {
    std::vector<std::size_t> idx(chains.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return chains[a].start_rank < chains[b].start_rank;
    });
    return idx;
}

JordanChain origin_chain_m2(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("origin_chain_m2: need p, q >= 1");
    PosetSpec m2({p, q});
    JordanChain chain;
    chain.start_rank = 0;
    for (int k = 0; k <= p + q; ++k) {
        std::vector<Term> terms;
        for (int i = std::max(0, k - q); i <= std::min(p, k); ++i) {
            int j = k - i;
            int coords[2] = {i, j};
            terms.push_back({m2.encode(coords), Rational(binom(static_cast<unsigned>(k),
                                                                static_cast<unsigned>(i)))});
        }
        chain.vectors.push_back(PosetVector::from_terms(std::move(terms)));
    }
    return chain;
}

std::vector<std::vector<PosetVector>> reduced_vectors_m2(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("reduced_vectors_m2: need p, q >= 1");
    PosetSpec m2({p, q});
    std::vector<std::vector<PosetVector>> v(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        v[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(q));
        for (int j = 1; j <= q; ++j) {
            int a[2] = {i, j};
            int b[2] = {i + 1, j - 1};
            std::vector<Term> terms;
            terms.push_back({m2.encode(a), Rational(p - i)});
            terms.push_back({m2.encode(b), Rational(-(q - j + 1))});
            v[static_cast<std::size_t>(i)].push_back(PosetVector::from_terms(std::move(terms)));
        }
    }
    return v;
}

SymmetricJordanBasis sjb_m2(int p, int q) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("sjb_m2: need p, q >= 0");
    PosetSpec m2({p, q});
    SymmetricJordanBasis out{m2, {}};
    if (p == 0 || q == 0) {
        // M(2,p,q) is a chain; its characteristic vectors are the SJB.
        JordanChain chain;
        chain.start_rank = 0;
        for (int r = 0; r <= p + q; ++r) {
            int coords[2] = {std::min(r, p), r - std::min(r, p)};
            chain.vectors.push_back(PosetVector::unit(m2.encode(coords)));
        }
        out.chains.push_back(std::move(chain));
        return out;
    }
    out.chains.push_back(origin_chain_m2(p, q));
    auto v = reduced_vectors_m2(p, q);
    SymmetricJordanBasis inner = sjb_m2(p - 1, q - 1);
    PosetSpec prev = inner.spec;
    for (const auto& chain : inner.chains) {
        JordanChain transferred;
        transferred.start_rank = chain.start_rank + 1;
        for (const auto& w : chain.vectors) {
            PosetVector img;
            for (const auto& t : w.terms()) {
                int i = prev.coord(t.point, 0);
                int j = prev.coord(t.point, 1);
                img += v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].scaled(t.coeff);
            }
            transferred.vectors.push_back(std::move(img));
        }
        out.chains.push_back(std::move(transferred));
    }
    return out;
}

SymmetricJordanBasis sjb_product(const PosetSpec& spec) {
    // PosetSpec already rejects n = 0.
    const auto& bounds = spec.bounds();

    // Base: M(1,k_1) is a chain.
    PosetSpec cur({bounds[0]});
    SymmetricJordanBasis basis{cur, {}};
    {
        JordanChain chain;
        chain.start_rank = 0;
        for (int x = 0; x <= bounds[0]; ++x)
            chain.vectors.push_back(PosetVector::unit(static_cast<Point>(x)));
        basis.chains.push_back(std::move(chain));
    }

    for (int c = 1; c < spec.n(); ++c) {
        const std::uint64_t shift = cur.size(); // code step of the new coordinate
        const int kc = bounds[static_cast<std::size_t>(c)];
        PosetSpec next(std::vector<int>(bounds.begin(), bounds.begin() + c + 1));
        SymmetricJordanBasis grown{next, {}};
        std::map<int, SymmetricJordanBasis> m2_cache;

        for (const auto& prev_chain : basis.chains) {
            const int l = prev_chain.length() - 1;
            auto it = m2_cache.find(l);
            if (it == m2_cache.end())
                it = m2_cache.emplace(l, sjb_m2(l, kc)).first;
            const SymmetricJordanBasis& m2 = it->second;

            // U acts on the grid {prev_chain[i] shifted to last coordinate j}
            // exactly as the up operator of M(2, l, kc); transfer its SJB.
            for (const auto& m2_chain : m2.chains) {
                JordanChain lifted;
                lifted.start_rank = prev_chain.start_rank + m2_chain.start_rank;
                for (const auto& w : m2_chain.vectors) {
                    std::vector<Term> terms;
                    for (const auto& t : w.terms()) {
                        int i = m2.spec.coord(t.point, 0);
                        int j = m2.spec.coord(t.point, 1);
                        const PosetVector& wi =
                            prev_chain.vectors[static_cast<std::size_t>(i)];
                        for (const auto& base : wi.terms())
                            terms.push_back({base.point +
                                                 static_cast<std::uint64_t>(j) * shift,
                                             base.coeff * t.coeff});
                    }
                    lifted.vectors.push_back(PosetVector::from_terms(std::move(terms)));
                }
                grown.chains.push_back(std::move(lifted));
            }
        }
        basis = std::move(grown);
        cur = next;
    }
    return basis;
}

VerificationReport verify_sjb(const PosetSpec& spec, const SymmetricJordanBasis& sjb) {
    VerificationReport rep;

    // (a) Jordan property.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t ci = 0; ci < sjb.chains.size() && ok; ++ci) {
            const auto& chain = sjb.chains[ci];
            if (chain.vectors.empty() || chain.vectors.front().is_zero()) {
                ok = false;
                detail = "chain " + std::to_string(ci) + " empty or zero start";
                break;
            }
            for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
                if (chain.vectors[i].is_zero()) {
                    ok = false;
                    detail = "zero vector in chain " + std::to_string(ci);
                    break;
                }
                auto rk = homogeneous_rank(spec, chain.vectors[i]);
                if (!rk || *rk != chain.start_rank + static_cast<int>(i)) {
                    ok = false;
                    detail = "rank mismatch in chain " + std::to_string(ci);
                    break;
                }
                PosetVector up = up_apply(spec, chain.vectors[i]);
                if (i + 1 < chain.vectors.size()) {
                    if (!(up == chain.vectors[i + 1])) {
                        ok = false;
                        detail = "U(v) != next in chain " + std::to_string(ci) +
                                 " at offset " + std::to_string(i);
                        break;
                    }
                } else if (!up.is_zero()) {
                    ok = false;
                    detail = "U(top) != 0 in chain " + std::to_string(ci);
                    break;
                }
            }
        }
        rep.add("jordan", ok, detail);
    }

    // (b) Symmetry of every chain.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t ci = 0; ci < sjb.chains.size(); ++ci) {
            const auto& chain = sjb.chains[ci];
            if (chain.start_rank + chain.end_rank() != spec.rank()) {
                ok = false;
                detail = "chain " + std::to_string(ci) + " spans ranks " +
                         std::to_string(chain.start_rank) + ".." +
                         std::to_string(chain.end_rank());
                break;
            }
        }
        rep.add("symmetry", ok, detail);
    }

    // (c) Per-rank counts.
    auto sizes = rank_sizes(spec);
    std::vector<std::size_t> counts(sizes.size(), 0);
    for (const auto& chain : sjb.chains)
        for (int i = 0; i < chain.length(); ++i) {
            int r = chain.start_rank + i;
            if (r >= 0 && static_cast<std::size_t>(r) < counts.size())
                ++counts[static_cast<std::size_t>(r)];
        }
    {
        bool ok = sjb.total_vectors() == spec.size();
        std::string detail;
        for (std::size_t r = 0; r < sizes.size() && ok; ++r)
            if (counts[r] != sizes[r]) {
                ok = false;
                detail = "rank " + std::to_string(r) + ": " + std::to_string(counts[r]) +
                         " vectors, |P_i| = " + std::to_string(sizes[r]);
            }
        rep.add("rank-counts", ok, detail);
    }

    // (e) Integrality (checked before independence; both orders report the same data).
    {
        bool ok = true;
        for (const auto& chain : sjb.chains)
            for (const auto& v : chain.vectors)
                if (!v.integral()) {
                    ok = false;
                    break;
                }
        rep.add("integrality", ok);
    }

    // (d) Per-rank linear independence over Q.
    {
        bool ok = true;
        std::string detail;
        std::string method;
        for (int r = 0; r <= spec.rank() && ok; ++r) {
            auto points = enumerate_rank(spec, r);
            std::map<Point, std::size_t> col;
            for (std::size_t i = 0; i < points.size(); ++i)
                col[points[i]] = i;
            std::vector<SparseRow> rows;
            bool support_ok = true;
            for (const auto& chain : sjb.chains) {
                int off = r - chain.start_rank;
                if (off < 0 || off >= chain.length())
                    continue;
                SparseRow row;
                for (const auto& t :
                     chain.vectors[static_cast<std::size_t>(off)].terms()) {
                    auto it = col.find(t.point);
                    if (it == col.end()) {
                        support_ok = false;
                        break;
                    }
                    row.emplace_back(it->second, t.coeff);
                }
                rows.push_back(std::move(row));
            }
            if (!support_ok) {
                ok = false;
                detail = "rank " + std::to_string(r) + ": vector support outside rank";
                continue;
            }
            auto res = rows_independent(rows, points.size());
            method = res.method;
            if (!res.independent) {
                ok = false;
                detail = "rank " + std::to_string(r) + " dependent (" + res.method + ")";
            }
        }
        rep.add("independence", ok, ok ? method : detail);
    }

    return rep;
}

} // namespace sjb
