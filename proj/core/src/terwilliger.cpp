#include "sjb/terwilliger.hpp"

#include "sjb/boolean_fast.hpp"
#include "sjb/parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sjb {

namespace {

mpz_class zbinom(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long llbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    long long r = 1;
    for (int a = 1; a <= k; ++a)
        r = r * (n - k + a) / a;
    return r;
}

std::vector<std::uint32_t> submasks_of_size(std::uint32_t set, int size) {
    std::vector<int> bits;
    for (std::uint32_t s = set; s; s &= s - 1)
        bits.push_back(std::countr_zero(s));
    std::vector<std::uint32_t> out;
    if (size < 0 || size > static_cast<int>(bits.size()))
        return out;
    if (size == 0)
        return {0u};
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int a = 0; a < size; ++a)
        idx[static_cast<std::size_t>(a)] = a;
    const int nb = static_cast<int>(bits.size());
    for (;;) {
        std::uint32_t m = 0;
        for (int a : idx)
            m |= 1u << bits[static_cast<std::size_t>(a)];
        out.push_back(m);
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == nb - size + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int a = pos + 1; a < size; ++a)
            idx[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a - 1)] + 1;
    }
    return out;
}

// Row-major dense dim x dim oracle for small n.
std::vector<long long> dense_mtij(int n, int i, int j, int t) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<long long> m(dim * dim, 0);
    for (std::uint32_t x = 0; x < dim; ++x)
        for (std::uint32_t y = 0; y < dim; ++y)
            if (std::popcount(x) == i && std::popcount(y) == j &&
                std::popcount(x & y) == t)
                m[x * dim + y] = 1;
    return m;
}

std::vector<long long> dense_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b, std::size_t dim) {
    std::vector<long long> c(dim * dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) {
            long long arir = a[r * dim + k];
            if (arir == 0)
                continue;
            for (std::size_t col = 0; col < dim; ++col)
                c[r * dim + col] += arir * b[k * dim + col];
        }
    return c;
}

} // namespace

std::vector<std::uint32_t> mtij_images(int n, int i, int j, int t, std::uint32_t y) {
    std::vector<std::uint32_t> out;
    if (std::popcount(y) != j)
        return out;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto ts = submasks_of_size(y, t);
    auto ss = submasks_of_size(~y & full, i - t);
    out.reserve(ts.size() * ss.size());
    for (auto tm : ts)
        for (auto sm : ss)
            out.push_back(tm | sm);
    return out;
}

MtijApply apply_mtij(const TerwilligerElement& m, const PosetVector& v) {
    MtijApply out;
    if (!m.valid()) {
        out.valid = false;
        return out;
    }
    std::vector<Term> terms;
    for (const auto& term : v.terms()) {
        auto y = static_cast<std::uint32_t>(term.point);
        for (auto x : mtij_images(m.n, m.i, m.j, m.t, y))
            terms.push_back({static_cast<Point>(x), term.coeff});
    }
    out.vec = PosetVector::from_terms(std::move(terms));
    return out;
}

std::vector<long> block_orders(int n) {
    std::vector<long> p;
    for (int k = 0; k <= n / 2; ++k)
        p.push_back(n - 2 * k + 1);
    return p;
}

std::vector<mpz_class> chain_multiplicities(int n) {
    std::vector<mpz_class> q;
    for (int k = 0; k <= n / 2; ++k)
        q.push_back(zbinom(n, k) - zbinom(n, k - 1));
    return q;
}

AlgebraDimension algebra_dimension(int n) {
    AlgebraDimension out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int t = 0; t <= n; ++t)
                if (TerwilligerElement{n, i, j, t}.valid())
                    ++out.triples;
    out.expected = zbinom(n + 3, 3);
    out.sum_p_sq = 0;
    for (long p : block_orders(n))
        out.sum_p_sq += mpz_class(p) * p;
    out.identity_holds = mpz_class(out.triples) == out.expected && out.sum_p_sq == out.expected;
    return out;
}

DimsTable dims_table(int n) {
    DimsTable d;
    d.n = n;
    d.p = block_orders(n);
    d.q = chain_multiplicities(n);
    d.sum_p_sq = 0;
    d.sum_pq = 0;
    for (std::size_t k = 0; k < d.p.size(); ++k) {
        d.sum_p_sq += mpz_class(d.p[k]) * d.p[k];
        d.sum_pq += mpz_class(d.p[k]) * d.q[k];
    }
    d.binom_n3_3 = zbinom(n + 3, 3);
    d.two_n = mpz_class(1) << n;
    return d;
}

std::vector<TerwilligerElement> valid_triples(int n) {
    std::vector<TerwilligerElement> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int t = 0; t <= n; ++t) {
                TerwilligerElement e{n, i, j, t};
                if (e.valid())
                    out.push_back(e);
            }
    return out;
}

VerificationReport verify_product_identity(int n, int i, int j, int t, bool dense_oracle) {
    VerificationReport rep;
    const std::size_t dim = std::size_t{1} << n;
    bool ok = true;
    std::string detail;

    if (dense_oracle) {
        if (n > 6)
            throw std::invalid_argument("dense oracle limited to n <= 6");
        auto lhs = dense_mul(dense_mtij(n, i, t, t), dense_mtij(n, t, j, t), dim);
        std::vector<long long> rhs(dim * dim, 0);
        for (int u = 0; u <= n; ++u) {
            long long c = llbinom(u, t);
            if (c == 0)
                continue;
            auto mu = dense_mtij(n, i, j, u);
            for (std::size_t x = 0; x < dim * dim; ++x)
                rhs[x] += c * mu[x];
        }
        ok = lhs == rhs;
    } else {
        std::vector<long long> lhs(dim, 0), rhs(dim, 0);
        for (std::uint32_t y = 0; y < dim && ok; ++y) {
            if (std::popcount(y) != j)
                continue;
            std::fill(lhs.begin(), lhs.end(), 0);
            std::fill(rhs.begin(), rhs.end(), 0);
            for (auto z : mtij_images(n, t, j, t, y))
                for (auto x : mtij_images(n, i, t, t, z))
                    lhs[x] += 1;
            for (int u = 0; u <= n; ++u) {
                long long c = llbinom(u, t);
                if (c == 0)
                    continue;
                for (auto x : mtij_images(n, i, j, u, y))
                    rhs[x] += c;
            }
            if (lhs != rhs) {
                ok = false;
                detail = "first mismatch at Y mask " + std::to_string(y);
            }
        }
    }
    std::ostringstream name;
    name << "product-identity(i=" << i << ",j=" << j << ",t=" << t << ")";
    rep.add(name.str(), ok, detail);
    return rep;
}

VerificationReport verify_product_identity_all(int n, bool dense_oracle) {
    VerificationReport rep;
    if (dense_oracle && n > 6)
        throw std::invalid_argument("dense oracle limited to n <= 6");
    std::atomic<bool> ok{true};
    std::string detail;
    std::mutex mu;
    std::vector<std::array<int, 3>> params;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int t = 0; t <= n; ++t)
                params.push_back({i, j, t});
    parallel_for(params.size(), [&](std::size_t w) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        auto [i, j, t] = params[w];
        auto r = verify_product_identity(n, i, j, t, dense_oracle);
        if (!r.all_pass()) {
            ok = false;
            std::lock_guard<std::mutex> lock(mu);
            detail = r.first_failure();
        }
    });
    rep.add(dense_oracle ? "product-identity-all-dense" : "product-identity-all-sparse", ok,
            ok ? std::to_string(params.size()) + " parameter triples" : detail);
    return rep;
}

VerificationReport verify_binomial_inversion(int n, bool dense_oracle) {
    VerificationReport rep;
    if (dense_oracle && n > 6)
        throw std::invalid_argument("dense oracle limited to n <= 6");
    const std::size_t dim = std::size_t{1} << n;
    auto triples = valid_triples(n);
    std::atomic<bool> ok{true};
    std::string detail;
    std::mutex mu;

    parallel_for(triples.size(), [&](std::size_t w) {
        if (!ok.load(std::memory_order_relaxed))
            return;
        const auto e = triples[w];
        bool local_ok = true;
        if (dense_oracle) {
            if (n > 6)
                throw std::invalid_argument("dense oracle limited to n <= 6");
            auto lhs = dense_mtij(n, e.i, e.j, e.t);
            std::vector<long long> rhs(dim * dim, 0);
            for (int u = 0; u <= n; ++u) {
                long long c = llbinom(u, e.t);
                if (c == 0)
                    continue;
                long long sign = ((u - e.t) % 2 == 0) ? 1 : -1;
                auto prod = dense_mul(dense_mtij(n, e.i, u, u), dense_mtij(n, u, e.j, u), dim);
                for (std::size_t x = 0; x < dim * dim; ++x)
                    rhs[x] += sign * c * prod[x];
            }
            local_ok = lhs == rhs;
        } else {
            std::vector<long long> lhs(dim, 0), rhs(dim, 0);
            for (std::uint32_t y = 0; y < dim && local_ok; ++y) {
                if (std::popcount(y) != e.j)
                    continue;
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (auto x : mtij_images(n, e.i, e.j, e.t, y))
                    lhs[x] += 1;
                for (int u = 0; u <= n; ++u) {
                    long long c = llbinom(u, e.t);
                    if (c == 0)
                        continue;
                    long long sc = (((u - e.t) % 2 == 0) ? 1 : -1) * c;
                    for (auto z : mtij_images(n, u, e.j, u, y))
                        for (auto x : mtij_images(n, e.i, u, u, z))
                            rhs[x] += sc;
                }
                if (lhs != rhs)
                    local_ok = false;
            }
        }
        if (!local_ok) {
            ok = false;
            std::lock_guard<std::mutex> lock(mu);
            std::ostringstream os;
            os << "failed at (i=" << e.i << ",j=" << e.j << ",t=" << e.t << ")";
            detail = os.str();
        }
    });
    rep.add(dense_oracle ? "binomial-inversion-dense" : "binomial-inversion-sparse", ok,
            ok ? std::to_string(triples.size()) + " valid triples" : detail);
    return rep;
}

mpz_class beta_coefficient(int n, int i, int j, int k, int t) {
    mpz_class acc = 0;
    for (int u = 0; u <= n; ++u) {
        mpz_class term = zbinom(u, t) * zbinom(n - 2 * k, u - k) *
                         zbinom(n - k - u, i - u) * zbinom(n - k - u, j - u);
        if ((u - t) % 2 != 0)
            term = -term;
        acc += term;
    }
    return acc;
}

QuadEntry::QuadEntry(Rational q, mpz_class r) : coeff_(std::move(q)), radicand_(std::move(r)) {
    if (radicand_ <= 0)
        throw std::invalid_argument("QuadEntry: radicand must be positive");
    if (sgn(coeff_) == 0) {
        radicand_ = 1;
        return;
    }
    // Extract square factors: q / sqrt(p^2 m) = (q/p) / sqrt(m).
    for (long p = 2; p < 256; p = (p == 2) ? 3 : p + 2) {
        mpz_class psq = mpz_class(p) * p;
        while (mpz_divisible_p(radicand_.get_mpz_t(), psq.get_mpz_t())) {
            radicand_ /= psq;
            coeff_ /= p;
        }
    }
    if (radicand_ > 1 && mpz_perfect_square_p(radicand_.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), radicand_.get_mpz_t());
        coeff_ /= Rational(s);
        radicand_ = 1;
    }
    coeff_.canonicalize();
}

bool QuadEntry::operator==(const QuadEntry& other) const {
    if (is_zero() || other.is_zero())
        return is_zero() == other.is_zero();
    if (sgn(coeff_) != sgn(other.coeff_))
        return false;
    return coeff_ * coeff_ * Rational(other.radicand_) ==
           other.coeff_ * other.coeff_ * Rational(radicand_);
}

double QuadEntry::to_double() const {
    return coeff_.get_d() / std::sqrt(radicand_.get_d());
}

std::string QuadEntry::to_string() const {
    std::string s = coeff_.get_str();
    if (radicand_ != 1)
        s += "/sqrt(" + radicand_.get_str() + ")";
    return s;
}

bool BlockImage::operator==(const BlockImage& other) const {
    if (n != other.n || i != other.i || j != other.j || t != other.t ||
        blocks.size() != other.blocks.size())
        return false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].eligible != other.blocks[k].eligible)
            return false;
        if (!(blocks[k].entry == other.blocks[k].entry))
            return false;
    }
    return true;
}

BlockImage phi_blocks_formula(int n, int i, int j, int t) {
    BlockImage out;
    out.n = n;
    out.i = i;
    out.j = j;
    out.t = t;
    for (int k = 0; k <= n / 2; ++k) {
        BlockImage::Block b;
        b.k = k;
        b.p_k = n - 2 * k + 1;
        b.eligible = (k <= i && i <= n - k && k <= j && j <= n - k);
        if (b.eligible) {
            mpz_class rad = zbinom(n - 2 * k, i - k) * zbinom(n - 2 * k, j - k);
            b.entry = QuadEntry(Rational(beta_coefficient(n, i, j, k, t)), rad);
        }
        out.blocks.push_back(std::move(b));
    }
    return out;
}

NMatrixExact build_n_matrix(SymmetricJordanBasis sjb) {
    const int n = sjb.spec.rank();
    auto q = chain_multiplicities(n);
    auto census = sjb.census();
    if (census.size() != q.size())
        throw std::invalid_argument("build_n_matrix: chain census has wrong shape");
    for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] != static_cast<long>(census[k]))
            throw std::invalid_argument("build_n_matrix: chain census does not match (q_k)");

    NMatrixExact nm{std::move(sjb), {}};
    auto order = nm.sjb.sorted_order();
    int cur_k = -1, b = 0;
    for (std::size_t oi : order) {
        const auto& chain = nm.sjb.chains[oi];
        if (chain.start_rank != cur_k) {
            cur_k = chain.start_rank;
            b = 0;
        }
        ++b;
        for (int off = 0; off < chain.length(); ++off) {
            NMatrixExact::Column col;
            col.k = chain.start_rank;
            col.b = b;
            col.i = chain.start_rank + off;
            col.chain_index = oi;
            col.offset = static_cast<std::size_t>(off);
            const PosetVector& v = nm.vec(col);
            col.norm_sq = inner_product(v, v);
            nm.columns.push_back(std::move(col));
        }
    }
    return nm;
}

ConjugationBlocks phi_blocks_conjugation(const NMatrixExact& nm, int i, int j, int t) {
    ConjugationBlocks out;
    const auto& sjb = nm.sjb;
    const int n = sjb.spec.rank();
    out.image.n = n;
    out.image.i = i;
    out.image.j = j;
    out.image.t = t;
    for (int k = 0; k <= n / 2; ++k) {
        BlockImage::Block b;
        b.k = k;
        b.p_k = n - 2 * k + 1;
        b.eligible = (k <= i && i <= n - k && k <= j && j <= n - k);
        out.image.blocks.push_back(std::move(b));
    }

    std::vector<const NMatrixExact::Column*> rows, cols;
    for (const auto& c : nm.columns) {
        if (c.i == i)
            rows.push_back(&c);
        if (c.i == j)
            cols.push_back(&c);
    }

    // Bridge precondition: |x_u|^2 = |x_k|^2 ((u-k)!)^2 C(n-2k, u-k) for the
    // participating ranks, re-derived from the telescoped ratio law.
    bool bridge_ok = true;
    auto bottom_norm = [&](std::size_t chain_index) {
        const auto& chain = sjb.chains[chain_index];
        return inner_product(chain.vectors.front(), chain.vectors.front());
    };
    auto check_bridge = [&](const NMatrixExact::Column& c) {
        mpz_class fact = 1;
        for (int a = 1; a <= c.i - c.k; ++a)
            fact *= a;
        mpz_class expect = fact * fact * zbinom(n - 2 * c.k, c.i - c.k);
        if (c.norm_sq != bottom_norm(c.chain_index) * Rational(expect))
            bridge_ok = false;
    };
    for (const auto* r : rows)
        check_bridge(*r);
    for (const auto* c : cols)
        check_bridge(*c);
    out.report.add("bridge-norms", bridge_ok);

    bool cross_ok = true, repeated_ok = true;
    std::string cross_detail, repeated_detail;
    std::vector<bool> have_entry(out.image.blocks.size(), false);

    TerwilligerElement elem{n, i, j, t};
    for (const auto* src : cols) {
        PosetVector w = apply_mtij(elem, nm.vec(*src)).vec;
        for (const auto* dst : rows) {
            Rational ip = inner_product(nm.vec(*dst), w);
            if (dst->chain_index != src->chain_index) {
                if (sgn(ip) != 0) {
                    cross_ok = false;
                    std::ostringstream os;
                    os << "nonzero cross term at (k=" << dst->k << ",b=" << dst->b
                       << ") x (k'=" << src->k << ",b'=" << src->b << ")";
                    cross_detail = os.str();
                }
                continue;
            }
            const int k = dst->k;
            mpz_class fi = 1, fj = 1;
            for (int a = 1; a <= i - k; ++a)
                fi *= a;
            for (int a = 1; a <= j - k; ++a)
                fj *= a;
            Rational denom = bottom_norm(dst->chain_index) * Rational(mpz_class(fi * fj));
            QuadEntry entry(ip / denom,
                            zbinom(n - 2 * k, i - k) * zbinom(n - 2 * k, j - k));
            auto& blk = out.image.blocks[static_cast<std::size_t>(k)];
            if (!have_entry[static_cast<std::size_t>(k)]) {
                blk.entry = entry;
                have_entry[static_cast<std::size_t>(k)] = true;
            } else if (!(blk.entry == entry)) {
                repeated_ok = false;
                std::ostringstream os;
                os << "block k=" << k << " differs at b=" << dst->b << ": "
                   << entry.to_string() << " vs " << blk.entry.to_string();
                repeated_detail = os.str();
            }
        }
    }
    out.report.add("cross-terms-vanish", cross_ok, cross_detail);
    out.report.add("repeated-blocks-equal", repeated_ok, repeated_detail);
    return out;
}

} // namespace sjb
