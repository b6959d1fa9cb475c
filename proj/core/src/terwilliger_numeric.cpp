#include "sjb/boolean_fast.hpp"
#include "sjb/linalg.hpp"
#include "sjb/parallel.hpp"
#include "sjb/terwilliger.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

namespace sjb {

NumericN build_numeric_n(int n) {
    auto chains = fastb::build_chains(n);

    // (k, emission order) -> b index per start rank.
    std::vector<std::size_t> order(chains.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return chains[a].start_rank < chains[b].start_rank;
    });

    NumericN nm;
    nm.n = n;
    nm.ranks.resize(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        auto& blk = nm.ranks[static_cast<std::size_t>(r)];
        for (std::uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == r)
                blk.points.push_back(m);
        blk.dim = blk.points.size();
    }

    std::vector<int> where(std::size_t{1} << n);
    for (int r = 0; r <= n; ++r) {
        const auto& pts = nm.ranks[static_cast<std::size_t>(r)].points;
        for (std::size_t idx = 0; idx < pts.size(); ++idx)
            where[pts[idx]] = static_cast<int>(idx);
    }

    int cur_k = -1, b = 0;
    for (std::size_t oi : order) {
        const auto& chain = chains[oi];
        if (chain.start_rank != cur_k) {
            cur_k = chain.start_rank;
            b = 0;
        }
        ++b;
        auto norms = fastb::chain_norms_sq(chain);
        for (std::size_t off = 0; off < chain.vectors.size(); ++off) {
            const int rank = chain.start_rank + static_cast<int>(off);
            auto& blk = nm.ranks[static_cast<std::size_t>(rank)];
            double inv_norm = 1.0 / std::sqrt(norms[off].get_d());
            std::vector<double> col(blk.dim, 0.0);
            for (const auto& t : chain.vectors[off])
                col[static_cast<std::size_t>(where[t.mask])] =
                    static_cast<double>(t.coeff) * inv_norm;
            blk.a.insert(blk.a.end(), col.begin(), col.end());
            blk.k_of.push_back(chain.start_rank);
            blk.b_of.push_back(b);
            ++blk.ncols;
        }
    }
    return nm;
}

double unitarity_error(const NumericN& nm) {
    // Work list (rank, column) to even out the load.
    std::vector<std::pair<int, std::size_t>> tasks;
    for (int r = 0; r < static_cast<int>(nm.ranks.size()); ++r)
        for (std::size_t c = 0; c < nm.ranks[static_cast<std::size_t>(r)].ncols; ++c)
            tasks.emplace_back(r, c);
    std::vector<double> errs(tasks.size(), 0.0);
    parallel_for(tasks.size(), [&](std::size_t w) {
        auto [r, a] = tasks[w];
        const auto& blk = nm.ranks[static_cast<std::size_t>(r)];
        const double* ca = blk.a.data() + a * blk.dim;
        double e = 0;
        for (std::size_t b = a; b < blk.ncols; ++b) {
            const double* cb = blk.a.data() + b * blk.dim;
            double dot = 0;
            for (std::size_t x = 0; x < blk.dim; ++x)
                dot += ca[x] * cb[x];
            double target = (a == b) ? 1.0 : 0.0;
            e = std::max(e, std::abs(dot - target));
        }
        errs[w] = e;
    });
    double out = 0;
    for (double e : errs)
        out = std::max(out, e);
    return out;
}

OffblockResult offblock_check(const NumericN& nm, int i, int j, int t) {
    OffblockResult res;
    const int n = nm.n;
    if (i < 0 || i > n || j < 0 || j > n)
        return res;
    const auto& bi = nm.ranks[static_cast<std::size_t>(i)];
    const auto& bj = nm.ranks[static_cast<std::size_t>(j)];

    std::vector<int> where(std::size_t{1} << n, -1);
    for (std::size_t idx = 0; idx < bi.points.size(); ++idx)
        where[bi.points[idx]] = static_cast<int>(idx);

    // W = M^t_{i,j} * N_j  (dense dim_i x ncols_j).
    std::vector<double> w(bi.dim * bj.ncols, 0.0);
    for (std::size_t yidx = 0; yidx < bj.points.size(); ++yidx) {
        auto xs = mtij_images(n, i, j, t, bj.points[yidx]);
        for (auto x : xs) {
            const std::size_t xrow = static_cast<std::size_t>(where[x]);
            for (std::size_t c = 0; c < bj.ncols; ++c)
                w[c * bi.dim + xrow] += bj.a[c * bj.dim + yidx];
        }
    }

    // G = N_i^T W, checked entry by entry against the predicted structure.
    BlockImage formula = phi_blocks_formula(n, i, j, t);
    for (std::size_t a = 0; a < bi.ncols; ++a) {
        const double* ca = bi.a.data() + a * bi.dim;
        for (std::size_t c = 0; c < bj.ncols; ++c) {
            const double* wc = w.data() + c * bi.dim;
            double dot = 0;
            for (std::size_t x = 0; x < bi.dim; ++x)
                dot += ca[x] * wc[x];
            if (bi.k_of[a] == bj.k_of[c] && bi.b_of[a] == bj.b_of[c]) {
                double expect =
                    formula.blocks[static_cast<std::size_t>(bi.k_of[a])].entry.to_double();
                res.on_dev_max = std::max(res.on_dev_max, std::abs(dot - expect));
            } else {
                res.off_max = std::max(res.off_max, std::abs(dot));
            }
        }
    }
    return res;
}

VerificationReport psd_smoke(int n, int combos, double tol, std::uint64_t seed) {
    VerificationReport rep;
    if (n > 12)
        throw std::invalid_argument("psd_smoke: n too large for the dense path");
    const std::size_t dim = std::size_t{1} << n;
    NumericN nm = build_numeric_n(n);

    // Dense N with columns in global <_l order; remember (k,b,i) per column.
    std::vector<double> ndense(dim * dim, 0.0);
    struct Meta {
        int k, b, i;
    };
    std::vector<Meta> meta;
    meta.reserve(dim);
    {
        // <_l: sort by (k, b, i); columns inside each rank block are already
        // (k, b)-sorted, so gather and sort the references.
        struct Ref {
            int k, b, i;
            std::size_t rank, col;
        };
        std::vector<Ref> refs;
        for (std::size_t r = 0; r < nm.ranks.size(); ++r) {
            const auto& blk = nm.ranks[r];
            for (std::size_t c = 0; c < blk.ncols; ++c)
                refs.push_back({blk.k_of[c], blk.b_of[c], static_cast<int>(r), r, c});
        }
        std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) {
            return std::tie(a.k, a.b, a.i) < std::tie(b.k, b.b, b.i);
        });
        for (std::size_t g = 0; g < refs.size(); ++g) {
            const auto& ref = refs[g];
            const auto& blk = nm.ranks[ref.rank];
            for (std::size_t x = 0; x < blk.dim; ++x)
                ndense[g * dim + blk.points[x]] = blk.a[ref.col * blk.dim + x];
            meta.push_back({ref.k, ref.b, ref.i});
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool psd_ok = true, dup_ok = true, off_ok = true, input_ok = true;
    double worst_margin = 0;

    for (int combo = 0; combo < combos; ++combo) {
        // Symmetric nonnegative coefficients c[i][j][t] = c[j][i][t].
        std::vector<double> c(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)), 0.0);
        auto cref = [&](int ii, int jj, int tt) -> double& {
            return c[static_cast<std::size_t>((ii * (n + 1) + jj) * (n + 1) + tt)];
        };
        for (const auto& e : valid_triples(n))
            if (e.i <= e.j) {
                double v = unif(rng);
                cref(e.i, e.j, e.t) = v;
                cref(e.j, e.i, e.t) = v;
            }

        std::vector<double> a(dim * dim);
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y)
                a[x * dim + y] = cref(std::popcount(static_cast<std::uint32_t>(x)),
                                      std::popcount(static_cast<std::uint32_t>(y)),
                                      std::popcount(static_cast<std::uint32_t>(x & y)));
        // Gershgorin shift: adds lambda * sum_t M^t_{t,t}, still a nonnegative
        // combination, and makes every disc lie in the right half line.
        double lambda = 0;
        for (std::size_t x = 0; x < dim; ++x) {
            double offsum = 0;
            for (std::size_t y = 0; y < dim; ++y)
                if (y != x)
                    offsum += std::abs(a[x * dim + y]);
            lambda = std::max(lambda, offsum - a[x * dim + x]);
        }
        for (std::size_t x = 0; x < dim; ++x)
            a[x * dim + x] += lambda;
        double margin = 1e300;
        for (std::size_t x = 0; x < dim; ++x) {
            double offsum = 0;
            for (std::size_t y = 0; y < dim; ++y)
                if (y != x)
                    offsum += std::abs(a[x * dim + y]);
            margin = std::min(margin, a[x * dim + x] - offsum);
        }
        if (margin < -tol)
            input_ok = false;
        worst_margin = std::min(worst_margin, margin);

        // G = N^T A N.
        std::vector<double> an(dim * dim, 0.0), g(dim * dim, 0.0);
        parallel_for(dim, [&](std::size_t col) {
            for (std::size_t x = 0; x < dim; ++x) {
                double acc = 0;
                const double* arow = a.data() + x * dim;
                const double* ncol = ndense.data() + col * dim;
                for (std::size_t y = 0; y < dim; ++y)
                    acc += arow[y] * ncol[y];
                an[col * dim + x] = acc;
            }
        });
        parallel_for(dim, [&](std::size_t col) {
            for (std::size_t row = 0; row < dim; ++row) {
                double acc = 0;
                const double* nrow = ndense.data() + row * dim;
                const double* acol = an.data() + col * dim;
                for (std::size_t y = 0; y < dim; ++y)
                    acc += nrow[y] * acol[y];
                g[col * dim + row] = acc;
            }
        });

        // Extract blocks: columns with equal (k,b) form one p_k x p_k block.
        const int m = n / 2;
        std::vector<std::vector<double>> first_block(static_cast<std::size_t>(m) + 1);
        for (std::size_t row = 0; row < dim; ++row)
            for (std::size_t col = 0; col < dim; ++col) {
                double v = g[col * dim + row];
                if (meta[row].k == meta[col].k && meta[row].b == meta[col].b)
                    continue;
                if (std::abs(v) > tol)
                    off_ok = false;
            }
        std::size_t pos = 0;
        while (pos < dim) {
            const int k = meta[pos].k, b = meta[pos].b;
            const std::size_t pk = static_cast<std::size_t>(n - 2 * k + 1);
            std::vector<double> blk(pk * pk);
            for (std::size_t r = 0; r < pk; ++r)
                for (std::size_t cc = 0; cc < pk; ++cc)
                    blk[r * pk + cc] = g[(pos + cc) * dim + (pos + r)];
            auto& ref = first_block[static_cast<std::size_t>(k)];
            if (b == 1) {
                ref = blk;
                auto eig = symmetric_eigenvalues(blk, pk);
                if (eig.front() < -tol)
                    psd_ok = false;
            } else {
                for (std::size_t x = 0; x < pk * pk; ++x)
                    if (std::abs(blk[x] - ref[x]) > tol)
                        dup_ok = false;
            }
            pos += pk;
        }
    }

    std::ostringstream os;
    os << combos << " combos, worst Gershgorin margin " << worst_margin;
    rep.add("psd-input-certificate", input_ok, os.str());
    rep.add("psd-blocks", psd_ok);
    rep.add("psd-duplicate-blocks", dup_ok);
    rep.add("psd-offblock", off_ok);
    return rep;
}

} // namespace sjb
