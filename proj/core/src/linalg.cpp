#include "sjb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sjb {

namespace {

constexpr std::uint64_t kPrimes[2] = {2147483647ull, 2147483629ull};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Reduces a rational mod p; fails (returns false) if p divides the denominator.
bool reduce_mod(const Rational& q, std::uint64_t p, std::uint64_t& out) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0)
        return false;
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p); // already sign-folded
    out = mulmod(num, powmod(den, p - 2, p), p);
    return true;
}

// Full-rank test of the rows mod p. Returns -1 if some denominator hits p,
// 1 when full rank, 0 otherwise.
int full_rank_mod_p(const std::vector<SparseRow>& rows, std::size_t dim, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::uint64_t> dense(dim, 0);
        for (const auto& [col, coeff] : row) {
            std::uint64_t v;
            if (!reduce_mod(coeff, p, v))
                return -1;
            dense[col] = v;
        }
        m.push_back(std::move(dense));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = powmod(m[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0)
                continue;
            std::uint64_t f = mulmod(m[r][col], inv, p);
            for (std::size_t c = col; c < dim; ++c) {
                std::uint64_t sub = mulmod(f, m[rank][c], p);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank == rows.size() ? 1 : 0;
}

std::size_t rational_rank_rows(const std::vector<SparseRow>& rows, std::size_t dim) {
    std::vector<std::vector<Rational>> dense;
    dense.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rational> d(dim, Rational(0));
        for (const auto& [col, coeff] : row)
            d[col] = coeff;
        dense.push_back(std::move(d));
    }
    return rational_rank(std::move(dense));
}

} // namespace

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty())
        return 0;
    std::size_t dim = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][col];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (sgn(m[r][col]) == 0)
                continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < dim; ++c)
                m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

IndependenceResult rows_independent(const std::vector<SparseRow>& rows, std::size_t dim) {
    if (rows.size() > dim)
        return {false, "count-exceeds-dimension"};
    if (dim <= 128) {
        std::size_t r = rational_rank_rows(rows, dim);
        return {r == rows.size(), "rational-elimination"};
    }
    for (std::uint64_t p : kPrimes) {
        int res = full_rank_mod_p(rows, dim, p);
        if (res == 1)
            return {true, "modular-rank"};
    }
    // Not full rank mod both primes: decide exactly.
    std::size_t r = rational_rank_rows(rows, dim);
    return {r == rows.size(), "rational-elimination"};
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t dim) {
    if (a.size() != dim * dim)
        throw std::invalid_argument("symmetric_eigenvalues: bad dimensions");
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * dim + c]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = r + 1; c < dim; ++c)
                off += at(r, c) * at(r, c);
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t k = 0; k < dim; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace sjb
