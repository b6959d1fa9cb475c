#pragma once

#include "sjb/boolean_sjb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sjb {

/// M^t_{i,j}: the B(n) x B(n) 0/1 matrix with entry (X,Y) equal to 1 iff
/// |X| = i, |Y| = j, |X cap Y| = t. Stored by its parameters; applied
/// sparsely, never materialized (except in the small-n dense oracle).
struct TerwilligerElement {
    int n = 0, i = 0, j = 0, t = 0;
    bool valid() const {
        return t >= 0 && i - t >= 0 && j - t >= 0 && i + j - t <= n;
    }
};

struct MtijApply {
    PosetVector vec;
    bool valid = true; // false: parameters invalid for n; vec is the zero map's output
};

/// Sparse application: terms of v outside rank j are annihilated; each
/// rank-j point Y maps to the sum of rank-i points X with |X cap Y| = t.
MtijApply apply_mtij(const TerwilligerElement& m, const PosetVector& v);

/// The X masks M^t_{i,j} sends Y to (each with coefficient 1).
std::vector<std::uint32_t> mtij_images(int n, int i, int j, int t, std::uint32_t y);

/// p_k = n - 2k + 1 for k = 0..floor(n/2).
std::vector<long> block_orders(int n);
/// q_k = C(n,k) - C(n,k-1).
std::vector<mpz_class> chain_multiplicities(int n);

struct AlgebraDimension {
    std::uint64_t triples = 0; // count of valid (i,j,t)
    mpz_class expected;        // C(n+3,3)
    mpz_class sum_p_sq;        // sum of p_k^2
    bool identity_holds = false;
};
AlgebraDimension algebra_dimension(int n);

struct DimsTable {
    int n = 0;
    std::vector<long> p;
    std::vector<mpz_class> q;
    mpz_class sum_p_sq, binom_n3_3, sum_pq, two_n;
    bool identities_hold() const { return sum_p_sq == binom_n3_3 && sum_pq == two_n; }
};
DimsTable dims_table(int n);

/// M^t_{i,t} M^t_{t,j} = sum_u C(u,t) M^u_{i,j}, checked on the full rank-j
/// standard basis. dense_oracle materializes both sides as 2^n x 2^n integer
/// matrices (n <= 6) instead of the sparse path.
VerificationReport verify_product_identity(int n, int i, int j, int t, bool dense_oracle = false);
VerificationReport verify_product_identity_all(int n, bool dense_oracle = false);

/// M^t_{i,j} = sum_u (-1)^{u-t} C(u,t) M^u_{i,u} M^u_{u,j} for all valid
/// (i,j,t).
VerificationReport verify_binomial_inversion(int n, bool dense_oracle = false);

/// beta^t_{i,j,k} = sum_u (-1)^{u-t} C(u,t) C(n-2k,u-k) C(n-k-u,i-u) C(n-k-u,j-u).
mpz_class beta_coefficient(int n, int i, int j, int k, int t);

/// Exact scalar q / sqrt(r), r a positive integer. Normal form keeps r
/// squarefree by extracting square factors into q (complete for radicands
/// whose prime factors stay below 256, which covers every binomial product
/// this library produces). Equality is decided by cross-multiplication and
/// never depends on the normal form.
class QuadEntry {
public:
    QuadEntry() : coeff_(0), radicand_(1) {}
    QuadEntry(Rational q, mpz_class r);

    const Rational& coefficient() const { return coeff_; }
    const mpz_class& radicand() const { return radicand_; }
    bool is_zero() const { return sgn(coeff_) == 0; }
    bool operator==(const QuadEntry& other) const;
    double to_double() const;
    std::string to_string() const;

private:
    Rational coeff_;
    mpz_class radicand_;
};

/// Phi(M^t_{i,j}) = (N_0..N_m). Every nonzero block is a scalar multiple of
/// the matrix unit E_{i,j,k}, so each block is stored as its scalar plus the
/// eligibility flag k <= i,j <= n-k.
struct BlockImage {
    int n = 0, i = 0, j = 0, t = 0;
    struct Block {
        int k = 0;
        long p_k = 0;
        bool eligible = false; // k <= i,j <= n-k
        QuadEntry entry;       // value at (row i, col j); zero block otherwise
    };
    std::vector<Block> blocks; // k = 0..floor(n/2)

    bool operator==(const BlockImage& other) const;
};

/// Schrijver's formula: block k is
/// C(n-2k,i-k)^{-1/2} C(n-2k,j-k)^{-1/2} beta^t_{i,j,k} E_{i,j,k}.
BlockImage phi_blocks_formula(int n, int i, int j, int t);

/// Exact columns of the unitary N(n): the SJB vectors ordered by
/// (k,b,i) <_l, with their exact squared norms. Owns the basis. Throws if
/// the chain census does not match (q_k).
struct NMatrixExact {
    SymmetricJordanBasis sjb;
    struct Column {
        int k = 0, b = 0, i = 0;
        std::size_t chain_index = 0;
        std::size_t offset = 0;
        Rational norm_sq;
    };
    std::vector<Column> columns; // sorted by <_l

    const PosetVector& vec(const Column& c) const {
        return sjb.chains[c.chain_index].vectors[c.offset];
    }
};
NMatrixExact build_n_matrix(SymmetricJordanBasis sjb);

/// Conjugation route, square-root free: for every pair of columns at ranks
/// i and j, <x_i^{(k,b)}, M^t_{i,j} x_j^{(k',b')}> must vanish unless
/// (k,b) = (k',b'), and on a chain it equals
/// entry * |x_k|^2 (i-k)! (j-k)! sqrt(C(n-2k,i-k) C(n-2k,j-k)).
/// The returned image is built from those inner products alone (no beta),
/// so comparing it with phi_blocks_formula is a genuine two-route check.
struct ConjugationBlocks {
    BlockImage image;
    VerificationReport report; // bridge norms, cross terms, repeated blocks
};
ConjugationBlocks phi_blocks_conjugation(const NMatrixExact& nm, int i, int j, int t);

// ---- numeric path ----

/// Double-precision normalized columns of N(n), stored per rank.
struct NumericN {
    int n = 0;
    struct RankBlock {
        std::vector<std::uint32_t> points; // masks of this rank, ascending
        std::vector<int> k_of, b_of;       // per column, in (k,b) order
        std::size_t dim = 0, ncols = 0;
        std::vector<double> a; // dim x ncols, column-major
    };
    std::vector<RankBlock> ranks;
};
NumericN build_numeric_n(int n);

/// max |(N^T N - I)| over all entries (per-rank Gram; cross-rank entries are
/// structural zeros because columns are rank-homogeneous).
double unitarity_error(const NumericN& nm);

struct OffblockResult {
    double off_max = 0.0;    // max |entry| outside the predicted positions
    double on_dev_max = 0.0; // max |entry - formula| at predicted positions
};
/// Numeric N^T M^t_{i,j} N restricted to its only structurally nonzero
/// slice (rank-i rows x rank-j columns).
OffblockResult offblock_check(const NumericN& nm, int i, int j, int t);

/// Random nonnegative symmetric combinations sum c_{ijt} M^t_{i,j}, made PSD
/// with a Gershgorin diagonal shift (itself a nonnegative combination via
/// the identity sum_t M^t_{t,t}); conjugates numerically by N(n) and checks
/// that every extracted block is PSD to tol, that duplicate blocks agree,
/// and that off-block entries vanish to tol.
VerificationReport psd_smoke(int n, int combos, double tol, std::uint64_t seed);

/// All valid (i,j,t) for the given n, in lexicographic order.
std::vector<TerwilligerElement> valid_triples(int n);

} // namespace sjb
