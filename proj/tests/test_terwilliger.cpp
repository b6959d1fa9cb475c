#include "sjb/terwilliger.hpp"
#include "sjb/yjm.hpp"

#include "oracle.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sjb;
using testutil::bvec;

TEST_CASE("sparse application on the worked examples") {
    // M^0_{1,1} applied to {1} in B(2) is {2}.
    auto r = apply_mtij({2, 1, 1, 0}, bvec({{{1}, 1}}));
    CHECK(r.valid);
    CHECK(r.vec == bvec({{{2}, 1}}));

    // M^t_{t,t} is the identity on rank-t vectors.
    for (int t = 0; t <= 3; ++t) {
        PosetSpec b5 = PosetSpec::boolean(5);
        for (Point p : enumerate_rank(b5, t)) {
            auto v = PosetVector::unit(p);
            CHECK(apply_mtij({5, t, t, t}, v).vec == v);
        }
    }

    // M^1_{2,1} applied to {1} in B(3) is {1,2} + {1,3}.
    auto s = apply_mtij({3, 2, 1, 1}, bvec({{{1}, 1}}));
    CHECK(s.vec == bvec({{{1, 2}, 1}, {{1, 3}, 1}}));

    // Terms outside rank j are annihilated.
    auto mixed = bvec({{{1}, 1}, {{1, 2}, 5}});
    CHECK(apply_mtij({3, 2, 1, 1}, mixed).vec == s.vec);

    // Invalid parameters: zero map plus a warning flag.
    auto bad = apply_mtij({2, 2, 2, 0}, bvec({{{1, 2}, 1}})); // i+j-t = 4 > 2
    CHECK(!bad.valid);
    CHECK(bad.vec.is_zero());
}

TEST_CASE("sparse application agrees with the dense set-definition oracle") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 5; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int trial = 0; trial < 8; ++trial) {
            int i = static_cast<int>(rng() % (n + 1));
            int j = static_cast<int>(rng() % (n + 1));
            int t = static_cast<int>(rng() % (n + 1));
            if (!TerwilligerElement{n, i, j, t}.valid())
                continue;
            auto m = oracle::mtij_matrix(n, i, j, t);
            oracle::Dense dv(dim, mpq_class(0));
            std::vector<Term> terms;
            for (Point p : enumerate_rank(PosetSpec::boolean(n), j)) {
                long c = static_cast<long>(rng() % 5) - 2;
                dv[p] = c;
                if (c != 0)
                    terms.push_back({p, Rational(c)});
            }
            auto lib = apply_mtij({n, i, j, t}, PosetVector::from_terms(std::move(terms))).vec;
            oracle::Dense ref(dim, mpq_class(0));
            for (std::size_t x = 0; x < dim; ++x)
                for (std::size_t y = 0; y < dim; ++y)
                    if (m[x][y])
                        ref[x] += dv[y];
            for (Point p = 0; p < dim; ++p)
                CHECK(lib.coeff_of(p) == ref[p]);
        }
    }
}

TEST_CASE("algebra dimension: count of (i,j,t) equals C(n+3,3) equals sum p_k^2") {
    auto d1 = algebra_dimension(1);
    CHECK(d1.triples == 4);
    CHECK(d1.expected == 4);
    CHECK(d1.identity_holds);

    auto d2 = algebra_dimension(2);
    CHECK(d2.triples == 10); // hand count: 10 triples at n=2
    CHECK(d2.identity_holds);

    auto d4 = algebra_dimension(4);
    CHECK(d4.triples == 35);
    CHECK(d4.sum_p_sq == 35); // 25 + 9 + 1
    CHECK(d4.identity_holds);

    for (int n = 1; n <= 12; ++n)
        CHECK(algebra_dimension(n).identity_holds);
}

TEST_CASE("dims table identities, including big n") {
    auto d4 = dims_table(4);
    CHECK(d4.p == std::vector<long>{5, 3, 1});
    REQUIRE(d4.q.size() == 3);
    CHECK(d4.q[0] == 1);
    CHECK(d4.q[1] == 3);
    CHECK(d4.q[2] == 2);
    CHECK(d4.sum_p_sq == 35);
    CHECK(d4.sum_pq == 16);
    CHECK(d4.identities_hold());

    auto d1 = dims_table(1);
    CHECK(d1.p == std::vector<long>{2});
    CHECK(d1.sum_p_sq == 4);
    CHECK(d1.sum_pq == 2);
    CHECK(d1.identities_hold());

    for (int n = 1; n <= 50; ++n)
        CHECK(dims_table(n).identities_hold());
}

TEST_CASE("product identity on the worked n=3 case and edge cases") {
    // i=j=1, t=0: both sides send {a} to sum of all singletons.
    CHECK(verify_product_identity(3, 1, 1, 0).all_pass());

    // t > min(i,j): both sides are the zero map.
    PosetSpec b4 = PosetSpec::boolean(4);
    for (Point y : enumerate_rank(b4, 1)) {
        auto lhs = apply_mtij({4, 2, 1, 3}, PosetVector::unit(y));
        CHECK(lhs.vec.is_zero());
    }
    CHECK(verify_product_identity(4, 2, 1, 3).all_pass());
}

TEST_CASE("product identity and binomial inversion, sparse and dense, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(verify_product_identity_all(n, false).all_pass());
        CHECK(verify_product_identity_all(n, true).all_pass());
        CHECK(verify_binomial_inversion(n, false).all_pass());
        CHECK(verify_binomial_inversion(n, true).all_pass());
    }
}

TEST_CASE("binomial inversion evaluated by hand at n=2, i=j=1, t=0") {
    // M^0_{1,1}{1} = {2}; RHS = M^0_{1,0} M^0_{0,1} {1} - M^1_{1,1} {1}.
    auto y = bvec({{{1}, 1}});
    auto lhs = apply_mtij({2, 1, 1, 0}, y).vec;
    auto inner = apply_mtij({2, 0, 1, 0}, y).vec; // -> {}
    auto rhs = apply_mtij({2, 1, 0, 0}, inner).vec - apply_mtij({2, 1, 1, 1}, y).vec;
    CHECK(lhs == bvec({{{2}, 1}}));
    CHECK(rhs == lhs);
}

TEST_CASE("beta closed form on the diagonal: beta^t_{t,t,k} = C(n-2k, t-k)") {
    auto binom = [](long n, long k) -> long {
        if (k < 0 || k > n)
            return 0;
        long r = 1;
        for (long a = 1; a <= k; ++a)
            r = r * (n - k + a) / a;
        return r;
    };
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n / 2; ++k)
            for (int t = k; t <= n - k; ++t)
                CHECK(beta_coefficient(n, t, t, k, t) == binom(n - 2 * k, t - k));
}

TEST_CASE("QuadEntry normal form and exact equality") {
    QuadEntry a(Rational(1), mpz_class(8)); // 1/sqrt(8) = (1/2)/sqrt(2)
    CHECK(a.coefficient() == Rational(1, 2));
    CHECK(a.radicand() == 2);

    QuadEntry b(Rational(3), mpz_class(9)); // 3/3 = 1
    CHECK(b.coefficient() == 1);
    CHECK(b.radicand() == 1);

    CHECK(QuadEntry(Rational(1), mpz_class(2)) == QuadEntry(Rational(2), mpz_class(8)));
    CHECK(!(QuadEntry(Rational(1), mpz_class(2)) == QuadEntry(Rational(-1), mpz_class(2))));
    CHECK(QuadEntry(Rational(0), mpz_class(5)) == QuadEntry());
    CHECK(QuadEntry().is_zero());
    CHECK_THROWS_AS(QuadEntry(Rational(1), mpz_class(0)), std::invalid_argument);

    CHECK(QuadEntry(Rational(3), mpz_class(4)).to_string() == "3/2");
    CHECK(QuadEntry(Rational(1), mpz_class(2)).to_string() == "1/sqrt(2)");
}

TEST_CASE("formula blocks for the identity image are unit entries") {
    auto img = phi_blocks_formula(4, 2, 2, 2);
    REQUIRE(img.blocks.size() == 3);
    for (const auto& b : img.blocks) {
        CHECK(b.eligible);
        CHECK(b.entry == QuadEntry(Rational(1), mpz_class(1)));
    }
    // Out-of-range parameters: all blocks zero.
    auto zero = phi_blocks_formula(4, 5, 2, 2);
    for (const auto& b : zero.blocks)
        CHECK(!b.eligible);
}

TEST_CASE("N(n) columns: count, ordering, and the n=1 orthogonal matrix") {
    auto o4 = sjb_boolean(4);
    auto nm = build_n_matrix(o4);
    CHECK(nm.columns.size() == 16);
    std::vector<std::array<int, 3>> expect = {
        {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {1, 1, 1},
        {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 1},
        {1, 3, 2}, {1, 3, 3}, {2, 1, 2}, {2, 2, 2}};
    REQUIRE(nm.columns.size() == expect.size());
    for (std::size_t c = 0; c < expect.size(); ++c) {
        CHECK(nm.columns[c].k == expect[c][0]);
        CHECK(nm.columns[c].b == expect[c][1]);
        CHECK(nm.columns[c].i == expect[c][2]);
    }

    auto nm1 = build_n_matrix(sjb_boolean(1));
    REQUIRE(nm1.columns.size() == 2);
    CHECK(nm1.columns[0].norm_sq == 1);
    CHECK(nm1.columns[1].norm_sq == 1);
    CHECK(inner_product(nm1.vec(nm1.columns[0]), nm1.vec(nm1.columns[1])) == 0);

    // Census mismatch is rejected.
    SymmetricJordanBasis broken = o4;
    broken.chains.pop_back();
    CHECK_THROWS_AS(build_n_matrix(broken), std::invalid_argument);
}

TEST_CASE("bridge norms: |x_u|^2 = |x_k|^2 ((u-k)!)^2 C(n-2k,u-k) against brute force") {
    for (int n = 1; n <= 7; ++n) {
        auto sjb = sjb_boolean(n);
        for (const auto& chain : sjb.chains) {
            const int k = chain.start_rank;
            Rational bottom = inner_product(chain.vectors[0], chain.vectors[0]);
            for (int off = 0; off < chain.length(); ++off) {
                mpz_class fact = 1;
                for (int a = 1; a <= off; ++a)
                    fact *= a;
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n - 2 * k),
                             static_cast<unsigned long>(off));
                Rational expect = bottom * Rational(mpz_class(fact * fact * bin));
                CHECK(inner_product(chain.vectors[static_cast<std::size_t>(off)],
                                    chain.vectors[static_cast<std::size_t>(off)]) == expect);
            }
        }
    }
}

TEST_CASE("conjugation equals the formula for every valid triple, n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
        auto nm = build_n_matrix(sjb_boolean(n));
        for (const auto& e : valid_triples(n)) {
            auto conj = phi_blocks_conjugation(nm, e.i, e.j, e.t);
            CAPTURE(n);
            CAPTURE(e.i);
            CAPTURE(e.j);
            CAPTURE(e.t);
            CHECK(conj.report.all_pass());
            CHECK(conj.image == phi_blocks_formula(n, e.i, e.j, e.t));
        }
    }
}

TEST_CASE("the specific beta oracle case n=4, i=j=2, k=1, t=1") {
    auto nm = build_n_matrix(sjb_boolean(4));
    auto conj = phi_blocks_conjugation(nm, 2, 2, 1);
    REQUIRE(conj.report.all_pass());
    const auto& blk = conj.image.blocks[1];
    REQUIRE(blk.eligible);
    // Formula value: beta^1_{2,2,1} / sqrt(C(2,1) C(2,1)) must match exactly.
    CHECK(blk.entry == QuadEntry(Rational(beta_coefficient(4, 2, 2, 1, 1)), mpz_class(4)));
}

TEST_CASE("numeric N(n): unitarity and off-block structure at small n") {
    for (int n = 2; n <= 7; ++n) {
        auto nm = build_numeric_n(n);
        CHECK(unitarity_error(nm) < 1e-10);
    }
    auto nm6 = build_numeric_n(6);
    for (const auto& e : valid_triples(6)) {
        auto res = offblock_check(nm6, e.i, e.j, e.t);
        CHECK(res.off_max < 1e-10);
        CHECK(res.on_dev_max < 1e-8);
    }
}

TEST_CASE("PSD smoke test at n = 4 and 6") {
    CHECK(psd_smoke(4, 10, 1e-8, 20250808).all_pass());
    CHECK(psd_smoke(6, 5, 1e-8, 20250809).all_pass());
}

TEST_CASE("M^t_{i,j} commutes with the substitution action (sampled)") {
    // The concrete commutant property: conjugating by a transposition fixes
    // every basis element, checked on random rank-j vectors.
    const int n = 5;
    PosetSpec spec = PosetSpec::boolean(n);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto triples = valid_triples(n);
        const auto& e = triples[rng() % triples.size()];
        int a = 1 + static_cast<int>(rng() % n);
        int b = 1 + static_cast<int>(rng() % n);
        if (a == b)
            continue;
        std::vector<Term> terms;
        for (Point p : enumerate_rank(spec, e.j))
            terms.push_back({p, Rational(static_cast<long>(rng() % 5) - 2)});
        auto v = PosetVector::from_terms(std::move(terms));
        auto lhs = transposition_apply(spec, a, b, apply_mtij(e, v).vec);
        auto rhs = apply_mtij(e, transposition_apply(spec, a, b, v)).vec;
        CHECK(lhs == rhs);
    }
}
