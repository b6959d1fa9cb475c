#include "sjb/boolean_sjb.hpp"
#include "sjb/yjm.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sjb;
using testutil::bvec;

TEST_CASE("transpositions act by membership swap") {
    PosetSpec b3 = PosetSpec::boolean(3);
    auto v = bvec({{{2}, 1}, {{1}, -1}});
    CHECK(transposition_apply(b3, 1, 2, v) == bvec({{{1}, 1}, {{2}, -1}}));
    CHECK(transposition_apply(b3, 1, 2, v) == -v);
    CHECK(transposition_apply(b3, 1, 3, bvec({{{2}, 1}})) == bvec({{{2}, 1}}));
    CHECK_THROWS_AS(transposition_apply(b3, 2, 2, v), std::invalid_argument);
}

TEST_CASE("transpositions are rank-preserving involutions") {
    PosetSpec b5 = PosetSpec::boolean(5);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int a = 1 + static_cast<int>(rng() % 5);
        int b = 1 + static_cast<int>(rng() % 5);
        if (a == b)
            continue;
        std::vector<Term> terms;
        for (Point p : enumerate_rank(b5, 2))
            terms.push_back({p, Rational(static_cast<long>(rng() % 7) - 3)});
        auto v = PosetVector::from_terms(std::move(terms));
        auto w = transposition_apply(b5, a, b, v);
        CHECK(transposition_apply(b5, a, b, w) == v);
        if (!w.is_zero())
            CHECK(homogeneous_rank(b5, w) == 2);
    }
}

TEST_CASE("YJM elements on the worked vectors") {
    PosetSpec b3 = PosetSpec::boolean(3);
    auto v = bvec({{{2}, 1}, {{1}, -1}});

    // X_2 (v) = -v: eigenvalue -1.
    CHECK(yjm_apply(b3, 2, v) == -v);
    // X_3 (v) = v: eigenvalue +1.
    CHECK(yjm_apply(b3, 3, v) == v);
    // X_1 = 0.
    CHECK(yjm_apply(b3, 1, v).is_zero());
    CHECK(yjm_apply(b3, 1, bvec({{{1, 2}, 7}})).is_zero());
}

TEST_CASE("verify_gz on O(3): the worked chain has weight (0,-1,1)") {
    auto gz = verify_gz(sjb_boolean(3));
    CHECK(gz.report.all_pass());
    bool found = false;
    for (const auto& cw : gz.table)
        if (cw.weights == std::vector<long>{0, -1, 1})
            found = true;
    CHECK(found);
}

TEST_CASE("the chain from the empty set has weight (0,1,...,n-1)") {
    for (int n : {2, 5}) {
        auto gz = verify_gz(sjb_boolean(n));
        REQUIRE(gz.report.all_pass());
        std::vector<long> expect;
        for (int i = 0; i < n; ++i)
            expect.push_back(i);
        bool found = false;
        for (const auto& cw : gz.table)
            if (cw.k == 0 && cw.weights == expect)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("GZ property holds for n <= 7 with the documented weight census") {
    auto binom = [](int n, int k) -> long {
        if (k < 0 || k > n)
            return 0;
        long r = 1;
        for (int a = 1; a <= k; ++a)
            r = r * (n - k + a) / a;
        return r;
    };
    for (int n = 1; n <= 7; ++n) {
        auto sjb = sjb_boolean(n);
        auto gz = verify_gz(sjb);
        CHECK(gz.report.all_pass());

        // Distinct weights among rank-i vectors = sum_{k <= min(i, n-i)} q_k.
        for (int i = 0; i <= n; ++i) {
            std::set<std::vector<long>> weights;
            for (const auto& cw : gz.table)
                if (cw.k <= i && i <= n - cw.k)
                    weights.insert(cw.weights);
            long expect = 0;
            for (int k = 0; k <= std::min(i, n - i); ++k)
                expect += binom(n, k) - binom(n, k - 1);
            CHECK(static_cast<long>(weights.size()) == expect);
        }
    }
}

TEST_CASE("a non-eigenvector basis is reported with a witness") {
    SymmetricJordanBasis bad{PosetSpec::boolean(2), {}};
    bad.chains.push_back({1, {bvec({{{1}, 1}})}});
    auto gz = verify_gz(bad);
    CHECK(!gz.report.all_pass());
    CHECK(gz.report.first_failure().find("X_2") != std::string::npos);
}
