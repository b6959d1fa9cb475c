#include "sjb/operators.hpp"
#include "sjb/poset.hpp"
#include "sjb/poset_vector.hpp"

#include "oracle.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace sjb;
using testutil::bvec;
using testutil::vec;

TEST_CASE("spec basics") {
    PosetSpec b4 = PosetSpec::boolean(4);
    CHECK(b4.rank() == 4);
    CHECK(b4.size() == 16);
    CHECK(b4.is_boolean());
    CHECK(b4.name() == "B(4)");

    PosetSpec m(std::vector<int>{2, 2});
    CHECK(m.rank() == 4);
    CHECK(m.size() == 9);
    CHECK(!m.is_boolean());
    CHECK(m.name() == "M(2,2,2)");

    CHECK_THROWS_AS(PosetSpec(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(PosetSpec::boolean(0), std::invalid_argument);
    CHECK_THROWS_AS(PosetSpec::boolean(64), std::invalid_argument);
}

TEST_CASE("enumerate_rank matches the worked examples") {
    // B(4), rank 2: the six 2-element subsets, bitmask order.
    auto pts = enumerate_rank(PosetSpec::boolean(4), 2);
    CHECK(pts == std::vector<Point>{3, 5, 6, 9, 10, 12});

    // M(2,2,2), rank 2: (2,0), (1,1), (0,2) in that order.
    PosetSpec m222(std::vector<int>{2, 2});
    auto pts2 = enumerate_rank(m222, 2);
    REQUIRE(pts2.size() == 3);
    CHECK(m222.decode(pts2[0]) == std::vector<int>{2, 0});
    CHECK(m222.decode(pts2[1]) == std::vector<int>{1, 1});
    CHECK(m222.decode(pts2[2]) == std::vector<int>{0, 2});

    // M(1,5), rank 0: the unique minimum.
    PosetSpec m15(std::vector<int>{5});
    CHECK(enumerate_rank(m15, 0) == std::vector<Point>{0});

    // Out of range is empty, not an error.
    CHECK(enumerate_rank(m15, 6).empty());
    CHECK(enumerate_rank(m15, -1).empty());
}

TEST_CASE("rank sizes come from the generating function and are symmetric") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<int> bounds;
        for (int i = 0; i < n; ++i)
            bounds.push_back(static_cast<int>(rng() % 4));
        PosetSpec spec(bounds);
        auto sizes = rank_sizes(spec);
        REQUIRE(sizes.size() == static_cast<std::size_t>(spec.rank()) + 1);
        std::uint64_t total = 0;
        for (int i = 0; i <= spec.rank(); ++i) {
            CHECK(sizes[static_cast<std::size_t>(i)] ==
                  enumerate_rank(spec, i).size());
            CHECK(sizes[static_cast<std::size_t>(i)] ==
                  sizes[static_cast<std::size_t>(spec.rank() - i)]);
            total += sizes[static_cast<std::size_t>(i)];
        }
        CHECK(total == spec.size());
    }
}

TEST_CASE("up operator on the worked examples") {
    PosetSpec b3 = PosetSpec::boolean(3);
    CHECK(up_apply(b3, bvec({{{1, 2}, 1}})) == bvec({{{1, 2, 3}, 1}}));

    PosetSpec m222(std::vector<int>{2, 2});
    CHECK(up_apply(m222, vec(m222, {{{2, 2}, 1}})).is_zero());

    // U^2((0,0)) = (2,0) + 2(1,1) + (0,2)
    auto u2 = up_apply(m222, up_apply(m222, vec(m222, {{{0, 0}, 1}})));
    CHECK(u2 == vec(m222, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
}

TEST_CASE("down operator and one-step adjointness") {
    PosetSpec b3 = PosetSpec::boolean(3);
    CHECK(down_apply(b3, bvec({{{}, 1}})).is_zero());
    CHECK(down_apply(b3, bvec({{{1, 2}, 1}})) == bvec({{{1}, 1}, {{2}, 1}}));

    PosetSpec b2 = PosetSpec::boolean(2);
    auto empty = bvec({{{}, 1}});
    auto one = bvec({{{1}, 1}});
    CHECK(inner_product(up_apply(b2, empty), one) == 1);
    CHECK(inner_product(empty, down_apply(b2, one)) == 1);
}

TEST_CASE("inner product examples, with the frozen oracle value") {
    CHECK(inner_product(bvec({{{1}, 1}, {{2}, 1}}), bvec({{{2}, 1}, {{1}, -1}})) == 0);

    // <3{4}-{1}-{2}-{3}, itself> = 9+1+1+1 = 12 (dense-dot oracle agrees).
    auto v = bvec({{{4}, 3}, {{1}, -1}, {{2}, -1}, {{3}, -1}});
    CHECK(inner_product(v, v) == 12);
    {
        oracle::Dense dv(16, mpq_class(0));
        dv[0b1000] = 3;
        dv[0b0001] = -1;
        dv[0b0010] = -1;
        dv[0b0100] = -1;
        CHECK(oracle::dot(dv, dv) == 12);
    }

    PosetVector zero;
    CHECK(inner_product(zero, zero) == 0);
}

TEST_CASE("adjointness of U and D, exhaustive through n = 6") {
    for (int n = 1; n <= 6; ++n) {
        PosetSpec spec = PosetSpec::boolean(n);
        for (int r = 0; r + 1 <= spec.rank(); ++r) {
            for (Point p : enumerate_rank(spec, r))
                for (Point q : enumerate_rank(spec, r + 1)) {
                    auto vp = PosetVector::unit(p);
                    auto vq = PosetVector::unit(q);
                    CHECK(inner_product(up_apply(spec, vp), vq) ==
                          inner_product(vp, down_apply(spec, vq)));
                }
        }
    }
}

TEST_CASE("adjointness on random vectors of a mixed-bounds poset") {
    PosetSpec spec(std::vector<int>{3, 2, 2});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int r = static_cast<int>(rng() % spec.rank());
        auto vr = enumerate_rank(spec, r);
        auto wr = enumerate_rank(spec, r + 1);
        std::vector<Term> vt, wt;
        for (Point p : vr)
            vt.push_back({p, Rational(static_cast<long>(rng() % 7) - 3)});
        for (Point q : wr)
            wt.push_back({q, Rational(static_cast<long>(rng() % 7) - 3)});
        auto v = PosetVector::from_terms(std::move(vt));
        auto w = PosetVector::from_terms(std::move(wt));
        CHECK(inner_product(up_apply(spec, v), w) == inner_product(v, down_apply(spec, w)));
    }
}

TEST_CASE("up operator agrees with the dense cover-relation oracle") {
    std::vector<int> bounds{2, 1, 3};
    PosetSpec spec(bounds);
    auto pts = oracle::all_points(bounds);
    auto up = oracle::up_matrix(bounds);
    // Oracle odometer order coincides with code order by construction.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        oracle::Dense dv(pts.size(), mpq_class(0));
        std::vector<Term> terms;
        for (std::size_t idx = 0; idx < pts.size(); ++idx) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c == 0)
                continue;
            dv[idx] = c;
            terms.push_back({spec.encode(pts[idx]), Rational(c)});
        }
        auto lib = up_apply(spec, PosetVector::from_terms(std::move(terms)));
        auto ref = oracle::apply(up, dv);
        for (std::size_t idx = 0; idx < pts.size(); ++idx)
            CHECK(lib.coeff_of(spec.encode(pts[idx])) == ref[idx]);
    }
}

TEST_CASE("U is nilpotent of index at most r(P)+1") {
    for (const auto& bounds : {std::vector<int>{1, 1, 1, 1, 1}, std::vector<int>{2, 1, 3}}) {
        PosetSpec spec(bounds);
        std::mt19937 rng(23);
        std::vector<Term> terms;
        for (Point p = 0; p < spec.size(); ++p)
            terms.push_back({p, Rational(static_cast<long>(rng() % 9) - 4)});
        PosetVector v = PosetVector::from_terms(std::move(terms));
        for (int step = 0; step <= spec.rank(); ++step)
            v = up_apply(spec, v);
        CHECK(v.is_zero());
    }
}

TEST_CASE("vector normal form and integrality") {
    PosetSpec b2 = PosetSpec::boolean(2);
    auto v = PosetVector::from_terms({{0, Rational(1)}, {0, Rational(-1)}, {1, Rational(2)}});
    CHECK(v.support_size() == 1);
    CHECK(v.coeff_of(1) == 2);
    CHECK(v.coeff_of(0) == 0);
    CHECK(v.integral());
    auto w = v.scaled(Rational(1, 2));
    CHECK(w.integral());
    auto x = v.scaled(Rational(1, 3));
    CHECK(!x.integral());
    CHECK(homogeneous_rank(b2, v) == 1);
    CHECK(!homogeneous_rank(b2, v + PosetVector::unit(0)).has_value());
}
